#include "tfde/bench.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "tfde/arnoldi.hpp"
#include "tfde/errors.hpp"
#include "tfde/matrix_market.hpp"
#include "tfde/preconditioners.hpp"

namespace tfde {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* side_name(PreconditionSide s) {
  return s == PreconditionSide::Left ? "left" : "right";
}

std::optional<double> max_error_against(const BenchmarkCase& c,
                                        const std::vector<double>& grid,
                                        const std::vector<double>& u) {
  if (!c.has_reference_solution()) return std::nullopt;
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    err = std::max(err, std::abs(u[i] - c.reference_solution(grid[i])));
  return err;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

LinearOperator make_preconditioner(const BenchmarkCase& c, const DiscreteSystem& sys) {
  switch (c.preconditioner) {
    case PreconditionerKind::Tai: {
      auto p = std::make_shared<const TaiPreconditioner>(build_tai(sys, c.interpolation_points()));
      return [p](std::span<const double> v) { return p->apply(v); };
    }
    case PreconditionerKind::Cai: {
      auto p = std::make_shared<const CaiPreconditioner>(build_cai(sys, c.interpolation_points()));
      return [p](std::span<const double> v) { return p->apply(v); };
    }
    case PreconditionerKind::P2Ref:
      if (sys.size() > kReferenceCap)
        throw RefusalError("p2-ref is limited to N <= " + std::to_string(kReferenceCap));
      return [&sys](std::span<const double> v) { return apply_p2_rowwise(sys, v); };
    case PreconditionerKind::None:
      return {};
  }
  return {};
}

// ---------------------------------------------------------------------------
// solve

SolveReport run_solve(const BenchmarkCase& c) {
  const auto problem = c.problem();
  const auto sys = build_system(problem);
  const auto pinv = make_preconditioner(c, sys);
  SolveReport r;
  r.c = c;
  r.grid = sys.grid;
  r.march = time_march(problem, sys, gmres_solver(sys, pinv, c.gmres_config()));
  if (c.has_reference_solution()) {
    std::vector<double> ref(sys.size());
    for (std::size_t i = 0; i < ref.size(); ++i) ref[i] = c.reference_solution(sys.grid[i]);
    r.reference = std::move(ref);
    r.max_error = max_error_against(c, r.grid, r.march.solution);
  }
  return r;
}

void write_solution_csv(std::ostream& os, const SolveReport& r) {
  os << (r.reference ? "x,u_numeric,u_exact,abs_diff\n" : "x,u_numeric\n");
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    os << csv_number(r.grid[i]) << ',' << csv_number(r.march.solution[i]);
    if (r.reference) {
      const double ex = (*r.reference)[i];
      os << ',' << csv_number(ex) << ',' << csv_number(std::abs(r.march.solution[i] - ex));
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// bench

std::size_t BenchmarkRecord::total_iterations() const {
  std::size_t total = 0;
  for (auto it : per_step_iterations) total += it;
  return total;
}

double BenchmarkRecord::seconds_per_iteration() const {
  const auto total = total_iterations();
  return total == 0 ? 0.0 : march_seconds / static_cast<double>(total);
}

BenchmarkRecord run_benchmark(const BenchmarkCase& c) {
  BenchmarkRecord rec;
  rec.c = c;
  const auto problem = c.problem();
  const auto sys = build_system(problem);

  const auto t0 = Clock::now();
  const auto pinv = make_preconditioner(c, sys);
  rec.setup_seconds = seconds_since(t0);

  const auto t1 = Clock::now();
  MarchOptions opts;
  opts.throw_on_failure = false;
  const auto march = time_march(problem, sys, gmres_solver(sys, pinv, c.gmres_config()), {}, opts);
  rec.march_seconds = seconds_since(t1);
  rec.total_cpu_seconds = rec.setup_seconds + rec.march_seconds;

  for (const auto& s : march.steps) rec.per_step_iterations.push_back(s.iterations);
  rec.avg_iterations = march.average_iterations();
  rec.converged = march.completed;
  if (march.completed) {
    rec.max_error = max_error_against(c, sys.grid, march.solution);
  } else {
    rec.failure = "no convergence at time step " + std::to_string(march.steps.size() - 1);
  }
  return rec;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records) {
  os << "coefficient,N,M,preconditioner,l,beta,lambda,gamma1,tol,maxit,side,"
        "initial_guess,converged,avg_iterations,total_iterations,max_error,"
        "per_step_iterations,config_digest,failure\n";
  for (const auto& r : records) {
    const auto& c = r.c;
    std::string steps;
    for (std::size_t i = 0; i < r.per_step_iterations.size(); ++i) {
      if (i) steps += ';';
      steps += std::to_string(r.per_step_iterations[i]);
    }
    const bool interp = c.preconditioner == PreconditionerKind::Tai ||
                        c.preconditioner == PreconditionerKind::Cai;
    os << csv_field(c.coefficient) << ',' << c.N << ',' << c.time_steps() << ','
       << to_string(c.preconditioner) << ','
       << (interp ? std::to_string(c.interpolation_points()) : std::string()) << ','
       << csv_number(c.beta) << ',' << csv_number(c.lambda) << ',' << csv_number(c.gamma1)
       << ',' << csv_number(c.tol) << ',' << c.maxit << ',' << side_name(c.side) << ",zero,"
       << (r.converged ? "true" : "false") << ',' << csv_number(r.avg_iterations) << ','
       << r.total_iterations() << ','
       << (r.max_error ? csv_number(*r.max_error) : std::string()) << ','
       << csv_field(steps) << ',' << c.digest() << ',' << csv_field(r.failure) << '\n';
  }
}

void write_timing_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records) {
  os << "coefficient,N,preconditioner,config_digest,setup_seconds,march_seconds,"
        "total_cpu_seconds,seconds_per_iteration\n";
  for (const auto& r : records) {
    os << csv_field(r.c.coefficient) << ',' << r.c.N << ',' << to_string(r.c.preconditioner)
       << ',' << r.c.digest() << ',' << csv_number(r.setup_seconds) << ','
       << csv_number(r.march_seconds) << ',' << csv_number(r.total_cpu_seconds) << ','
       << csv_number(r.seconds_per_iteration()) << '\n';
  }
}

std::vector<BenchmarkCase> default_bench_cases(bool extended) {
  std::vector<std::size_t> Ns{256, 512, 1024};
  if (extended) {
    Ns.push_back(2048);
    Ns.push_back(4096);
  }
  std::vector<BenchmarkCase> cases;
  for (const char* coef : {"d1", "d2"}) {
    for (auto pc : {PreconditionerKind::Tai, PreconditionerKind::Cai, PreconditionerKind::None}) {
      for (auto n : Ns) {
        BenchmarkCase c;
        c.coefficient = coef;
        c.preconditioner = pc;
        c.N = n;
        cases.push_back(c);
      }
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// order

OrderStudy run_order_study(const BenchmarkCase& c, const std::vector<std::size_t>& Ns) {
  OrderStudy study;
  if (!c.has_reference_solution())
    throw ConfigError("source", "the order study needs a closed-form reference solution");
  for (std::size_t n : Ns) {
    BenchmarkCase ci = c;
    ci.N = n;
    ci.M.reset();
    SolveReport r;
    try {
      r = run_solve(ci);
    } catch (const MarchFailure& e) {
      study.complete = false;
      study.failure = "N=" + std::to_string(n) + ": " + e.what();
      return study;
    }
    OrderRow row{n, *r.max_error, std::nullopt};
    if (!study.rows.empty()) {
      const auto& prev = study.rows.back();
      row.order = std::log(prev.error / row.error) /
                  std::log(static_cast<double>(n) / static_cast<double>(prev.N));
    }
    study.rows.push_back(row);
  }
  return study;
}

void write_order_csv(std::ostream& os, const OrderStudy& study) {
  const bool with_order = study.rows.size() > 1;
  os << (with_order ? "N,error,observed_order\n" : "N,error\n");
  for (const auto& row : study.rows) {
    os << row.N << ',' << csv_number(row.error);
    if (with_order) {
      os << ',';
      if (row.order) os << csv_number(*row.order);
    }
    os << '\n';
  }
  if (!study.complete) os << "# incomplete: " << study.failure << '\n';
}

// ---------------------------------------------------------------------------
// spectrum

std::vector<std::complex<double>> operator_spectrum(const LinearOperator& op, std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> start(n);
  for (auto& x : start) x = 1.0 + 0.5 * u(rng);
  ArnoldiOptions opts;
  opts.continue_on_breakdown = true;
  return arnoldi_ritz(op, n, n, start, opts);
}

SpectrumReport run_spectrum(const BenchmarkCase& c) {
  if (c.N > kSpectrumCap)
    throw RefusalError("spectrum is limited to N <= " + std::to_string(kSpectrumCap));
  const auto problem = c.problem();
  const auto sys = build_system(problem);
  const LinearOperator A = [&sys](std::span<const double> v) { return apply_A(sys, v); };
  SpectrumReport r;
  r.A = operator_spectrum(A, sys.size());
  const auto pinv = make_preconditioner(c, sys);
  if (!pinv) {
    r.AP = r.A;
  } else {
    const LinearOperator AP = [&](std::span<const double> v) { return apply_A(sys, pinv(v)); };
    r.AP = operator_spectrum(AP, sys.size());
  }
  return r;
}

void write_spectrum_csv(std::ostream& os, const std::vector<std::complex<double>>& eig) {
  os << "re,im\n";
  for (const auto& z : eig) os << csv_number(z.real()) << ',' << csv_number(z.imag()) << '\n';
}

double max_distance_from_one(const std::vector<std::complex<double>>& eig) {
  double m = 0.0;
  for (const auto& z : eig) m = std::max(m, std::abs(z - 1.0));
  return m;
}

// ---------------------------------------------------------------------------
// export

ExportPaths run_export(const BenchmarkCase& c, const std::string& dir) {
  if (c.N > kExportCap)
    throw RefusalError("export is limited to N <= " + std::to_string(kExportCap));
  const auto sys = build_system(c.problem());
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  ExportPaths paths{(base / "A.mtx").string(), (base / "D.mtx").string(),
                    (base / "G_column.mtx").string()};
  {
    auto os = open_output(paths.A);
    write_matrix_market(os, dense_A(sys));
  }
  {
    auto os = open_output(paths.D);
    write_matrix_market_diagonal(os, sys.D);
  }
  {
    auto os = open_output(paths.G_column);
    write_matrix_market_vector(os, sys.G.first_column());
  }
  return paths;
}

}  // namespace tfde
