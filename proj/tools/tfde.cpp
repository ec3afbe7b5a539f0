// Command-line harness: solve, bench, spectrum, export, order.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "tfde/bench.hpp"
#include "tfde/config.hpp"
#include "tfde/errors.hpp"

namespace {

constexpr int kExitSolver = 1;
constexpr int kExitConfig = 2;
constexpr std::size_t kDefaultMaxN = 1024;

struct Options {
  std::string config;
  std::string out = ".";
  bool extended = false;
};

tfde::KeyValueConfig read_config(const Options& o) {
  if (o.config.empty()) return {};
  return tfde::load_key_value(o.config);
}

std::filesystem::path out_file(const Options& o, const std::string& name) {
  std::filesystem::create_directories(o.out);
  return std::filesystem::path(o.out) / name;
}

std::ofstream open(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  return os;
}

void check_size(const tfde::BenchmarkCase& c, const Options& o) {
  if (c.N > kDefaultMaxN && !o.extended)
    throw tfde::ConfigError("N", "key 'N': values above " + std::to_string(kDefaultMaxN) +
                                     " need --extended");
}

int cmd_solve(const Options& o) {
  const auto c = tfde::parse_case(read_config(o));
  check_size(c, o);
  const auto r = tfde::run_solve(c);
  auto os = open(out_file(o, "solution.csv"));
  tfde::write_solution_csv(os, r);
  std::cout << "N=" << c.N << " M=" << c.time_steps()
            << " avg_iterations=" << r.march.average_iterations();
  if (r.max_error) std::cout << " max_error=" << std::setprecision(6) << *r.max_error;
  std::cout << '\n';
  return 0;
}

int cmd_bench(const Options& o) {
  std::vector<tfde::BenchmarkCase> cases;
  if (o.config.empty()) {
    cases = tfde::default_bench_cases(o.extended);
  } else {
    cases = tfde::parse_cases(read_config(o));
    for (const auto& c : cases) check_size(c, o);
  }
  std::vector<tfde::BenchmarkRecord> records;
  for (const auto& c : cases) {
    records.push_back(tfde::run_benchmark(c));
    const auto& r = records.back();
    std::cout << r.c.coefficient << " N=" << r.c.N << ' ' << tfde::to_string(r.c.preconditioner)
              << " IT=" << std::fixed << std::setprecision(2) << r.avg_iterations
              << " CPU=" << std::setprecision(3) << r.total_cpu_seconds << 's'
              << (r.converged ? "" : " (not converged)") << '\n'
              << std::defaultfloat;
  }
  {
    auto os = open(out_file(o, "bench.csv"));
    tfde::write_bench_csv(os, records);
  }
  auto os = open(out_file(o, "bench_timing.csv"));
  tfde::write_timing_csv(os, records);
  return 0;
}

int cmd_spectrum(const Options& o) {
  const auto c = tfde::parse_case(read_config(o));
  const auto r = tfde::run_spectrum(c);
  {
    auto os = open(out_file(o, "spectrum_A.csv"));
    tfde::write_spectrum_csv(os, r.A);
  }
  auto os = open(out_file(o, "spectrum_AP.csv"));
  tfde::write_spectrum_csv(os, r.AP);
  std::cout << "max|eig(A)-1|=" << tfde::max_distance_from_one(r.A)
            << " max|eig(AP^-1)-1|=" << tfde::max_distance_from_one(r.AP) << '\n';
  return 0;
}

int cmd_export(const Options& o) {
  const auto c = tfde::parse_case(read_config(o));
  const auto p = tfde::run_export(c, o.out);
  std::cout << p.A << '\n' << p.D << '\n' << p.G_column << '\n';
  return 0;
}

int cmd_order(const Options& o) {
  const auto [c, Ns] = tfde::parse_order_study(read_config(o));
  for (auto n : Ns) {
    auto ci = c;
    ci.N = n;
    check_size(ci, o);
  }
  const auto study = tfde::run_order_study(c, Ns);
  auto os = open(out_file(o, "order.csv"));
  tfde::write_order_csv(os, study);
  for (const auto& row : study.rows) {
    std::cout << "N=" << row.N << " error=" << row.error;
    if (row.order) std::cout << " order=" << *row.order;
    std::cout << '\n';
  }
  if (!study.complete) {
    std::cerr << "order study stopped: " << study.failure << '\n';
    return kExitSolver;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tempered fractional diffusion solver with tau-matrix preconditioning"};
  app.require_subcommand(1);
  Options opts;
  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config, "key=value config file");
    sub->add_option("--out", opts.out, "output directory");
    sub->add_flag("--extended", opts.extended, "allow N = 2048, 4096");
  };
  auto* solve = app.add_subcommand("solve", "march one case to T and write solution.csv");
  auto* bench = app.add_subcommand("bench", "run a case matrix, write bench.csv and bench_timing.csv");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of A and A P^-1 (N <= 1024)");
  auto* exp = app.add_subcommand("export", "write A, D and G's first column as Matrix Market");
  auto* order = app.add_subcommand("order", "convergence-order table over an N list");
  for (auto* s : {solve, bench, spectrum, exp, order}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(opts);
    if (bench->parsed()) return cmd_bench(opts);
    if (spectrum->parsed()) return cmd_spectrum(opts);
    if (exp->parsed()) return cmd_export(opts);
    if (order->parsed()) return cmd_order(opts);
  } catch (const tfde::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tfde::RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tfde::MarchFailure& e) {
    std::cerr << "solver failure at " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}
