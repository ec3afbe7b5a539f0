#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tfde/config.hpp"
#include "tfde/gmres.hpp"
#include "tfde/system.hpp"
#include "tfde/time_march.hpp"

namespace tfde {

/// Builds P^-1 for the case; an empty operator for `none`.
LinearOperator make_preconditioner(const BenchmarkCase& c, const DiscreteSystem& sys);

// --- solve -----------------------------------------------------------------

struct SolveReport {
  BenchmarkCase c;
  std::vector<double> grid;
  MarchResult march;
  std::optional<std::vector<double>> reference;  ///< closed-form u(x,T) if known
  std::optional<double> max_error;
};

/// Marches the case to T. Throws MarchFailure if a step fails.
SolveReport run_solve(const BenchmarkCase& c);

/// Header x,u_numeric[,u_exact,abs_diff].
void write_solution_csv(std::ostream& os, const SolveReport& r);

// --- bench -----------------------------------------------------------------

struct BenchmarkRecord {
  BenchmarkCase c;
  double avg_iterations = 0.0;
  std::vector<std::size_t> per_step_iterations;
  bool converged = false;
  std::optional<double> max_error;
  double setup_seconds = 0.0;      ///< preconditioner construction
  double march_seconds = 0.0;      ///< time march (all linear solves)
  double total_cpu_seconds = 0.0;  ///< setup + march; assembly excluded
  std::string failure;

  std::size_t total_iterations() const;
  double seconds_per_iteration() const;
};

/// Runs one case; an unconverged step is recorded, not thrown.
BenchmarkRecord run_benchmark(const BenchmarkCase& c);

/// Deterministic columns only (no timings).
void write_bench_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records);
void write_timing_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records);

/// Cases reproducing both tables: d1 with l = 8 and d2 with l = 12 for
/// tai, cai and none at N = 2^8..2^10 (2^11, 2^12 when extended).
std::vector<BenchmarkCase> default_bench_cases(bool extended);

// --- order -----------------------------------------------------------------

struct OrderRow {
  std::size_t N = 0;
  double error = 0.0;
  std::optional<double> order;  ///< log(e_prev/e) / log(N/N_prev)
};

struct OrderStudy {
  std::vector<OrderRow> rows;
  bool complete = true;
  std::string failure;
};

OrderStudy run_order_study(const BenchmarkCase& c, const std::vector<std::size_t>& Ns);
void write_order_csv(std::ostream& os, const OrderStudy& study);

// --- spectrum --------------------------------------------------------------

inline constexpr std::size_t kSpectrumCap = 1024;
inline constexpr std::size_t kExportCap = 4096;

/// All n eigenvalues of an operator via full Arnoldi (m = n, continued over
/// breakdowns) and Hessenberg QR.
std::vector<std::complex<double>> operator_spectrum(const LinearOperator& op, std::size_t n);

struct SpectrumReport {
  std::vector<std::complex<double>> A;
  std::vector<std::complex<double>> AP;  ///< A P^-1
};

/// Throws RefusalError above kSpectrumCap.
SpectrumReport run_spectrum(const BenchmarkCase& c);

/// Header re,im; one row per eigenvalue.
void write_spectrum_csv(std::ostream& os, const std::vector<std::complex<double>>& eig);

/// max |z - 1|.
double max_distance_from_one(const std::vector<std::complex<double>>& eig);

// --- export ----------------------------------------------------------------

struct ExportPaths {
  std::string A;
  std::string D;
  std::string G_column;
};

/// Writes A (coordinate, every entry), D (N diagonal entries) and the first
/// column of G into dir. Throws RefusalError above kExportCap.
ExportPaths run_export(const BenchmarkCase& c, const std::string& dir);

// --- csv -------------------------------------------------------------------

/// RFC-4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);
/// Round-trippable decimal form (17 significant digits).
std::string csv_number(double v);

}  // namespace tfde
