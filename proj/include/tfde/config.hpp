#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfde/gmres.hpp"
#include "tfde/problem.hpp"

namespace tfde {

/// Ordered key = value pairs from a plain-text file. '#' starts a comment.
struct KeyValueConfig {
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const;
};

/// Throws ConfigError naming the offending key (or line) on malformed input
/// and on repeated keys.
KeyValueConfig parse_key_value(std::istream& is);
KeyValueConfig load_key_value(const std::string& path);

enum class PreconditionerKind { Tai, Cai, None, P2Ref };

std::string to_string(PreconditionerKind kind);
PreconditionerKind parse_preconditioner(const std::string& name);

/// One benchmark or solve run. Defaults reproduce the manufactured
/// experiment: beta = 1.2, lambda = 1.5, gamma1 = 0.75, tol = 1e-7,
/// maxit = 1000, l = 8 for d1 and 12 for d2, M = N + 1.
struct BenchmarkCase {
  std::string coefficient = "d1";  ///< d1, d2, zero or a constant >= 0
  std::size_t N = 256;
  std::optional<std::size_t> M;
  PreconditionerKind preconditioner = PreconditionerKind::Tai;
  std::optional<std::size_t> l;
  double a = 0.0;
  double b = 1.0;
  double T = 1.0;
  double beta = 1.2;
  double lambda = 1.5;
  double gamma1 = 0.75;
  double tol = 1e-7;
  std::size_t maxit = 1000;
  std::optional<std::size_t> restart;
  PreconditionSide side = PreconditionSide::Left;
  std::string source = "manufactured";  ///< manufactured | zero
  std::string initial = "zero";         ///< zero | profile

  std::size_t time_steps() const { return M.value_or(N + 1); }
  std::size_t interpolation_points() const;

  /// Throws ConfigError naming the first invalid key.
  void validate() const;

  NamedField coefficient_field() const;
  ProblemConfig problem() const;
  GmresConfig gmres_config() const;

  /// Canonical one-line description; equal cases give equal strings.
  std::string canonical() const;
  /// 16 hex digits of the FNV-1a hash of canonical().
  std::string digest() const;

  /// Whether the solution at T is known in closed form.
  bool has_reference_solution() const;
  double reference_solution(double x) const;
};

/// Cases described by a config. The keys N, coefficient and preconditioner
/// accept comma-separated lists; the result is their product in the order
/// coefficient, preconditioner, N.
std::vector<BenchmarkCase> parse_cases(const KeyValueConfig& cfg);

/// Exactly one case; lists are rejected.
BenchmarkCase parse_case(const KeyValueConfig& cfg);

/// The N list of a config (for the order study). Other keys as parse_case.
std::pair<BenchmarkCase, std::vector<std::size_t>> parse_order_study(
    const KeyValueConfig& cfg);

}  // namespace tfde
