#pragma once

#include <span>
#include <vector>

#include "tfde/dense.hpp"
#include "tfde/problem.hpp"
#include "tfde/structured.hpp"
#include "tfde/weights.hpp"

namespace tfde {

/// Per-step linear system A = I + D G of the Crank-Nicolson scheme.
///
/// G is the symmetric Toeplitz matrix with first column
///   -dt/(2 h^beta) (2(g_1 - rho), g_0 + g_2, g_3, ..., g_N),
/// i.e. both one-sided tempered operators and their rho shifts, already
/// scaled by the time step.
struct DiscreteSystem {
  SymmetricToeplitz G;
  std::vector<double> D;
  TauMatrix tau_of_G;
  std::vector<double> grid;
  double h = 0.0;
  double dt = 0.0;

  std::size_t size() const noexcept { return D.size(); }
};

/// First column of G from tempered weights; needs weights.max_index() >= n.
std::vector<double> g_first_column(const TemperedWeights& weights, std::size_t n,
                                   double dt);

/// Throws DomainError for d(x_i) < 0 and InsufficientWeightsError when the
/// weights stop short of g_N.
DiscreteSystem build_system(const ProblemConfig& config,
                            const TemperedWeights& weights);

/// Convenience: computes the tempered weights for config, then builds.
DiscreteSystem build_system(const ProblemConfig& config);

/// A v = v + D (G v).
std::vector<double> apply_A(const DiscreteSystem& sys, std::span<const double> v);

/// (I - D G) u_j + dt f_half.
std::vector<double> step_rhs(const DiscreteSystem& sys, std::span<const double> u_j,
                             std::span<const double> f_half, double dt);

/// Dense I + D G, for export and small reference checks.
DenseMatrix dense_A(const DiscreteSystem& sys);

}  // namespace tfde
