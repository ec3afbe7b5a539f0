#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tfde/gmres.hpp"
#include "tfde/problem.hpp"
#include "tfde/system.hpp"

namespace tfde {

/// Solves A x = rhs starting from x0.
using LinearSolver =
    std::function<GmresResult(std::span<const double> rhs, std::span<const double> x0)>;

/// Called after every step j -> j+1 with t_{j+1} and u^{j+1}.
using StepObserver = std::function<void(std::size_t step, double t,
                                        std::span<const double> u,
                                        const SolveStats& stats)>;

struct MarchResult {
  std::vector<double> solution;      ///< u^M at the interior grid points
  std::vector<SolveStats> steps;     ///< one per time step
  bool completed = true;             ///< false if stopped at a failed solve

  double average_iterations() const;
};

struct MarchOptions {
  /// Throw MarchFailure on the first unconverged solve. When false the
  /// march records the failure and stops, returning completed = false.
  bool throw_on_failure = true;
};

/// Crank-Nicolson march: u^0 = u0(x_i), then for j = 0..M-1 solve
/// A u^{j+1} = (I - D G) u^j + dt f(x, t_{j+1/2}) from a zero initial guess.
MarchResult time_march(const ProblemConfig& config, const DiscreteSystem& sys,
                       const LinearSolver& solver, const StepObserver& observer = {},
                       const MarchOptions& options = {});

/// Wraps gmres with apply_A and an optional preconditioner.
LinearSolver gmres_solver(const DiscreteSystem& sys, LinearOperator apply_Pinv,
                          GmresConfig cfg);

}  // namespace tfde
