#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tfde {

/// y = Op(x). Implementations must be reentrant.
using LinearOperator = std::function<std::vector<double>(std::span<const double>)>;

enum class PreconditionSide {
  Right,  ///< solve A P^-1 y = b, x = P^-1 y; monitors ||b - A x||
  Left,   ///< solve P^-1 A x = P^-1 b; monitors ||P^-1 (b - A x)||
};

struct GmresConfig {
  double tol = 1e-7;    ///< relative residual threshold
  std::size_t maxit = 1000;
  std::optional<std::size_t> restart;  ///< empty = full GMRES
  PreconditionSide side = PreconditionSide::Right;
};

struct SolveStats {
  std::size_t iterations = 0;
  /// Relative residual after each iteration, against the residual at x0.
  /// For right preconditioning this is the residual of the original system;
  /// for left preconditioning it is the preconditioned residual.
  std::vector<double> residual_history;
  bool converged = false;
  /// ||b - A x|| / ||b - A x0|| of the returned iterate, always unpreconditioned.
  double true_residual = 0.0;
};

struct GmresResult {
  std::vector<double> x;
  SolveStats stats;
};

/// GMRES with modified Gram-Schmidt (re-orthogonalized when the norm drops
/// by more than 1/sqrt(2)) and Givens rotations. Stops at the first iterate
/// whose monitored relative residual, recomputed from x, is below tol.
///
/// Throws BreakdownError on an Arnoldi breakdown that leaves a residual
/// above tol, OperatorFailure when an operator returns NaN/Inf and
/// ContractViolation on size mismatches. Non-convergence within maxit is not
/// an error: stats.converged is false.
GmresResult gmres(const LinearOperator& apply_A, const LinearOperator& apply_Pinv,
                  std::span<const double> b, std::span<const double> x0,
                  const GmresConfig& cfg = {});

}  // namespace tfde
