#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tfde/dense.hpp"
#include "tfde/fft.hpp"
#include "tfde/sine_transform.hpp"
#include "tfde/system.hpp"

namespace tfde {

/// How interpolation nodes are picked among the grid points.
enum class NodeStrategy {
  UniformIndex,  ///< evenly spaced grid indices, always including x_1 and x_N
};

/// 0-based grid indices of l nodes; strictly increasing, first 0, last n-1.
std::vector<std::size_t> interpolation_nodes(std::size_t n, std::size_t l,
                                             NodeStrategy strategy = NodeStrategy::UniformIndex);

/// Piecewise-linear hat functions phi_s evaluated on the grid (row s holds
/// phi_s(x_1..x_n)). Nodes are grid indices into `grid`.
std::vector<std::vector<double>> hat_functions(std::span<const double> grid,
                                               std::span<const std::size_t> nodes);

/// Interpolated tau approximate inverse
///   P^-1 = sum_s Phi_s S diag(1 / (1 + lambda_k d(x~_s))) S,
/// with lambda_k the eigenvalues of tau(G).
struct TaiPreconditioner {
  std::size_t n = 0;
  std::vector<std::size_t> node_indices;
  std::vector<double> nodes;
  std::vector<std::vector<double>> phi_diagonals;
  std::vector<std::vector<double>> inv_eig_diagonals;
  SineTransformPlan plan;

  std::size_t l() const noexcept { return nodes.size(); }
  /// l + 1 sine transforms.
  std::vector<double> apply(std::span<const double> v) const;
};

/// Same construction over the Strang circulant of G and the FFT.
struct CaiPreconditioner {
  std::size_t n = 0;
  std::vector<std::size_t> node_indices;
  std::vector<double> nodes;
  std::vector<std::vector<double>> phi_diagonals;
  std::vector<std::vector<Complex>> inv_eig_diagonals;
  FftPlan plan;

  std::size_t l() const noexcept { return nodes.size(); }
  std::vector<double> apply(std::span<const double> v) const;
};

/// Throws DomainError unless 2 <= l <= N and SingularShiftError when some
/// 1 + lambda_k d(x~_s) vanishes.
TaiPreconditioner build_tai(const DiscreteSystem& sys, std::size_t l,
                            NodeStrategy strategy = NodeStrategy::UniformIndex);
/// Explicit node set (0-based grid indices, strictly increasing, first 0,
/// last N-1).
TaiPreconditioner build_tai(const DiscreteSystem& sys,
                            std::vector<std::size_t> node_indices);

std::vector<double> apply_tai(const TaiPreconditioner& p, std::span<const double> v);

CaiPreconditioner build_cai(const DiscreteSystem& sys, std::size_t l,
                            NodeStrategy strategy = NodeStrategy::UniformIndex);
std::vector<double> apply_cai(const CaiPreconditioner& p, std::span<const double> v);

/// Size cap for the row-wise references.
inline constexpr std::size_t kReferenceCap = 512;

/// Row i is e_i^T (I + d_i tau(G))^-1 v. O(N^2 log N).
std::vector<double> apply_p2_rowwise(const DiscreteSystem& sys, std::span<const double> v,
                                     std::size_t cap = kReferenceCap);

/// Row i is e_i^T (I + d_i G)^-1 v, one dense solve per row.
std::vector<double> apply_p1_rowwise(const DiscreteSystem& sys, std::span<const double> v,
                                     std::size_t cap = kReferenceCap);

/// Dense P_1^-1 (rows e_i^T K_i^-1).
DenseMatrix p1_inverse_matrix(const DiscreteSystem& sys, std::size_t cap = kReferenceCap);

/// Dense P^-1 of an interpolated preconditioner, column by column.
DenseMatrix dense_operator(std::size_t n, const std::function<std::vector<double>(
                                              std::span<const double>)>& op);

}  // namespace tfde
