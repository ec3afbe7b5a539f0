#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tfde/gmres.hpp"

namespace tfde {

struct ArnoldiOptions {
  /// On breakdown, restart from a fresh vector orthogonal to the basis
  /// instead of stopping, so that m = n always yields n eigenvalues.
  bool continue_on_breakdown = false;
  /// Seed for the replacement vectors drawn on breakdown.
  std::uint64_t seed = 20240531;
};

/// m steps of Arnoldi (modified Gram-Schmidt, two passes) from `start`,
/// followed by the eigenvalues of the m x m Hessenberg matrix. For m = n
/// these are the eigenvalues of the operator up to rounding. Without
/// continue_on_breakdown an early breakdown returns the Ritz values of the
/// invariant subspace found so far.
std::vector<std::complex<double>> arnoldi_ritz(const LinearOperator& apply_M,
                                               std::size_t n, std::size_t m,
                                               std::span<const double> start,
                                               const ArnoldiOptions& opts = {});

/// Eigenvalues of an upper Hessenberg matrix (row-major, k x k) by
/// Francis-shifted QR, no eigenvectors.
std::vector<std::complex<double>> hessenberg_eigenvalues(std::span<const double> H,
                                                         std::size_t k);

}  // namespace tfde
