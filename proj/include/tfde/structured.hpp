#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfde/dense.hpp"
#include "tfde/fft.hpp"
#include "tfde/sine_transform.hpp"

namespace tfde {

/// Symmetric Toeplitz matrix M[i][j] = c[|i-j|], stored as its first column.
/// The circulant embedding used by matvec is built once at construction.
class SymmetricToeplitz {
 public:
  explicit SymmetricToeplitz(std::vector<double> first_column);

  std::size_t size() const noexcept { return column_.size(); }
  std::span<const double> first_column() const noexcept { return column_; }

  /// Product through a circulant of order next_pow2(2n); O(n log n).
  std::vector<double> matvec(std::span<const double> x) const;

  DenseMatrix to_dense() const;

 private:
  std::vector<double> column_;
  FftPlan embed_plan_;
  std::vector<Complex> embed_spectrum_;
};

/// Symmetric Hankel matrix given by its first and last columns; the entry
/// (i,j) depends only on i+j.
struct HankelCorrection {
  std::size_t n = 0;
  std::vector<double> first_col;
  std::vector<double> last_col;

  double entry(std::size_t i, std::size_t j) const;
  DenseMatrix to_dense() const;
};

/// Matrix of the tau algebra, S diag(eigenvalues) S with S the orthonormal
/// DST-I.
class TauMatrix {
 public:
  explicit TauMatrix(std::vector<double> eigenvalues);
  TauMatrix(std::vector<double> eigenvalues, SineTransformPlan plan);

  std::size_t size() const noexcept { return eigenvalues_.size(); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  const SineTransformPlan& plan() const noexcept { return plan_; }

  std::vector<double> matvec(std::span<const double> x) const;
  DenseMatrix to_dense() const;

 private:
  std::vector<double> eigenvalues_;
  SineTransformPlan plan_;
};

/// Circulant matrix stored as the DFT of its first column.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(std::span<const double> first_column);

  std::size_t size() const noexcept { return spectrum_.size(); }
  std::span<const Complex> spectrum() const noexcept { return spectrum_; }
  std::span<const double> first_column() const noexcept { return column_; }
  const FftPlan& plan() const noexcept { return plan_; }

  std::vector<double> matvec(std::span<const double> x) const;
  DenseMatrix to_dense() const;

 private:
  std::vector<double> column_;
  FftPlan plan_;
  std::vector<Complex> spectrum_;
};

/// Offsets below this threshold never enter a shifted structured solve.
inline constexpr double kSingularShiftTol = 1e-14;

std::vector<double> toeplitz_matvec(const SymmetricToeplitz& t,
                                    std::span<const double> x);

/// HC(T) with first column (c2, ..., c_{n-1}, 0, 0) and last column
/// (0, 0, c_{n-1}, ..., c2). Zero for n < 3.
HankelCorrection hankel_correction(const SymmetricToeplitz& t);

/// tau(T) = T - HC(T). Eigenvalues come from the first column c of tau(T):
/// lambda_j = (S c)_j / (S e_1)_j.
TauMatrix tau_from_toeplitz(const SymmetricToeplitz& t);

/// (I + d tau)^{-1} v.
std::vector<double> tau_shifted_solve(const TauMatrix& tau, double d,
                                      std::span<const double> v);

/// Strang circulant: keep the central diagonals and wrap.
CirculantMatrix strang_circulant(const SymmetricToeplitz& t);

/// (I + d C)^{-1} v. The small imaginary residue is dropped.
std::vector<double> circulant_shifted_solve(const CirculantMatrix& c, double d,
                                            std::span<const double> v);

}  // namespace tfde
