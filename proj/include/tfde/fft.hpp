#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace tfde {

using Complex = std::complex<double>;

/// Complex DFT of a fixed length. Copies share the same immutable plan;
/// execution is reentrant.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// out_k = sum_j in_j exp(-2 pi i jk/n)
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  /// out_j = (1/n) sum_k in_k exp(+2 pi i jk/n)
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  std::vector<Complex> forward(std::span<const Complex> in) const;
  std::vector<Complex> inverse(std::span<const Complex> in) const;

 private:
  struct Impl;
  std::size_t n_;
  std::shared_ptr<const Impl> impl_;
};

/// Forward DFT of real input; returns the n/2 + 1 non-redundant bins.
class RealFftPlan {
 public:
  explicit RealFftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// out_k = sum_j in_j exp(-2 pi i jk/n), k = 0..n/2
  void forward(std::span<const double> in, std::span<Complex> out) const;

 private:
  struct Impl;
  std::size_t n_;
  std::shared_ptr<const Impl> impl_;
};

std::size_t next_power_of_two(std::size_t n);

}  // namespace tfde
