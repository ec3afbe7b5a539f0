#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tfde/fft.hpp"

namespace tfde {

/// Orthonormal DST-I of order n:
///   y_i = sqrt(2/(n+1)) sum_{j=1..n} sin(pi i j/(n+1)) x_j.
/// The matrix is symmetric and involutory, so the same call is its inverse.
/// Computed from a real DFT of the length 2(n+1) odd extension.
///
/// Every transform bumps a counter shared by all copies of the plan, which
/// the preconditioner tests use to check transform counts.
class SineTransformPlan {
 public:
  explicit SineTransformPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  std::uint64_t transform_count() const noexcept;
  void reset_transform_count() const noexcept;

 private:
  std::size_t n_;
  RealFftPlan fft_;
  double scale_;
  std::shared_ptr<std::atomic<std::uint64_t>> count_;
};

/// dst1(plan, x) = S x.
inline std::vector<double> dst1(const SineTransformPlan& plan,
                                std::span<const double> x) {
  return plan.apply(x);
}

}  // namespace tfde
