#include "tfde/sine_transform.hpp"

#include <cmath>

#include "tfde/errors.hpp"

namespace tfde {

SineTransformPlan::SineTransformPlan(std::size_t n)
    : n_(n),
      fft_(2 * (n + 1)),
      scale_(std::sqrt(2.0 / static_cast<double>(n + 1))),
      count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (n == 0) throw DomainError("SineTransformPlan: order must be positive");
}

void SineTransformPlan::apply(std::span<const double> x,
                              std::span<double> y) const {
  require_length(x.size(), n_, "dst1 input");
  require_length(y.size(), n_, "dst1 output");
  const std::size_t len = 2 * (n_ + 1);
  std::vector<double> ext(len, 0.0);
  std::vector<Complex> spec(n_ + 2);
  for (std::size_t j = 0; j < n_; ++j) {
    ext[j + 1] = x[j];
    ext[len - 1 - j] = -x[j];
  }
  fft_.forward(ext, spec);
  // DFT of the odd extension is -2i * (unscaled sine sum).
  for (std::size_t k = 0; k < n_; ++k) y[k] = -0.5 * scale_ * spec[k + 1].imag();
  count_->fetch_add(1, std::memory_order_relaxed);
}

std::vector<double> SineTransformPlan::apply(std::span<const double> x) const {
  std::vector<double> y(n_);
  apply(x, y);
  return y;
}

std::uint64_t SineTransformPlan::transform_count() const noexcept {
  return count_->load(std::memory_order_relaxed);
}

void SineTransformPlan::reset_transform_count() const noexcept {
  count_->store(0, std::memory_order_relaxed);
}

}  // namespace tfde
