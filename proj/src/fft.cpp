#include "tfde/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "tfde/errors.hpp"

namespace tfde {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

// c2c out-of-place transforms never write to their input.
fftw_complex* as_fftw(const Complex* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}

}  // namespace

struct FftPlan::Impl {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit Impl(std::size_t n) {
    std::vector<Complex> a(n), b(n);
    const int len = static_cast<int>(n);
    // ESTIMATE keeps the chosen algorithm, and so the rounding, identical
    // from run to run.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    fwd = fftw_plan_dft_1d(len, as_fftw(a.data()), as_fftw(b.data()),
                           FFTW_FORWARD, flags);
    bwd = fftw_plan_dft_1d(len, as_fftw(a.data()), as_fftw(b.data()),
                           FFTW_BACKWARD, flags);
  }
  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("FftPlan: length must be positive");
  impl_ = std::make_shared<const Impl>(n);
}

void FftPlan::forward(std::span<const Complex> in,
                      std::span<Complex> out) const {
  require_length(in.size(), n_, "FftPlan::forward input");
  require_length(out.size(), n_, "FftPlan::forward output");
  fftw_execute_dft(impl_->fwd, as_fftw(in.data()), as_fftw(out.data()));
}

void FftPlan::inverse(std::span<const Complex> in,
                      std::span<Complex> out) const {
  require_length(in.size(), n_, "FftPlan::inverse input");
  require_length(out.size(), n_, "FftPlan::inverse output");
  fftw_execute_dft(impl_->bwd, as_fftw(in.data()), as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : out) v *= scale;
}

struct RealFftPlan::Impl {
  fftw_plan fwd = nullptr;

  explicit Impl(std::size_t n) {
    std::vector<double> a(n);
    std::vector<Complex> b(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), a.data(), as_fftw(b.data()),
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd);
  }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

RealFftPlan::RealFftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("RealFftPlan: length must be positive");
  impl_ = std::make_shared<const Impl>(n);
}

void RealFftPlan::forward(std::span<const double> in, std::span<Complex> out) const {
  require_length(in.size(), n_, "RealFftPlan::forward input");
  require_length(out.size(), n_ / 2 + 1, "RealFftPlan::forward output");
  // r2c transforms do not modify their input.
  fftw_execute_dft_r2c(impl_->fwd, const_cast<double*>(in.data()), as_fftw(out.data()));
}

std::vector<Complex> FftPlan::forward(std::span<const Complex> in) const {
  std::vector<Complex> out(n_);
  forward(in, out);
  return out;
}

std::vector<Complex> FftPlan::inverse(std::span<const Complex> in) const {
  std::vector<Complex> out(n_);
  inverse(in, out);
  return out;
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace tfde
