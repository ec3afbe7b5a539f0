#include "tfde/structured.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tfde/errors.hpp"

namespace tfde {

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  require_length(x.size(), cols_, "DenseMatrix::multiply");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += data_[i * cols_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

// ---------------------------------------------------------------------------
// SymmetricToeplitz

namespace {

std::vector<Complex> embedding_spectrum(std::span<const double> c,
                                        const FftPlan& plan) {
  const std::size_t n = c.size();
  const std::size_t len = plan.size();
  std::vector<Complex> col(len, Complex{});
  for (std::size_t k = 0; k < n; ++k) col[k] = c[k];
  for (std::size_t k = 1; k < n; ++k) col[len - k] = c[k];
  return plan.forward(col);
}

}  // namespace

SymmetricToeplitz::SymmetricToeplitz(std::vector<double> first_column)
    : column_(std::move(first_column)),
      embed_plan_(next_power_of_two(2 * std::max<std::size_t>(column_.size(), 1))) {
  if (column_.empty()) throw DomainError("SymmetricToeplitz: empty column");
  for (double v : column_) {
    if (!std::isfinite(v)) throw DomainError("SymmetricToeplitz: non-finite entry");
  }
  embed_spectrum_ = embedding_spectrum(column_, embed_plan_);
}

std::vector<double> SymmetricToeplitz::matvec(std::span<const double> x) const {
  const std::size_t n = size();
  require_length(x.size(), n, "toeplitz_matvec");
  const std::size_t len = embed_plan_.size();
  std::vector<Complex> buf(len, Complex{}), spec(len);
  for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
  embed_plan_.forward(buf, spec);
  for (std::size_t k = 0; k < len; ++k) spec[k] *= embed_spectrum_[k];
  embed_plan_.inverse(spec, buf);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = buf[i].real();
  return y;
}

DenseMatrix SymmetricToeplitz::to_dense() const {
  const std::size_t n = size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = column_[i > j ? i - j : j - i];
  return m;
}

std::vector<double> toeplitz_matvec(const SymmetricToeplitz& t,
                                    std::span<const double> x) {
  return t.matvec(x);
}

// ---------------------------------------------------------------------------
// HankelCorrection

double HankelCorrection::entry(std::size_t i, std::size_t j) const {
  const std::size_t s = i + j;
  return s < n ? first_col[s] : last_col[s - (n - 1)];
}

DenseMatrix HankelCorrection::to_dense() const {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(i, j);
  return m;
}

HankelCorrection hankel_correction(const SymmetricToeplitz& t) {
  const std::size_t n = t.size();
  const auto c = t.first_column();
  HankelCorrection hc{n, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  if (n < 3) return hc;
  for (std::size_t k = 2; k < n; ++k) {
    hc.first_col[k - 2] = c[k];
    hc.last_col[n + 1 - k] = c[k];
  }
  return hc;
}

// ---------------------------------------------------------------------------
// TauMatrix

TauMatrix::TauMatrix(std::vector<double> eigenvalues)
    : TauMatrix(eigenvalues, SineTransformPlan(eigenvalues.size())) {}

TauMatrix::TauMatrix(std::vector<double> eigenvalues, SineTransformPlan plan)
    : eigenvalues_(std::move(eigenvalues)), plan_(std::move(plan)) {
  require_length(plan_.size(), eigenvalues_.size(), "TauMatrix plan");
}

std::vector<double> TauMatrix::matvec(std::span<const double> x) const {
  require_length(x.size(), size(), "TauMatrix::matvec");
  auto w = plan_.apply(x);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] *= eigenvalues_[k];
  return plan_.apply(w);
}

DenseMatrix TauMatrix::to_dense() const {
  const std::size_t n = size();
  DenseMatrix m(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const auto col = matvec(e);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    e[j] = 0.0;
  }
  return m;
}

TauMatrix tau_from_toeplitz(const SymmetricToeplitz& t) {
  const std::size_t n = t.size();
  const auto hc = hankel_correction(t);
  std::vector<double> c(t.first_column().begin(), t.first_column().end());
  for (std::size_t k = 0; k < n; ++k) c[k] -= hc.first_col[k];

  SineTransformPlan plan(n);
  auto lambda = plan.apply(c);
  // (S e_1)_j is a positive sine, never zero for 1 <= j <= n.
  const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const double s1 = scale * std::sin(std::numbers::pi * static_cast<double>(j + 1) /
                                       static_cast<double>(n + 1));
    lambda[j] /= s1;
  }
  return TauMatrix(std::move(lambda), std::move(plan));
}

std::vector<double> tau_shifted_solve(const TauMatrix& tau, double d,
                                      std::span<const double> v) {
  require_length(v.size(), tau.size(), "tau_shifted_solve");
  const auto lambda = tau.eigenvalues();
  std::vector<double> inv(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double denom = 1.0 + d * lambda[k];
    if (std::abs(denom) < kSingularShiftTol) {
      throw SingularShiftError("tau_shifted_solve: 1 + d*lambda_" +
                               std::to_string(k + 1) + " vanishes");
    }
    inv[k] = 1.0 / denom;
  }
  auto w = tau.plan().apply(v);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] *= inv[k];
  return tau.plan().apply(w);
}

// ---------------------------------------------------------------------------
// CirculantMatrix

CirculantMatrix::CirculantMatrix(std::span<const double> first_column)
    : column_(first_column.begin(), first_column.end()),
      plan_(std::max<std::size_t>(first_column.size(), 1)) {
  if (column_.empty()) throw DomainError("CirculantMatrix: empty column");
  std::vector<Complex> col(column_.begin(), column_.end());
  spectrum_ = plan_.forward(col);
}

std::vector<double> CirculantMatrix::matvec(std::span<const double> x) const {
  const std::size_t n = size();
  require_length(x.size(), n, "CirculantMatrix::matvec");
  std::vector<Complex> buf(x.begin(), x.end()), spec(n);
  plan_.forward(buf, spec);
  for (std::size_t k = 0; k < n; ++k) spec[k] *= spectrum_[k];
  plan_.inverse(spec, buf);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = buf[i].real();
  return y;
}

DenseMatrix CirculantMatrix::to_dense() const {
  const std::size_t n = size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = column_[(i + n - j) % n];
  return m;
}

CirculantMatrix strang_circulant(const SymmetricToeplitz& t) {
  const std::size_t n = t.size();
  const auto c = t.first_column();
  std::vector<double> col(n);
  col[0] = c[0];
  for (std::size_t k = 1; k < n; ++k) col[k] = k <= n / 2 ? c[k] : c[n - k];
  return CirculantMatrix(col);
}

std::vector<double> circulant_shifted_solve(const CirculantMatrix& c, double d,
                                            std::span<const double> v) {
  const std::size_t n = c.size();
  require_length(v.size(), n, "circulant_shifted_solve");
  const auto sigma = c.spectrum();
  std::vector<Complex> buf(v.begin(), v.end()), spec(n);
  c.plan().forward(buf, spec);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex denom = 1.0 + d * sigma[k];
    if (std::abs(denom) < kSingularShiftTol) {
      throw SingularShiftError("circulant_shifted_solve: 1 + d*sigma_" +
                               std::to_string(k) + " vanishes");
    }
    spec[k] /= denom;
  }
  c.plan().inverse(spec, buf);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = buf[i].real();
  return y;
}

}  // namespace tfde
