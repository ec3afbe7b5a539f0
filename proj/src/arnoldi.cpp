#include "tfde/arnoldi.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <random>

#include "tfde/errors.hpp"

namespace tfde {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Two MGS passes against basis; accumulates projections into h if given.
void orthogonalize(const std::vector<std::vector<double>>& basis,
                   std::vector<double>& w, std::vector<double>* h) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double c = dot(basis[i], w);
      if (h) (*h)[i] += c;
      for (std::size_t t = 0; t < w.size(); ++t) w[t] -= c * basis[i][t];
    }
  }
}

constexpr double kBreakdownRatio = 1e-12;

}  // namespace

std::vector<std::complex<double>> hessenberg_eigenvalues(std::span<const double> H,
                                                         std::size_t k) {
  require_length(H.size(), k * k, "hessenberg_eigenvalues");
  if (k == 0) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = H[i * k + j];
  Eigen::RealSchur<Eigen::MatrixXd> schur(static_cast<Eigen::Index>(k));
  schur.computeFromHessenberg(m, Eigen::MatrixXd::Zero(m.rows(), m.cols()), false);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("hessenberg_eigenvalues: QR iteration did not converge");
  const Eigen::MatrixXd& T = schur.matrixT();

  std::vector<std::complex<double>> eig;
  eig.reserve(k);
  for (std::size_t i = 0; i < k;) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (i + 1 < k && T(ii + 1, ii) != 0.0) {
      const double p = 0.5 * (T(ii, ii) - T(ii + 1, ii + 1));
      const double z = std::sqrt(std::abs(p * p + T(ii + 1, ii) * T(ii, ii + 1)));
      const double re = T(ii + 1, ii + 1) + p;
      eig.emplace_back(re, z);
      eig.emplace_back(re, -z);
      i += 2;
    } else {
      eig.emplace_back(T(ii, ii), 0.0);
      i += 1;
    }
  }
  return eig;
}

std::vector<std::complex<double>> arnoldi_ritz(const LinearOperator& apply_M,
                                               std::size_t n, std::size_t m,
                                               std::span<const double> start,
                                               const ArnoldiOptions& opts) {
  require_length(start.size(), n, "arnoldi_ritz start");
  if (m == 0 || m > n) throw DomainError("arnoldi_ritz: need 1 <= m <= n");

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  auto fresh_vector = [&](const std::vector<std::vector<double>>& basis) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<double> v(n);
      for (auto& x : v) x = gauss(rng);
      const double before = std::sqrt(dot(v, v));
      orthogonalize(basis, v, nullptr);
      const double after = std::sqrt(dot(v, v));
      if (after > 1e-8 * before) {
        for (auto& x : v) x /= after;
        return v;
      }
    }
    throw BreakdownError("arnoldi_ritz: cannot extend the basis");
  };

  std::vector<std::vector<double>> V;
  {
    std::vector<double> v(start.begin(), start.end());
    const double nv = std::sqrt(dot(v, v));
    if (nv == 0.0) {
      V.push_back(fresh_vector(V));
    } else {
      for (auto& x : v) x /= nv;
      V.push_back(std::move(v));
    }
  }

  std::vector<double> H(m * m, 0.0);
  std::size_t k = m;
  for (std::size_t j = 0; j < m; ++j) {
    auto w = apply_M(V[j]);
    require_length(w.size(), n, "arnoldi_ritz operator");
    for (double x : w) {
      if (!std::isfinite(x)) throw OperatorFailure("arnoldi_ritz: non-finite operator output");
    }
    const double before = std::sqrt(dot(w, w));
    std::vector<double> h(j + 1, 0.0);
    orthogonalize(V, w, &h);
    for (std::size_t i = 0; i <= j; ++i) H[i * m + j] = h[i];
    if (j + 1 == m) break;

    const double hnext = std::sqrt(dot(w, w));
    if (hnext <= kBreakdownRatio * before) {
      if (!opts.continue_on_breakdown) {
        k = j + 1;
        break;
      }
      V.push_back(fresh_vector(V));  // H(j+1, j) stays 0
      continue;
    }
    H[(j + 1) * m + j] = hnext;
    for (auto& x : w) x /= hnext;
    V.push_back(std::move(w));
  }

  if (k == m) return hessenberg_eigenvalues(H, m);
  std::vector<double> Hk(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) Hk[i * k + j] = H[i * m + j];
  return hessenberg_eigenvalues(Hk, k);
}

}  // namespace tfde
