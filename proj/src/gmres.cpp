#include "tfde/gmres.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tfde/errors.hpp"

namespace tfde {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

std::vector<double> checked(const LinearOperator& op, std::span<const double> v,
                            const char* name) {
  auto out = op(v);
  require_length(out.size(), v.size(), name);
  for (double x : out) {
    if (!std::isfinite(x))
      throw OperatorFailure(std::string(name) + " produced a non-finite value");
  }
  return out;
}

constexpr double kBreakdownRatio = 1e-14;
const double kReorthThreshold = 1.0 / std::sqrt(2.0);

}  // namespace

GmresResult gmres(const LinearOperator& apply_A, const LinearOperator& apply_Pinv,
                  std::span<const double> b, std::span<const double> x0,
                  const GmresConfig& cfg) {
  const std::size_t n = b.size();
  require_length(x0.size(), n, "gmres x0");
  if (!(cfg.tol > 0.0)) throw DomainError("gmres: tol must be positive");
  if (cfg.maxit < 1) throw DomainError("gmres: maxit must be >= 1");
  if (cfg.restart && *cfg.restart < 1) throw DomainError("gmres: restart must be >= 1");

  const bool have_P = static_cast<bool>(apply_Pinv);
  const bool left = have_P && cfg.side == PreconditionSide::Left;
  const bool right = have_P && cfg.side == PreconditionSide::Right;

  auto A = [&](std::span<const double> v) { return checked(apply_A, v, "apply_A"); };
  auto P = [&](std::span<const double> v) {
    return have_P ? checked(apply_Pinv, v, "apply_Pinv")
                  : std::vector<double>(v.begin(), v.end());
  };
  auto true_residual = [&](std::span<const double> x) {
    auto r = A(x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    return r;
  };
  auto monitored_residual = [&](std::span<const double> x) {
    auto r = true_residual(x);
    return left ? P(r) : r;
  };

  GmresResult result;
  result.x.assign(x0.begin(), x0.end());
  SolveStats& stats = result.stats;

  auto r = monitored_residual(result.x);
  const double beta0 = norm2(r);
  const double true_beta0 = left ? norm2(true_residual(result.x)) : beta0;
  auto finish_true_residual = [&]() {
    if (true_beta0 == 0.0) {
      stats.true_residual = 0.0;
    } else {
      stats.true_residual = norm2(true_residual(result.x)) / true_beta0;
    }
  };
  if (beta0 == 0.0) {
    stats.converged = true;
    finish_true_residual();
    return result;
  }

  const std::size_t cycle = std::min(cfg.restart.value_or(cfg.maxit), cfg.maxit);
  std::vector<std::vector<double>> V;
  std::vector<std::vector<double>> R;  // rotated Hessenberg columns
  std::vector<double> cs, sn, g;

  while (stats.iterations < cfg.maxit) {
    const double beta = norm2(r);
    V.assign(1, r);
    for (auto& v : V[0]) v /= beta;
    R.clear();
    cs.clear();
    sn.clear();
    g.assign(1, beta);

    const std::size_t steps = std::min(cycle, cfg.maxit - stats.iterations);
    for (std::size_t j = 0; j < steps; ++j) {
      auto w = right ? A(P(V[j])) : (left ? P(A(V[j])) : A(V[j]));

      std::vector<double> h(j + 2, 0.0);
      const double norm_before = norm2(w);
      for (std::size_t i = 0; i <= j; ++i) {
        h[i] = dot(V[i], w);
        axpy(-h[i], V[i], w);
      }
      double hnext = norm2(w);
      if (hnext < kReorthThreshold * norm_before) {
        for (std::size_t i = 0; i <= j; ++i) {
          const double c = dot(V[i], w);
          h[i] += c;
          axpy(-c, V[i], w);
        }
        hnext = norm2(w);
      }
      h[j + 1] = hnext;

      for (std::size_t i = 0; i < j; ++i) {
        const double t = cs[i] * h[i] + sn[i] * h[i + 1];
        h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
        h[i] = t;
      }
      const double denom = std::hypot(h[j], h[j + 1]);
      const double c = denom == 0.0 ? 1.0 : h[j] / denom;
      const double s = denom == 0.0 ? 0.0 : h[j + 1] / denom;
      cs.push_back(c);
      sn.push_back(s);
      h[j] = denom;
      h[j + 1] = 0.0;
      g.push_back(-s * g[j]);
      g[j] *= c;
      R.push_back(std::move(h));

      ++stats.iterations;
      const double estimate = std::abs(g[j + 1]) / beta0;
      stats.residual_history.push_back(estimate);

      const bool breakdown = hnext <= kBreakdownRatio * norm_before;
      const bool last = j + 1 == steps;
      if (estimate < cfg.tol || breakdown || last) {
        // Back substitution on the rotated triangle.
        std::vector<double> y(j + 1);
        for (std::size_t ii = j + 1; ii-- > 0;) {
          double acc = g[ii];
          for (std::size_t k = ii + 1; k <= j; ++k) acc -= R[k][ii] * y[k];
          y[ii] = R[ii][ii] == 0.0 ? 0.0 : acc / R[ii][ii];
        }
        std::vector<double> update(n, 0.0);
        for (std::size_t k = 0; k <= j; ++k) axpy(y[k], V[k], update);
        if (right) update = P(update);
        std::vector<double> candidate = result.x;
        axpy(1.0, update, candidate);

        auto rc = monitored_residual(candidate);
        const double rel = norm2(rc) / beta0;
        if (rel < cfg.tol) {
          result.x = std::move(candidate);
          stats.residual_history.back() = rel;
          stats.converged = true;
          finish_true_residual();
          return result;
        }
        if (breakdown) {
          throw BreakdownError("gmres: Arnoldi breakdown at iteration " +
                               std::to_string(stats.iterations) +
                               " with relative residual " + std::to_string(rel));
        }
        if (last) {
          result.x = std::move(candidate);
          r = std::move(rc);
          stats.residual_history.back() = rel;
          break;
        }
      }
      for (auto& v : w) v /= hnext;
      V.push_back(std::move(w));
    }
  }
  finish_true_residual();
  return result;
}

}  // namespace tfde
