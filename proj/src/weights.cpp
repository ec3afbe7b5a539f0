#include "tfde/weights.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "tfde/errors.hpp"

namespace tfde {

namespace {

void require_beta(double beta) {
  if (!(beta > 1.0 && beta < 2.0))
    throw DomainError("beta must lie in (1,2), got " + std::to_string(beta));
}

class GlWeightCache {
 public:
  std::vector<double> get(double beta, std::size_t K) {
    std::lock_guard lock(mutex_);
    auto& w = table_[beta];
    if (w.empty()) w.push_back(1.0);
    for (std::size_t k = w.size(); k <= K; ++k) {
      w.push_back((1.0 - (1.0 + beta) / static_cast<double>(k)) * w[k - 1]);
    }
    return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(K + 1)};
  }

 private:
  std::mutex mutex_;
  std::map<double, std::vector<double>> table_;
};

GlWeightCache& cache() {
  static GlWeightCache c;
  return c;
}

}  // namespace

std::vector<double> gl_weights(double beta, std::size_t K) {
  require_beta(beta);
  return cache().get(beta, K);
}

Gammas solve_gammas(double beta, double gamma1) {
  require_beta(beta);
  const double gamma3 = gamma1 - beta / 2.0;
  return {gamma1, 1.0 - gamma1 - gamma3, gamma3};
}

std::vector<int> GammaCheck::matching_clauses() const {
  std::vector<int> out;
  for (int k = 0; k < 3; ++k)
    if (clause_holds[static_cast<std::size_t>(k)]) out.push_back(k + 1);
  return out;
}

GammaCheck check_gamma_conditions(double beta, const Gammas& gammas) {
  require_beta(beta);
  const double b = beta;
  const double s = b * b + 3.0 * b;
  const double p2 = s + 2.0;  // beta^2 + 3 beta + 2
  const double p4 = s + 4.0;  // beta^2 + 3 beta + 4

  GammaCheck r;
  r.intervals[0] = {std::max(2.0 * (s - 4.0) / p2, s / p4),
                    3.0 * (s - 2.0) / (2.0 * p2)};
  r.intervals[1] = {((b - 4.0) * p2 + 24.0) / (2.0 * p2),
                    std::min(((b - 2.0) * p4 + 16.0) / (2.0 * p4),
                             ((b - 6.0) * p2 + 48.0) / (2.0 * p2))};
  r.intervals[2] = {std::max((2.0 - b) * (b * b + b - 8.0) / p2,
                             (1.0 - b) * (b * b + 2.0 * b) / (2.0 * p4)),
                    (2.0 - b) * (b * b + 2.0 * b - 3.0) / (2.0 * p2)};

  const std::array<double, 3> values{gammas.gamma1, gammas.gamma2, gammas.gamma3};
  for (std::size_t k = 0; k < 3; ++k) {
    r.clause_holds[k] = r.intervals[k].contains(values[k]);
    r.admissible = r.admissible || r.clause_holds[k];
  }
  return r;
}

TemperedWeights tempered_weights(double beta, double lambda, double h,
                                 const Gammas& gammas, std::size_t K) {
  require_beta(beta);
  if (!(h > 0.0)) throw DomainError("h must be positive");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  if (K < 2) throw DomainError("tempered_weights needs K >= 2");

  TemperedWeights tw;
  tw.beta = beta;
  tw.lambda = lambda;
  tw.h = h;
  tw.gammas = gammas;
  tw.w = gl_weights(beta, K);

  const auto& w = tw.w;
  const double hl = h * lambda;
  const auto [g1, g2, g3] = gammas;
  tw.g.resize(K + 1);
  tw.g[0] = g1 * w[0] * std::exp(hl);
  tw.g[1] = g1 * w[1] + g2 * w[0];
  for (std::size_t k = 2; k <= K; ++k) {
    tw.g[k] = (g1 * w[k] + g2 * w[k - 1] + g3 * w[k - 2]) *
              std::exp(-static_cast<double>(k - 1) * hl);
  }
  tw.rho = (g1 * std::exp(hl) + g2 + g3 * std::exp(-hl)) *
           std::pow(1.0 - std::exp(-hl), beta);
  return tw;
}

}  // namespace tfde
