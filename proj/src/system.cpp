#include "tfde/system.hpp"

#include <cmath>
#include <string>

#include "tfde/errors.hpp"

namespace tfde {

std::vector<double> g_first_column(const TemperedWeights& weights, std::size_t n,
                                   double dt) {
  if (weights.max_index() < n) {
    throw InsufficientWeightsError("need tempered weights up to g_" +
                                   std::to_string(n) + ", have up to g_" +
                                   std::to_string(weights.max_index()));
  }
  const auto& g = weights.g;
  const double scale = -dt / (2.0 * std::pow(weights.h, weights.beta));
  std::vector<double> c(n);
  c[0] = 2.0 * (g[1] - weights.rho);
  if (n > 1) c[1] = g[0] + g[2];
  for (std::size_t k = 2; k < n; ++k) c[k] = g[k + 1];
  for (auto& v : c) v *= scale;
  return c;
}

DiscreteSystem build_system(const ProblemConfig& config,
                            const TemperedWeights& weights) {
  config.validate();
  const std::size_t n = config.N;
  auto grid = config.grid();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = config.diffusion(grid[i]);
    if (!(d[i] >= 0.0)) {
      throw DomainError("diffusion coefficient negative at x_" +
                        std::to_string(i + 1));
    }
  }
  SymmetricToeplitz G(g_first_column(weights, n, config.dt()));
  auto tau = tau_from_toeplitz(G);
  return DiscreteSystem{std::move(G), std::move(d), std::move(tau),
                        std::move(grid), config.h(), config.dt()};
}

DiscreteSystem build_system(const ProblemConfig& config) {
  config.validate();
  const auto gammas = solve_gammas(config.beta, config.gamma1);
  const auto weights = tempered_weights(config.beta, config.lambda, config.h(),
                                        gammas, std::max<std::size_t>(config.N, 2));
  return build_system(config, weights);
}

std::vector<double> apply_A(const DiscreteSystem& sys, std::span<const double> v) {
  require_length(v.size(), sys.size(), "apply_A");
  auto gv = sys.G.matvec(v);
  for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = v[i] + sys.D[i] * gv[i];
  return gv;
}

std::vector<double> step_rhs(const DiscreteSystem& sys, std::span<const double> u_j,
                             std::span<const double> f_half, double dt) {
  require_length(u_j.size(), sys.size(), "step_rhs u_j");
  require_length(f_half.size(), sys.size(), "step_rhs f_half");
  auto gu = sys.G.matvec(u_j);
  for (std::size_t i = 0; i < gu.size(); ++i)
    gu[i] = u_j[i] - sys.D[i] * gu[i] + dt * f_half[i];
  return gu;
}

DenseMatrix dense_A(const DiscreteSystem& sys) {
  const std::size_t n = sys.size();
  const auto c = sys.G.first_column();
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = sys.D[i] * c[i > j ? i - j : j - i] + (i == j ? 1.0 : 0.0);
    }
  }
  return a;
}

}  // namespace tfde
