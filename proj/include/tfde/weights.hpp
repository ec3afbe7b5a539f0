#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace tfde {

/// Mixing coefficients of the weighted-and-shifted Grunwald formula.
/// They satisfy gamma1 + gamma2 + gamma3 = 1 and gamma1 - gamma3 = beta/2.
struct Gammas {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
};

/// Grunwald-Letnikov weights w_0..w_K, w_0 = 1,
/// w_k = (1 - (1+beta)/k) w_{k-1}. Sequences are cached per beta.
std::vector<double> gl_weights(double beta, std::size_t K);

/// gamma1 is the free parameter; gamma3 = gamma1 - beta/2,
/// gamma2 = 1 - gamma1 - gamma3.
Gammas solve_gammas(double beta, double gamma1);

struct OpenInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double v) const noexcept { return lower < v && v < upper; }
};

/// Result of the three admissibility clauses; clause k constrains gamma_k.
struct GammaCheck {
  bool admissible = false;
  std::array<bool, 3> clause_holds{};
  std::array<OpenInterval, 3> intervals{};

  /// 1-based indices of the clauses that hold.
  std::vector<int> matching_clauses() const;
};

/// Evaluates the sufficient conditions for g_1 < 0, g_0 + g_2 > 0,
/// g_k > 0 (k >= 3). All inequalities are strict.
GammaCheck check_gamma_conditions(double beta, const Gammas& gammas);

/// Tempered weights g_0..g_K and the tempering constant rho.
struct TemperedWeights {
  double beta = 0.0;
  double lambda = 0.0;
  double h = 0.0;
  Gammas gammas;
  std::vector<double> w;
  std::vector<double> g;
  double rho = 0.0;

  std::size_t max_index() const noexcept { return g.empty() ? 0 : g.size() - 1; }
};

/// g_0 = gamma1 w_0 e^{h lambda}, g_1 = gamma1 w_1 + gamma2 w_0,
/// g_k = (gamma1 w_k + gamma2 w_{k-1} + gamma3 w_{k-2}) e^{-(k-1) h lambda},
/// rho = (gamma1 e^{h lambda} + gamma2 + gamma3 e^{-h lambda})(1 - e^{-h lambda})^beta.
TemperedWeights tempered_weights(double beta, double lambda, double h,
                                 const Gammas& gammas, std::size_t K);

}  // namespace tfde
