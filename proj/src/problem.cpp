#include "tfde/problem.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "tfde/errors.hpp"

namespace tfde {

double coefficient_d1(double x) { return std::exp(5.0 * x) / (1.0 + x); }

double coefficient_d2(double x) {
  if (x <= 0.0 || x >= 1.0)
    throw DomainError("d2 is singular outside the open interval (0,1)");
  return (std::exp(3.0 * x) + 0.2) / (x * (1.0 - x));
}

double exact_solution(double x, double t, double lambda) {
  const double p = x * (1.0 - x);
  return t * std::exp(-lambda * x) * p * p * p;
}

namespace {

constexpr std::array<double, 4> kBinom3{1.0, 3.0, 3.0, 1.0};
constexpr int kRightSeriesTerms = 30;

// x- and t-independent parts of the manufactured source for one beta.
class SourceTerms {
 public:
  SourceTerms(double lambda, double beta) : lambda_(lambda), beta_(beta) {
    // ratio_[k] = Gamma(k + 4) / Gamma(k + 4 - beta)
    for (std::size_t k = 0; k < ratio_.size(); ++k) {
      const double a = 4.0 + static_cast<double>(k);
      ratio_[k] = std::exp(std::lgamma(a) - std::lgamma(a - beta));
    }
    lambda_pow_ = std::pow(lambda, beta);
  }

  double operator()(double x, double t, double d_at_x) const {
    const double profile = std::exp(-lambda_ * x) * std::pow(x * (1.0 - x), 3);

    double left = 0.0;
    for (int m = 0; m <= 3; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      left += sign * kBinom3[m] * ratio_[m] * std::pow(x, 3.0 + m - beta_);
    }

    const double y = 1.0 - x;
    std::array<double, 4> base{};
    for (int m = 0; m <= 3; ++m) base[m] = std::pow(y, 3.0 + m - beta_);
    double right = 0.0;
    double coeff = 1.0;  // 3^j / j!
    double yj = 1.0;     // (1 - x)^j
    for (int j = 0; j <= kRightSeriesTerms; ++j) {
      if (j > 0) {
        coeff *= 3.0 / j;
        yj *= y;
      }
      double inner = 0.0;
      for (int m = 0; m <= 3; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        inner += sign * kBinom3[m] * ratio_[m + j] * base[m];
      }
      right += coeff * yj * inner;
    }

    return profile -
           t * d_at_x *
               (std::exp(-lambda_ * x) * left + std::exp(lambda_ * (x - 2.0)) * right) +
           2.0 * t * d_at_x * lambda_pow_ * profile;
  }

 private:
  double lambda_;
  double beta_;
  double lambda_pow_ = 0.0;
  std::array<double, kRightSeriesTerms + 4> ratio_{};
};

}  // namespace

double manufactured_source(double x, double t, double lambda, double beta,
                           double d_at_x) {
  return SourceTerms(lambda, beta)(x, t, d_at_x);
}

std::vector<double> ProblemConfig::grid() const {
  std::vector<double> g(N);
  for (std::size_t i = 0; i < N; ++i) g[i] = x(i + 1);
  return g;
}

void ProblemConfig::validate() const {
  if (!(b > a)) throw DomainError("interval must satisfy a < b");
  if (!(T_final > 0.0)) throw DomainError("T must be positive");
  if (N < 2) throw DomainError("N must be at least 2");
  if (M < 1) throw DomainError("M must be at least 1");
  if (!(beta > 1.0 && beta < 2.0)) throw DomainError("beta must lie in (1,2)");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  if (!diffusion.eval || !source.eval || !initial.eval)
    throw DomainError("problem fields must be set");
}

NamedField named_coefficient(const std::string& name) {
  if (name == "d1") return {"d1", coefficient_d1};
  if (name == "d2") return {"d2", coefficient_d2};
  if (name == "zero") return {"zero", [](double) { return 0.0; }};
  throw DomainError("unknown coefficient '" + name + "'");
}

NamedField constant_coefficient(double value) {
  if (!(value >= 0.0)) throw DomainError("diffusion coefficient must be >= 0");
  std::ostringstream name;
  name << value;
  return {name.str(), [value](double) { return value; }};
}

ProblemConfig manufactured_problem(std::size_t N, const NamedField& coefficient,
                                   double beta, double lambda, double gamma1) {
  ProblemConfig cfg;
  cfg.N = N;
  cfg.M = N + 1;
  cfg.beta = beta;
  cfg.lambda = lambda;
  cfg.gamma1 = gamma1;
  cfg.diffusion = coefficient;
  cfg.source = {"manufactured",
                [coefficient, terms = SourceTerms(lambda, beta)](double x, double t) {
                  return terms(x, t, coefficient(x));
                }};
  cfg.initial = {"zero", [](double) { return 0.0; }};
  return cfg;
}

}  // namespace tfde
