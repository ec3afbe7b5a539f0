#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tfde {

/// d_1(x) = e^{5x} / (1 + x).
double coefficient_d1(double x);

/// d_2(x) = (e^{3x} + 0.2) / (x (1 - x)); singular at both ends of [0,1].
/// Throws DomainError at x = 0 or x = 1.
double coefficient_d2(double x);

/// u(x,t) = t e^{-lambda x} x^3 (1-x)^3.
double exact_solution(double x, double t, double lambda);

/// Source term of the manufactured problem on [0,1] that has exact_solution
/// as its solution. d_at_x is d(x) for the coefficient in use.
double manufactured_source(double x, double t, double lambda, double beta,
                           double d_at_x);

/// A spatial field with a printable name.
struct NamedField {
  std::string name;
  std::function<double(double)> eval;
  double operator()(double x) const { return eval(x); }
};

/// A space-time field f(x,t) with a printable name.
struct NamedSpaceTimeField {
  std::string name;
  std::function<double(double, double)> eval;
  double operator()(double x, double t) const { return eval(x, t); }
};

/// du/dt = d(x) (left + right tempered derivative) u + f on (a,b) x (0,T],
/// homogeneous Dirichlet conditions, u(x,0) = u0(x).
struct ProblemConfig {
  double a = 0.0;
  double b = 1.0;
  double T_final = 1.0;
  std::size_t N = 2;  ///< interior grid points
  std::size_t M = 1;  ///< time steps
  double beta = 1.2;
  double lambda = 1.5;
  double gamma1 = 0.75;
  NamedField diffusion;
  NamedSpaceTimeField source;
  NamedField initial;

  double h() const { return (b - a) / static_cast<double>(N + 1); }
  double dt() const { return T_final / static_cast<double>(M); }
  double x(std::size_t i) const { return a + static_cast<double>(i) * h(); }
  /// Interior abscissae x_1..x_N.
  std::vector<double> grid() const;

  /// Throws DomainError on inconsistent values.
  void validate() const;
};

NamedField named_coefficient(const std::string& name);
NamedField constant_coefficient(double value);

/// The manufactured test problem on [0,1] x [0,1] with u0 = 0 and the same
/// grid density in space and time (M = N + 1, so dt = h).
ProblemConfig manufactured_problem(std::size_t N, const NamedField& coefficient,
                                   double beta = 1.2, double lambda = 1.5,
                                   double gamma1 = 0.75);

}  // namespace tfde
