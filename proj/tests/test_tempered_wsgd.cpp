#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cfloat>
#include <cmath>

#include "tfde/errors.hpp"
#include "tfde/weights.hpp"

using namespace tfde;

namespace {

// w_k = Gamma(k - beta) / (Gamma(-beta) k!), evaluated in logs.
double w_closed_form(double beta, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (k == 0) return 1.0;
  if (k == 1) return -beta;
  // For k >= 2 Gamma(k - beta) > 0 and Gamma(-beta) > 0 on (-2,-1).
  // long double: lgamma(1e5) ~ 1e6 leaves only ~1e-10 relative accuracy in double.
  const long double kl = kd;
  const long double bl = beta;
  return static_cast<double>(std::exp(std::lgamma(kl - bl) - std::lgamma(kl + 1.0L) -
                                      std::log(std::tgamma(-bl))));
}

}  // namespace

TEST_SUITE("grunwald weights") {
  TEST_CASE("K = 0") {
    for (double b : {1.1, 1.5, 1.9}) CHECK(gl_weights(b, 0) == std::vector<double>{1.0});
  }

  TEST_CASE("first terms") {
    CHECK(gl_weights(1.2, 1)[1] == doctest::Approx(-1.2).epsilon(1e-15));
    const auto w = gl_weights(1.5, 2);
    CHECK(w[2] == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(w[2] == doctest::Approx(1.5 * 0.5 / 2.0).epsilon(1e-15));
  }

  TEST_CASE("recurrence drift against log-gamma closed form") {
    for (double b : {1.2, 1.5, 1.8}) {
      const auto w = gl_weights(b, 100000);
      for (std::size_t k : {2u, 10u, 1000u, 50000u, 100000u}) {
        CHECK(std::abs(w[k] - w_closed_form(b, k)) <= 1e-10 * std::abs(w_closed_form(b, k)));
      }
    }
  }

  TEST_CASE("untempered identities at K = 1e5") {
    for (double b : {1.2, 1.5, 1.8}) {
      const auto w = gl_weights(b, 100000);
      CHECK(w[0] == 1.0);
      CHECK(w[1] == doctest::Approx(-b).epsilon(1e-15));
      CHECK(w[2] < 1.0);
      bool decreasing = true;
      bool positive = true;
      for (std::size_t k = 3; k < w.size(); ++k) {
        decreasing = decreasing && w[k] < w[k - 1];
        positive = positive && w[k] > 0.0;
      }
      CHECK(decreasing);
      CHECK(positive);
      double partial = w[0];
      bool nonpositive = true;
      for (std::size_t k = 1; k < w.size(); ++k) {
        partial += w[k];
        nonpositive = nonpositive && partial <= 0.0;
      }
      CHECK(nonpositive);
      CHECK(std::abs(partial) < 1e-4);
    }
  }

  TEST_CASE("asymptotic decay within 2 percent at k = 1e4") {
    for (double b : {1.2, 1.5, 1.8}) {
      const auto w = gl_weights(b, 10000);
      const double ratio = std::pow(1e4, b + 1.0) * w[10000] * std::tgamma(-b);
      CHECK(std::abs(ratio - 1.0) < 0.02);
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(gl_weights(1.0, 3), DomainError);
    CHECK_THROWS_AS(gl_weights(2.0, 3), DomainError);
    CHECK_THROWS_AS(solve_gammas(0.5, 0.5), DomainError);
  }
}

TEST_SUITE("gammas") {
  TEST_CASE("forced solutions") {
    auto g = solve_gammas(1.2, 0.75);
    CHECK(g.gamma1 == 0.75);
    CHECK(g.gamma2 == doctest::Approx(0.10).epsilon(1e-14));
    CHECK(g.gamma3 == doctest::Approx(0.15).epsilon(1e-14));
    g = solve_gammas(1.8, 0.9);
    CHECK(g.gamma2 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(std::abs(g.gamma3) < 1e-15);
    g = solve_gammas(1.5, 1.0);
    CHECK(g.gamma2 == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(g.gamma3 == doctest::Approx(0.25).epsilon(1e-14));
  }

  TEST_CASE("constraints hold") {
    for (double b : {1.1, 1.4, 1.7, 1.95}) {
      for (double g1 : {-1.0, 0.0, 0.6, 2.0}) {
        const auto g = solve_gammas(b, g1);
        CHECK(std::abs(g.gamma1 + g.gamma2 + g.gamma3 - 1.0) < 1e-14);
        CHECK(std::abs(g.gamma1 - g.gamma3 - b / 2.0) < 1e-14);
      }
    }
  }

  // Reference intervals evaluated by hand from the clause bounds.
  TEST_CASE("clause intervals at beta = 1.2") {
    const auto r = check_gamma_conditions(1.2, solve_gammas(1.2, 0.75));
    CHECK(r.intervals[0].lower == doctest::Approx(0.5575).epsilon(2e-4));
    CHECK(r.intervals[0].upper == doctest::Approx(0.6477).epsilon(2e-4));
    CHECK(r.intervals[1].lower == doctest::Approx(0.3045).epsilon(2e-4));
    CHECK(r.intervals[1].upper == doctest::Approx(0.4850).epsilon(2e-4));
    CHECK(r.intervals[2].lower == doctest::Approx(-0.0425).epsilon(1e-3));
    CHECK(r.intervals[2].upper == doctest::Approx(0.0477).epsilon(1e-3));
    // gamma = (0.75, 0.10, 0.15) lies outside every interval.
    CHECK_FALSE(r.admissible);
    CHECK(r.matching_clauses().empty());
  }

  TEST_CASE("beta = 1.5 with gamma1 = 0 fails every clause") {
    const auto r = check_gamma_conditions(1.5, solve_gammas(1.5, 0.0));
    CHECK(r.intervals[0].lower == doctest::Approx(0.6286).epsilon(2e-4));
    CHECK(r.intervals[0].upper == doctest::Approx(0.8143).epsilon(2e-4));
    CHECK(r.intervals[1].lower == doctest::Approx(0.1214).epsilon(5e-4));
    CHECK(r.intervals[1].upper == doctest::Approx(0.4929).epsilon(2e-4));
    CHECK_FALSE(r.admissible);
    for (bool h : r.clause_holds) CHECK_FALSE(h);
  }

  TEST_CASE("strict bounds") {
    const double b = 1.5;
    const auto probe = check_gamma_conditions(b, solve_gammas(b, 0.7));
    const double up = probe.intervals[0].upper;
    CHECK_FALSE(check_gamma_conditions(b, solve_gammas(b, up)).clause_holds[0]);
    const double mid = 0.5 * (probe.intervals[0].lower + up);
    const auto inside = check_gamma_conditions(b, solve_gammas(b, mid));
    CHECK(inside.clause_holds[0]);
    CHECK(inside.admissible);
    CHECK(inside.matching_clauses().front() == 1);
  }
}

TEST_SUITE("tempered weights") {
  TEST_CASE("rho vanishes without tempering") {
    const auto tw = tempered_weights(1.5, 0.0, 0.01, solve_gammas(1.5, 0.8), 10);
    CHECK(tw.rho == 0.0);
  }

  TEST_CASE("g0 and the low-order formulas") {
    const auto gm = solve_gammas(1.2, 0.75);
    const auto tw = tempered_weights(1.2, 1.0, 0.01, gm, 5);
    CHECK(tw.g[0] == doctest::Approx(0.757537625313126).epsilon(1e-14));
    CHECK(tw.g[1] == doctest::Approx(0.75 * -1.2 + gm.gamma2).epsilon(1e-14));
    const auto& w = tw.w;
    const double g4 = (0.75 * w[4] + gm.gamma2 * w[3] + gm.gamma3 * w[2]) * std::exp(-0.03);
    CHECK(tw.g[4] == doctest::Approx(g4).epsilon(1e-14));
    CHECK(tw.max_index() == 5);
  }

  TEST_CASE("partial sums approach rho") {
    const auto tw = tempered_weights(1.2, 1.0, 0.01, solve_gammas(1.2, 0.75), 100000);
    double sum = 0.0;
    for (double g : tw.g) sum += g;
    CHECK(tw.rho == doctest::Approx(0.003981198711931965).epsilon(1e-13));
    CHECK(std::abs(sum - tw.rho) < 1e-6);
    CHECK(tw.rho >= 0.0);
  }

  TEST_CASE("sign pattern with mid-interval gamma1") {
    for (double b : {1.1, 1.5, 1.9}) {
      const auto probe = check_gamma_conditions(b, solve_gammas(b, 0.0));
      const double g1 = 0.5 * (probe.intervals[0].lower + probe.intervals[0].upper);
      const auto gm = solve_gammas(b, g1);
      REQUIRE(check_gamma_conditions(b, gm).admissible);
      for (double hl : {0.0, 0.01, 0.1}) {
        const auto tw = tempered_weights(b, hl == 0.0 ? 0.0 : 1.0, hl == 0.0 ? 0.01 : hl, gm,
                                         10000);
        CAPTURE(b);
        CAPTURE(hl);
        CHECK(tw.g[1] < 0.0);
        CHECK(tw.g[0] + tw.g[2] > 0.0);
        bool ok = true;
        for (std::size_t k = 3; k <= 10000; ++k) {
          // The damping factor leaves the double range near k = 7000 at h lambda = 0.1.
          const bool representable = static_cast<double>(k - 1) * hl < 700.0;
          ok = ok && (representable ? tw.g[k] > 0.0 : tw.g[k] >= 0.0);
        }
        CHECK(ok);
      }
    }
  }

  TEST_CASE("domain") {
    const auto gm = solve_gammas(1.5, 0.8);
    CHECK_THROWS_AS(tempered_weights(1.5, 1.0, 0.0, gm, 4), DomainError);
    CHECK_THROWS_AS(tempered_weights(1.5, -1.0, 0.1, gm, 4), DomainError);
    CHECK_THROWS_AS(tempered_weights(1.5, 1.0, 0.1, gm, 1), DomainError);
    CHECK_THROWS_AS(tempered_weights(2.5, 1.0, 0.1, gm, 4), DomainError);
  }
}
