#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "tfde/errors.hpp"
#include "tfde/matrix_market.hpp"
#include "tfde/sine_transform.hpp"
#include "tfde/structured.hpp"

using namespace tfde;
using oracle::Mat;
using oracle::Vec;

namespace {

// Symmetric positive definite Toeplitz column: diagonally dominant.
std::vector<double> spd_column(std::size_t n, unsigned seed) {
  auto c = oracle::random_vector(n, seed, -0.5, 0.5);
  double off = 0.0;
  for (std::size_t k = 1; k < n; ++k) off += std::abs(c[k]);
  c[0] = 2.0 * off + 1.0;
  return c;
}

}  // namespace

TEST_SUITE("dst1") {
  TEST_CASE("order one is the identity") {
    SineTransformPlan plan(1);
    const std::vector<double> x{5.0};
    CHECK(dst1(plan, x)[0] == doctest::Approx(5.0).epsilon(1e-15));
  }

  TEST_CASE("first unit vector at n = 3") {
    SineTransformPlan plan(3);
    const auto y = dst1(plan, std::vector<double>{1.0, 0.0, 0.0});
    CHECK(y[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(y[1] == doctest::Approx(0.70710678118654752).epsilon(1e-14));
    CHECK(y[2] == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("matches the defining sum") {
    for (std::size_t n : {2u, 7u, 16u, 33u}) {
      SineTransformPlan plan(n);
      const auto x = oracle::random_vector(n, 11 + n);
      const Vec want = oracle::dst_matrix(n) * oracle::to_eigen(x);
      CHECK(oracle::rel_diff(dst1(plan, x), want) < 1e-13);
    }
  }

  TEST_CASE("involution and orthonormality for n = 1..256") {
    for (std::size_t n = 1; n <= 256; ++n) {
      SineTransformPlan plan(n);
      const auto x = oracle::random_vector(n, 100 + n);
      const auto y = dst1(plan, x);
      const auto z = dst1(plan, y);
      const double xinf = oracle::max_abs(oracle::to_eigen(x));
      CHECK(oracle::max_abs_diff(z, x) <= 1e-12 * xinf);
      const double nx = oracle::to_eigen(x).norm();
      CHECK(std::abs(oracle::to_eigen(y).norm() - nx) <= 1e-12 * nx);
    }
  }

  TEST_CASE("plan reuse gives identical output and counts transforms") {
    SineTransformPlan plan(40);
    const auto x = oracle::random_vector(40, 3);
    plan.reset_transform_count();
    const auto first = dst1(plan, x);
    for (int i = 0; i < 5; ++i) CHECK(dst1(plan, x) == first);
    SineTransformPlan copy = plan;
    dst1(copy, x);
    CHECK(plan.transform_count() == 7);
  }

  TEST_CASE("length mismatch") {
    SineTransformPlan plan(4);
    CHECK_THROWS_AS(dst1(plan, std::vector<double>(3)), ContractViolation);
  }
}

TEST_SUITE("toeplitz") {
  TEST_CASE("identity column") {
    std::vector<double> c(6, 0.0);
    c[0] = 1.0;
    const auto x = oracle::random_vector(6, 5);
    CHECK(oracle::max_abs_diff(toeplitz_matvec(SymmetricToeplitz(c), x), x) < 1e-15);
  }

  TEST_CASE("tridiagonal stencil") {
    const SymmetricToeplitz t({2.0, 1.0, 0.0, 0.0});
    const auto y = toeplitz_matvec(t, std::vector<double>{1, 1, 1, 1});
    const std::vector<double> want{3, 4, 4, 3};
    CHECK(oracle::max_abs_diff(y, want) < 1e-14);
  }

  TEST_CASE("dense oracle for n <= 64") {
    for (std::size_t n = 1; n <= 64; ++n) {
      const auto c = oracle::random_vector(n, 200 + n);
      const auto x = oracle::random_vector(n, 300 + n);
      const SymmetricToeplitz t(c);
      const Vec want = oracle::toeplitz(c) * oracle::to_eigen(x);
      CHECK(oracle::rel_diff(t.matvec(x), want) < 1e-12);
      CHECK((oracle::to_eigen(t.to_dense()) - oracle::toeplitz(c)).norm() == 0.0);
    }
  }

  TEST_CASE("length mismatch and bad input") {
    const SymmetricToeplitz t({1.0, 0.5});
    CHECK_THROWS_AS(t.matvec(std::vector<double>(3)), ContractViolation);
    CHECK_THROWS(SymmetricToeplitz(std::vector<double>{}));
    CHECK_THROWS(SymmetricToeplitz(std::vector<double>{1.0, NAN}));
  }
}

TEST_SUITE("hankel and tau") {
  TEST_CASE("tridiagonal has no correction") {
    const auto hc = hankel_correction(SymmetricToeplitz({2.0, -1.0, 0.0, 0.0}));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(hc.entry(i, j) == 0.0);
  }

  TEST_CASE("column pattern at n = 5") {
    const std::vector<double> c{10, 11, 12, 13, 14};
    const auto hc = hankel_correction(SymmetricToeplitz(c));
    CHECK(hc.first_col == std::vector<double>{12, 13, 14, 0, 0});
    CHECK(hc.last_col == std::vector<double>{0, 0, 14, 13, 12});
  }

  TEST_CASE("small orders give a zero correction") {
    for (std::size_t n : {1u, 2u}) {
      const auto hc = hankel_correction(SymmetricToeplitz(oracle::random_vector(n, 9)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(hc.entry(i, j) == 0.0);
    }
  }

  TEST_CASE("entries depend only on i + j") {
    const auto hc = hankel_correction(SymmetricToeplitz(oracle::random_vector(9, 12)));
    const Mat h = oracle::to_eigen(hc.to_dense());
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        for (int k = 0; k < 9; ++k)
          if (i + j - k >= 0 && i + j - k < 9) CHECK(h(i, j) == h(k, i + j - k));
  }

  TEST_CASE("T - HC(T) is diagonalized by S") {
    for (std::size_t n : {3u, 8u, 17u, 32u}) {
      const auto c = oracle::random_vector(n, 400 + n);
      const SymmetricToeplitz t(c);
      const Mat m = oracle::toeplitz(c) - oracle::to_eigen(hankel_correction(t).to_dense());
      const Mat s = oracle::dst_matrix(n);
      const Mat d = s * m * s;
      const double diag = d.diagonal().norm();
      const double off = (d - Mat(d.diagonal().asDiagonal())).norm();
      CHECK(off <= 1e-10 * diag);

      // Reconstruction from the computed eigenvalues.
      const auto tau = tau_from_toeplitz(t);
      CHECK((oracle::to_eigen(tau.to_dense()) - m).cwiseAbs().maxCoeff() < 1e-12);
      // The eigenvalues are the diagonal of S M S in the same order.
      for (std::size_t k = 0; k < n; ++k)
        CHECK(tau.eigenvalues()[k] == doctest::Approx(d(k, k)).epsilon(1e-10).scale(1.0));
    }
  }

  TEST_CASE("zero column has zero eigenvalues") {
    const auto tau = tau_from_toeplitz(SymmetricToeplitz(std::vector<double>(7, 0.0)));
    for (double l : tau.eigenvalues()) CHECK(l == 0.0);
  }

  TEST_CASE("second difference eigenvalues") {
    std::vector<double> c(8, 0.0);
    c[0] = 2.0;
    c[1] = -1.0;
    const auto tau = tau_from_toeplitz(SymmetricToeplitz(c));
    Eigen::SelfAdjointEigenSolver<Mat> es(oracle::toeplitz(c));
    for (std::size_t k = 1; k <= 8; ++k) {
      const double want = 2.0 - 2.0 * std::cos(static_cast<double>(k) * M_PI / 9.0);
      CHECK(tau.eigenvalues()[k - 1] == doctest::Approx(want).epsilon(1e-13));
      CHECK(es.eigenvalues()(k - 1) == doctest::Approx(want).epsilon(1e-12));
    }
  }

  TEST_CASE("tau matvec against dense G - HC(G)") {
    const auto c = spd_column(8, 77);
    const SymmetricToeplitz t(c);
    const Mat m = oracle::toeplitz(c) - oracle::to_eigen(hankel_correction(t).to_dense());
    const auto x = oracle::random_vector(8, 78);
    CHECK(oracle::rel_diff(tau_from_toeplitz(t).matvec(x), m * oracle::to_eigen(x)) < 1e-12);
  }

  TEST_CASE("tau matrices commute and are persymmetric") {
    const auto a = tau_from_toeplitz(SymmetricToeplitz(oracle::random_vector(10, 1)));
    const auto b = tau_from_toeplitz(SymmetricToeplitz(oracle::random_vector(10, 2)));
    const Mat A = oracle::to_eigen(a.to_dense());
    const Mat B = oracle::to_eigen(b.to_dense());
    CHECK((A * B - B * A).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((A - A.transpose()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((A - A.reverse()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_SUITE("shifted solves") {
  TEST_CASE("tau: zero shift, round trip, dense LU") {
    const auto tau = tau_from_toeplitz(SymmetricToeplitz(spd_column(32, 5)));
    const auto v = oracle::random_vector(32, 6);
    CHECK(oracle::max_abs_diff(tau_shifted_solve(tau, 0.0, v), v) < 1e-13);

    const double d = 0.7;
    const auto x = tau_shifted_solve(tau, d, v);
    auto back = tau.matvec(x);
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = x[i] + d * back[i];
    CHECK(oracle::max_abs_diff(back, v) < 1e-10);

    const auto tau8 = tau_from_toeplitz(SymmetricToeplitz(spd_column(8, 15)));
    const Mat K = Mat::Identity(8, 8) + 2.5 * oracle::to_eigen(tau8.to_dense());
    const auto v8 = oracle::random_vector(8, 16);
    const Vec want = K.partialPivLu().solve(oracle::to_eigen(v8));
    CHECK(oracle::rel_diff(tau_shifted_solve(tau8, 2.5, v8), want) < 1e-12);
  }

  TEST_CASE("tau: singular shift") {
    const TauMatrix tau({1.0, -2.0, 3.0});
    CHECK_THROWS_AS(tau_shifted_solve(tau, 0.5, std::vector<double>(3, 1.0)),
                    SingularShiftError);
  }

  TEST_CASE("strang patterns") {
    const auto c4 = strang_circulant(SymmetricToeplitz({2.0, -1.0, 0.0, 0.0}));
    auto col = c4.first_column();
    CHECK(std::vector<double>(col.begin(), col.end()) == std::vector<double>{2, -1, 0, -1});
    const auto c5 = strang_circulant(SymmetricToeplitz({5, 4, 3, 2, 1}));
    col = c5.first_column();
    CHECK(std::vector<double>(col.begin(), col.end()) == std::vector<double>{5, 4, 3, 3, 4});
  }

  TEST_CASE("circulant matvec and real spectrum") {
    for (std::size_t n : {8u, 15u, 64u}) {
      const auto c = strang_circulant(SymmetricToeplitz(oracle::random_vector(n, 20 + n)));
      const auto col = c.first_column();
      Mat dense(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dense(i, j) = col[(i + n - j) % n];
      CHECK((oracle::to_eigen(c.to_dense()) - dense).norm() == 0.0);
      const auto x = oracle::random_vector(n, 30 + n);
      CHECK(oracle::rel_diff(c.matvec(x), dense * oracle::to_eigen(x)) < 1e-12);
      for (const auto& z : c.spectrum()) CHECK(std::abs(z.imag()) <= 1e-10);
    }
  }

  TEST_CASE("circulant: zero shift, round trip, dense LU") {
    const auto c = strang_circulant(SymmetricToeplitz(spd_column(16, 40)));
    const auto v = oracle::random_vector(16, 41);
    CHECK(oracle::max_abs_diff(circulant_shifted_solve(c, 0.0, v), v) < 1e-14);

    const auto x = circulant_shifted_solve(c, 1.3, v);
    auto back = c.matvec(x);
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = x[i] + 1.3 * back[i];
    CHECK(oracle::max_abs_diff(back, v) < 1e-10);

    const auto c8 = strang_circulant(SymmetricToeplitz(spd_column(8, 42)));
    const Mat K = Mat::Identity(8, 8) + 0.4 * oracle::to_eigen(c8.to_dense());
    const auto v8 = oracle::random_vector(8, 43);
    CHECK(oracle::rel_diff(circulant_shifted_solve(c8, 0.4, v8),
                           K.partialPivLu().solve(oracle::to_eigen(v8))) < 1e-12);
  }

  TEST_CASE("circulant: singular shift") {
    // Spectrum of (1, -1) is {0, 2}; d = -0.5 kills the second mode.
    const CirculantMatrix c(std::vector<double>{1.0, -1.0});
    CHECK_THROWS_AS(circulant_shifted_solve(c, -0.5, std::vector<double>{1.0, 1.0}),
                    SingularShiftError);
  }
}

TEST_SUITE("matrix market") {
  TEST_CASE("dense round trip keeps explicit zeros") {
    const SymmetricToeplitz t({3.0, -1.0, 0.0, 0.25, 1e-300});
    std::stringstream ss;
    write_matrix_market(ss, t.to_dense());
    const std::string text = ss.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate real general", 0) == 0);
    const auto back = read_matrix_market(ss);
    CHECK((oracle::to_eigen(back) - oracle::to_eigen(t.to_dense())).norm() == 0.0);
  }

  TEST_CASE("diagonal and vector") {
    const std::vector<double> d{1.5, 0.0, -2.0};
    std::stringstream ss;
    write_matrix_market_diagonal(ss, d);
    const auto m = read_matrix_market(ss);
    CHECK(m.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, i) == d[i]);

    std::stringstream sv;
    write_matrix_market_vector(sv, d);
    CHECK(sv.str().rfind("%%MatrixMarket matrix array real general", 0) == 0);
    const auto v = read_matrix_market(sv);
    CHECK(v.cols() == 1);
    for (std::size_t i = 0; i < 3; ++i) CHECK(v(i, 0) == d[i]);
  }

  TEST_CASE("malformed input") {
    std::stringstream bad("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
    CHECK_THROWS(read_matrix_market(bad));
    std::stringstream shortfile("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n");
    CHECK_THROWS(read_matrix_market(shortfile));
  }
}
