#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "equicert/families.hpp"
#include "equicert/identities.hpp"
#include "equicert/maxent.hpp"
#include "equicert/momatrix.hpp"

using namespace equicert;

namespace {

constexpr double kTol = 1e-10;

double weight(const HandelmanCertificate& c, const Exponent& alpha) {
  for (const auto& w : c.weights)
    if (w.alpha == alpha) return w.value;
  ADD_FAILURE() << "missing generator";
  return 0.0;
}

Rational determinant(RationalMatrix m) {
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

double log_rational(const Rational& r) {
  long exp_num = 0, exp_den = 0;
  const double mn = mpz_get_d_2exp(&exp_num, r.numerator().get_mpz_t());
  const double md = mpz_get_d_2exp(&exp_den, r.denominator().get_mpz_t());
  return std::log(mn / md) + static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

// Moments of the density (3/4)(1 - x^2) on [-1, 1].
std::vector<double> parabola_moments(unsigned n) {
  std::vector<double> y(2 * n + 1);
  for (unsigned k = 0; k <= 2 * n; ++k) y[k] = k % 2 ? 0.0 : 0.75 * (2.0 / (k + 1) - 2.0 / (k + 3));
  return y;
}

}  // namespace

TEST(Handelman, ConstantThreeDegreeOne) {
  const auto s = solve_handelman(UPoly::constant(3), 1);
  EXPECT_TRUE(s.report.converged);
  EXPECT_NEAR(weight(s.certificate, {0, 0}), 1.0, 1e-9);
  EXPECT_NEAR(weight(s.certificate, {1, 0}), 2.0, 1e-9);
  EXPECT_NEAR(weight(s.certificate, {0, 1}), 2.0, 1e-9);
  EXPECT_NEAR(s.dual.values[0], 1.0, 1e-9);
  EXPECT_NEAR(s.dual.values[1], 0.5, 1e-9);
}

TEST(Handelman, ConstantSixDegreeTwo) {
  const auto s = solve_handelman(UPoly::constant(6), 2);
  EXPECT_NEAR(weight(s.certificate, {1, 1}), 6.0, 1e-8);
  EXPECT_NEAR(weight(s.certificate, {2, 0}), 3.0, 1e-8);
  EXPECT_NEAR(weight(s.certificate, {0, 2}), 3.0, 1e-8);
  EXPECT_NEAR(weight(s.certificate, {1, 0}), 2.0, 1e-8);
  EXPECT_NEAR(weight(s.certificate, {0, 1}), 2.0, 1e-8);
  EXPECT_NEAR(weight(s.certificate, {0, 0}), 1.0, 1e-8);
}

TEST(Handelman, BoundaryTargetDiagnostic) {
  try {
    solve_handelman(UPoly::x(), 3);
    FAIL() << "expected NoInteriorCertificate";
  } catch (const NoInteriorCertificate& e) {
    EXPECT_NE(std::string(e.what()).find("no interior certificate found at degree 3"), std::string::npos);
    EXPECT_FALSE(e.report().converged);
  }
}

TEST(Handelman, ArgumentErrors) {
  EXPECT_THROW(solve_handelman(UPoly::monomial(3), 2), std::invalid_argument);
  EXPECT_THROW(solve_handelman(UPoly::constant(1), 0), std::invalid_argument);
  SolverOptions bad;
  bad.initial_dual = std::vector<double>{1.0};
  EXPECT_THROW(solve_handelman(UPoly::constant(3), 1, bad), std::invalid_argument);
  bad.initial_dual = std::vector<double>{1.0, 2.0};  // <l, 1 - x> = -1
  EXPECT_THROW(solve_handelman(UPoly::constant(3), 1, bad), std::invalid_argument);
}

TEST(Handelman, KktConsistency) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = solve_handelman(UPoly::constant(interval_generator_count(n)), n);
    for (const auto& w : s.certificate.weights) {
      const auto coeffs = generator_coefficients(1, n, w.alpha);
      double pairing = 0.0;
      for (std::size_t b = 0; b < coeffs.size(); ++b) pairing += coeffs[b].to_double() * s.dual.values[b];
      EXPECT_NEAR(w.value * pairing, 1.0, 10 * kTol) << n;
    }
  }
}

TEST(Handelman, DualObjectiveNonIncreasing) {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto s = solve_handelman(UPoly({Rational(2), Rational(-1), Rational(3)}), n);
    for (std::size_t i = 1; i < s.report.history.size(); ++i) {
      EXPECT_LE(s.report.history[i].dual_objective, s.report.history[i - 1].dual_objective + 1e-12) << n;
    }
    EXPECT_EQ(s.report.step_history_length(), s.report.iterations);
  }
}

TEST(Handelman, UniqueFromTwoStarts) {
  for (unsigned n = 2; n <= 6; ++n) {
    const UPoly p = UPoly::constant(interval_generator_count(n));
    SolverOptions other;
    std::vector<double> beta22;  // moments of 6 x (1 - x)
    for (unsigned k = 0; k <= n; ++k) beta22.push_back(6.0 / ((k + 2.0) * (k + 3.0)));
    other.initial_dual = beta22;
    const auto a = solve_handelman(p, n);
    const auto b = solve_handelman(p, n, other);
    ASSERT_EQ(a.certificate.weights.size(), b.certificate.weights.size());
    for (std::size_t i = 0; i < a.certificate.weights.size(); ++i) {
      EXPECT_NEAR(a.certificate.weights[i].value, b.certificate.weights[i].value, 100 * kTol) << n;
    }
  }
}

TEST(Handelman, ObjectiveCrossCheck) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = solve_handelman(UPoly::constant(interval_generator_count(n)), n);
    double closed = 0.0;
    for (const auto& a : graded_basis(2, n)) closed -= log_rational(beta_integral(a[0], a[1]));
    EXPECT_GE(closed, s.report.objective - 1e-6) << n;
  }
}

TEST(Putinar, DegreeOneClosedForm) {
  const auto s = solve_putinar(1);
  EXPECT_TRUE(s.report.converged);
  EXPECT_NEAR(s.certificate.gram_a[0][0], 1.0, 1e-9);
  EXPECT_NEAR(s.certificate.gram_a[0][1], 0.0, 1e-9);
  EXPECT_NEAR(s.certificate.gram_a[1][1], 2.0, 1e-9);
  EXPECT_NEAR(s.certificate.gram_b[0][0], 2.0, 1e-9);
  EXPECT_NEAR(s.dual.values[0], 1.0, 1e-9);
  EXPECT_NEAR(s.dual.values[1], 0.0, 1e-9);
  EXPECT_NEAR(s.dual.values[2], 0.5, 1e-9);
}

TEST(Putinar, RecoversArcsineMoments) {
  const auto s = solve_putinar(4);
  const double expected[] = {1, 0, 0.5, 0, 0.375, 0, 0.3125, 0, 35.0 / 128};
  for (std::size_t k = 0; k < 9; ++k) EXPECT_NEAR(s.dual.values[k], expected[k], 1e-8) << k;
}

TEST(Putinar, NegativeTargetDiagnostic) {
  EXPECT_THROW(solve_putinar(1, {}, UPoly::constant(-1)), NoInteriorCertificate);
  EXPECT_THROW(solve_putinar(1, {}, UPoly::monomial(3)), std::invalid_argument);
  EXPECT_THROW(solve_putinar(0), std::invalid_argument);
}

TEST(Putinar, KktConsistency) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = solve_putinar(n);
    const auto& y = s.dual.values;
    const auto& a = s.certificate.gram_a;
    const auto& b = s.certificate.gram_b;
    double worst = 0.0;
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= n; ++j) {
        long double v = 0;
        for (unsigned k = 0; k <= n; ++k) v += static_cast<long double>(a[i][k]) * y[k + j];
        worst = std::max(worst, std::abs(static_cast<double>(v) - (i == j ? 1.0 : 0.0)));
      }
    }
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        long double v = 0;
        for (unsigned k = 0; k < n; ++k) v += static_cast<long double>(b[i][k]) * (y[k + j] - y[k + j + 2]);
        worst = std::max(worst, std::abs(static_cast<double>(v) - (i == j ? 1.0 : 0.0)));
      }
    }
    EXPECT_LE(worst, 10 * kTol) << n;
  }
}

TEST(Putinar, UniqueFromTwoStarts) {
  for (unsigned n = 1; n <= 6; ++n) {
    SolverOptions other;
    other.initial_dual = parabola_moments(n);
    const auto a = solve_putinar(n);
    const auto b = solve_putinar(n, other);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= n; ++j)
        EXPECT_NEAR(a.certificate.gram_a[i][j], b.certificate.gram_a[i][j],
                    100 * kTol * std::max(1.0, std::abs(a.certificate.gram_a[i][j])))
            << n;
  }
}

TEST(Putinar, ObjectiveCrossCheck) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = solve_putinar(n);
    const auto ma = moment_matrix(MeasureId::arcsine(), n);
    const auto mb = moment_matrix(MeasureId::arcsine(), n - 1, one_minus_x_squared());
    const double closed = -log_rational(determinant(ma.entries)) - log_rational(determinant(mb.entries));
    EXPECT_GE(closed, s.report.objective - 1e-6) << n;
    EXPECT_NEAR(closed, s.report.objective, 1e-6) << n;
  }
}

TEST(Putinar, DualObjectiveNonIncreasing) {
  const auto s = solve_putinar(6, {}, UPoly({Rational(5), Rational(1), Rational(2)}));
  for (std::size_t i = 1; i < s.report.history.size(); ++i) {
    EXPECT_LE(s.report.history[i].dual_objective, s.report.history[i - 1].dual_objective + 1e-12);
  }
}

TEST(Simplex, DegreeOneTriangle) {
  const auto s = solve_simplex(2, 1);
  EXPECT_NEAR(weight(s.certificate, {0, 0, 0}), 1.0, 1e-8);
  for (const auto& a : homogeneous_exponents(3, 1)) EXPECT_NEAR(weight(s.certificate, a), 3.0, 1e-8);
}

TEST(Simplex, DegreeTwoTetrahedron) {
  const auto s = solve_simplex(3, 2);
  for (const auto& a : homogeneous_exponents(4, 2)) {
    const bool square = std::count(a.begin(), a.end(), 2u) == 1;
    EXPECT_NEAR(weight(s.certificate, a), square ? 10.0 : 20.0, 1e-7);
  }
  EXPECT_LE(uniform_candidate_deviation(s.certificate), 1e-8);
}

TEST(Simplex, DegreeThreeTriangleConverges) {
  const auto s = solve_simplex(2, 3);
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(s.report.residual, kTol);
}

TEST(Verify, Examples) {
  HandelmanCertificate c{1, 1, {{{0, 0}, 1.0}, {{1, 0}, 2.0}, {{0, 1}, 2.0}}, MPoly::constant(1, 3)};
  EXPECT_EQ(verify_certificate(c, UPoly::constant(3)), 0.0);
  EXPECT_EQ(verify_certificate(c, UPoly::constant(4)), 1.0);
  EXPECT_THROW(verify_certificate(c, MPoly::constant(2, 3)), std::invalid_argument);
  const PutinarCertificate p{1, {{1, 0}, {0, 2}}, {{2}}};
  EXPECT_EQ(verify_certificate(p, UPoly::constant(3)), 0.0);
  EXPECT_THROW(verify_certificate(PutinarCertificate{2, {{1}}, {{1}}}, UPoly::constant(3)), std::invalid_argument);
}

TEST(Rationalize, ContinuedFractions) {
  EXPECT_EQ(rationalize(0.5), Rational(1, 2));
  EXPECT_EQ(rationalize(1.0 / 3.0), Rational(1, 3));
  EXPECT_EQ(rationalize(3.14159265358979, 1000), Rational(355, 113));
  EXPECT_EQ(rationalize(-0.2), Rational(-1, 5));
  EXPECT_EQ(rationalize(7.0), Rational(7));
  EXPECT_THROW(rationalize(std::nan("")), std::domain_error);
}

TEST(Rationalize, ExactCertificates) {
  const auto h = rationalize_certificate(solve_handelman(UPoly::constant(10), 3));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(verify_certificate_exact(*h, MPoly::constant(1, 10)).is_zero());
  const auto p = rationalize_certificate(solve_putinar(5));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(verify_certificate_exact(*p, UPoly::constant(11)).is_zero());
  EXPECT_EQ(p->gram_a, invert_exact(moment_matrix(MeasureId::arcsine(), 5)));
}

TEST(Solvers, ConcurrentSolvesAreDeterministic) {
  HandelmanSolution a, b;
  std::thread t1([&] { a = solve_simplex(2, 2); });
  std::thread t2([&] { b = solve_simplex(2, 2); });
  t1.join();
  t2.join();
  for (std::size_t i = 0; i < a.certificate.weights.size(); ++i) {
    EXPECT_EQ(a.certificate.weights[i].value, b.certificate.weights[i].value);
  }
}
