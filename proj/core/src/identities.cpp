#include "equicert/identities.hpp"

#include <stdexcept>

#include "equicert/families.hpp"
#include "equicert/momatrix.hpp"

namespace equicert {

bool IdentityReport::matches_expected() const {
  if (!holds || !constant || !expected_constant) return true;
  return *constant == *expected_constant;
}

std::optional<Rational> constant_reduce(const UPoly& p) {
  if (p.degree() > 0) return std::nullopt;
  return p.coeff(0);
}

std::optional<Rational> constant_reduce(const MPoly& p) {
  if (p.total_degree() > 0) return std::nullopt;
  return p.coeff(Exponent(p.dimension(), 0));
}

Rational interval_generator_count(unsigned n) {
  return Rational((static_cast<std::int64_t>(n) + 1) * (static_cast<std::int64_t>(n) + 2) / 2);
}

Rational simplex_generator_count(unsigned d, unsigned n) { return Rational(binomial(d + 1 + n, n)); }

namespace {

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

IdentityReport make_report(std::string name, IdentityParams params, const UPoly& lhs,
                           std::optional<Rational> expected) {
  IdentityReport r{std::move(name), std::move(params), false, std::nullopt, 0, std::move(expected)};
  r.residual_terms = lhs.term_count() - (lhs.coeff(0).is_zero() ? 0 : 1);
  r.holds = r.residual_terms == 0;
  if (r.holds) r.constant = lhs.coeff(0);
  return r;
}

IdentityReport make_report(std::string name, IdentityParams params, const MPoly& lhs,
                           std::optional<Rational> expected) {
  const Rational c0 = lhs.coeff(Exponent(lhs.dimension(), 0));
  IdentityReport r{std::move(name), std::move(params), false, std::nullopt, 0, std::move(expected)};
  r.residual_terms = lhs.term_count() - (c0.is_zero() ? 0 : 1);
  r.holds = r.residual_terms == 0;
  if (r.holds) r.constant = c0;
  return r;
}

}  // namespace

IdentityReport verify_pell(unsigned n) {
  require_positive(n, "verify_pell");
  const UPoly t = cheb(ChebKind::First, n);
  const UPoly u = cheb(ChebKind::Second, n - 1);
  const UPoly lhs = t * t + one_minus_x_squared() * (u * u);
  return make_report("pell", {n, std::nullopt, std::nullopt, std::nullopt}, lhs, Rational(1));
}

std::string to_string(UnityVariant v) {
  switch (v) {
    case UnityVariant::Unity1: return "unity1";
    case UnityVariant::Unity2: return "unity2";
    case UnityVariant::Cheby2: return "cheby2";
  }
  return "unknown";
}

UnityVariant parse_unity_variant(std::string_view text) {
  if (text == "unity1") return UnityVariant::Unity1;
  if (text == "unity2") return UnityVariant::Unity2;
  if (text == "cheby2") return UnityVariant::Cheby2;
  throw std::invalid_argument("unknown unity variant '" + std::string(text) + "'");
}

IdentityReport verify_unity_interval(unsigned n, UnityVariant variant) {
  require_positive(n, "verify_unity_interval");
  const UPoly g = one_minus_x_squared();
  UPoly first;
  UPoly second;
  Rational expected(2 * static_cast<std::int64_t>(n) + 1);
  switch (variant) {
    case UnityVariant::Unity1:
      for (unsigned j = 0; j <= n; ++j) {
        const UPoly t = cheb(ChebKind::First, j);
        first += t * t;
      }
      for (unsigned i = 0; i < n; ++i) {
        const UPoly u = cheb(ChebKind::Second, i);
        second += u * u;
      }
      first /= Rational(n + 1);
      second /= Rational(n + 1);
      expected = 1;
      break;
    case UnityVariant::Unity2:
      for (unsigned j = 0; j <= n; ++j) first += cheb_orthonormal_square(ChebKind::First, j);
      for (unsigned i = 0; i < n; ++i) second += cheb_orthonormal_square(ChebKind::Second, i);
      break;
    case UnityVariant::Cheby2:
      first = christoffel_form(MeasureId::arcsine(), n).univariate();
      second = christoffel_form(MeasureId::arcsine(), n - 1, g).univariate();
      break;
  }
  const UPoly lhs = first + g * second;
  return make_report("unity-interval", {n, std::nullopt, to_string(variant), std::nullopt}, lhs, expected);
}

IdentityReport verify_unity_01(unsigned n) {
  require_positive(n, "verify_unity_01");
  UPoly lhs;
  // Precompute powers of x and (1 - x).
  std::vector<UPoly> xs{UPoly::constant(1)};
  std::vector<UPoly> ys{UPoly::constant(1)};
  const UPoly one_minus_x(std::vector<Rational>{1, -1});
  for (unsigned k = 1; k <= n; ++k) {
    xs.push_back(xs.back() * UPoly::x());
    ys.push_back(ys.back() * one_minus_x);
  }
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; i + j <= n; ++j) lhs += (xs[i] * ys[j]) / beta_integral(i, j);
  }
  return make_report("unity-01", {n, std::nullopt, std::nullopt, std::nullopt}, lhs,
                     interval_generator_count(n));
}

IdentityReport verify_simplex_unity(unsigned d, unsigned n) {
  if (d == 0) throw std::invalid_argument("verify_simplex_unity: d must be >= 1");
  require_positive(n, "verify_simplex_unity");
  const MomentFunctional uniform(MeasureId::simplex_uniform(d));
  MPoly lhs(d);
  for (const Exponent& alpha : graded_basis(d + 1, n)) {
    const MPoly g = simplex_generator_power(d, alpha);
    lhs += g / poly_moment(uniform, g);
  }
  std::optional<Rational> expected;
  if (n <= 2 || d == 1) expected = simplex_generator_count(d, n);
  return make_report("simplex-unity", {n, d, std::nullopt, std::nullopt}, lhs, expected);
}

MPoly simplex_equilibrium_form(unsigned n, Normalization normalization) {
  require_positive(n, "simplex_equilibrium_form");
  const MomentFunctional phi(MeasureId::simplex_equilibrium(normalization));
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly rest = MPoly::constant(2, 1) - x - y;
  const MPoly shifts[3] = {x * y, x * rest, y * rest};

  MPoly lhs = christoffel_form(phi, n).quadratic_form_poly;
  for (const MPoly& g : shifts) lhs += g * christoffel_form(phi, n - 1, g).quadratic_form_poly;
  return lhs;
}

IdentityReport verify_simplex_equilibrium(unsigned n, Normalization normalization) {
  const MPoly lhs = simplex_equilibrium_form(n, normalization);
  std::optional<Rational> expected;
  if (n <= 3) expected = interval_generator_count(n) + interval_generator_count(n - 1);
  return make_report("simplex-equilibrium", {n, 2u, std::nullopt, to_string(normalization)}, lhs,
                     expected);
}

}  // namespace equicert
