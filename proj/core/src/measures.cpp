#include "equicert/measures.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace equicert {

std::string to_string(Normalization n) {
  return n == Normalization::PaperPi ? "paper-pi" : "probability";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "paper-pi" || text == "PaperPi") return Normalization::PaperPi;
  if (text == "probability" || text == "Probability") return Normalization::Probability;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

MeasureId MeasureId::simplex_uniform(std::size_t d) {
  if (d == 0) throw std::invalid_argument("simplex-uniform measure needs d >= 1");
  return MeasureId(MeasureKind::SimplexUniform, d);
}

MeasureId MeasureId::simplex_equilibrium(Normalization normalization) {
  return MeasureId(MeasureKind::SimplexEquilibrium, 2, normalization);
}

MeasureId MeasureId::parse(std::string_view name, std::size_t d, Normalization normalization) {
  if (name == "arcsine") return arcsine();
  if (name == "arcsine-g") return arcsine_g();
  if (name == "lebesgue01") return lebesgue01();
  if (name == "simplex-uniform") return simplex_uniform(d);
  if (name == "simplex-equilibrium") {
    if (d != 2) throw std::invalid_argument("simplex-equilibrium measure is only defined for d = 2");
    return simplex_equilibrium(normalization);
  }
  throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

std::string MeasureId::name() const {
  switch (kind_) {
    case MeasureKind::Arcsine: return "arcsine";
    case MeasureKind::ArcsineG: return "arcsine-g";
    case MeasureKind::Lebesgue01: return "lebesgue01";
    case MeasureKind::SimplexUniform: return "simplex-uniform";
    case MeasureKind::SimplexEquilibrium: return "simplex-equilibrium";
  }
  return "unknown";
}

namespace {

// C(k, k/2) / 2^k for even k, zero for odd k.
Rational arcsine_moment(unsigned k) {
  if (k % 2 != 0) return {};
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  return Rational(binomial(k, k / 2), two_k);
}

// (2a)! / (4^a a!) = Gamma(a + 1/2) / Gamma(1/2)
Rational half_gamma_ratio(unsigned a) {
  mpz_class four_a;
  mpz_ui_pow_ui(four_a.get_mpz_t(), 4, a);
  return Rational(factorial(2 * a), four_a * factorial(a));
}

}  // namespace

Rational closed_form_moment(const MeasureId& measure, const Exponent& alpha) {
  if (alpha.size() != measure.dimension()) {
    throw std::invalid_argument("moment: exponent of length " + std::to_string(alpha.size()) +
                                " for a measure of dimension " + std::to_string(measure.dimension()));
  }
  switch (measure.kind()) {
    case MeasureKind::Arcsine:
      return arcsine_moment(alpha[0]);
    case MeasureKind::ArcsineG:
      return arcsine_moment(alpha[0]) - arcsine_moment(alpha[0] + 2);
    case MeasureKind::Lebesgue01:
      return Rational(1, static_cast<std::int64_t>(alpha[0]) + 1);
    case MeasureKind::SimplexUniform: {
      const auto d = static_cast<unsigned>(measure.dimension());
      mpz_class num = factorial(d);
      for (unsigned a : alpha) num *= factorial(a);
      return Rational(num, factorial(d + total_degree(alpha)));
    }
    case MeasureKind::SimplexEquilibrium: {
      // Dirichlet(1/2, 1/2, 1/2) moment times the total mass 2.
      const unsigned m = alpha[0] + alpha[1];
      mpz_class four_pow;
      mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, m + 1);
      Rational value = half_gamma_ratio(alpha[0]) * half_gamma_ratio(alpha[1]) *
                       Rational(four_pow * factorial(m + 1), factorial(2 * m + 2));
      if (measure.normalization() == Normalization::Probability) value /= Rational(2);
      return value;
    }
  }
  throw std::logic_error("closed_form_moment: unhandled measure");
}

MomentFunctional::MomentFunctional(MeasureId measure, Rational scale)
    : measure_(measure), scale_(std::move(scale)), memo_(std::make_shared<Memo>()) {
  if (scale_.sign() <= 0) throw std::invalid_argument("MomentFunctional: scale must be positive");
}

MomentFunctional MomentFunctional::scaled(const Rational& t) const {
  MomentFunctional copy = *this;
  if (t.sign() <= 0) throw std::invalid_argument("MomentFunctional::scaled: t must be positive");
  copy.scale_ = scale_ * t;
  return copy;
}

Rational MomentFunctional::moment(const Exponent& alpha) const {
  {
    std::shared_lock lock(memo_->mutex);
    const auto it = memo_->values.find(alpha);
    if (it != memo_->values.end()) return it->second * scale_;
  }
  Rational value = closed_form_moment(measure_, alpha);
  {
    std::unique_lock lock(memo_->mutex);
    memo_->values.try_emplace(alpha, value);
  }
  return value * scale_;
}

Rational poly_moment(const MomentFunctional& f, const UPoly& p) {
  if (f.dimension() != 1) {
    throw std::invalid_argument("poly_moment: univariate polynomial against a measure of dimension " +
                                std::to_string(f.dimension()));
  }
  Rational acc;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) acc += coeffs[k] * f.moment(static_cast<unsigned>(k));
  }
  return acc;
}

Rational poly_moment(const MomentFunctional& f, const MPoly& p) {
  if (f.dimension() != p.dimension()) {
    throw std::invalid_argument("poly_moment: polynomial of dimension " + std::to_string(p.dimension()) +
                                " against a measure of dimension " + std::to_string(f.dimension()));
  }
  Rational acc;
  for (const auto& [e, c] : p.terms()) acc += c * f.moment(e);
  return acc;
}

Rational beta_integral(unsigned i, unsigned j) {
  return Rational(factorial(i) * factorial(j), factorial(i + j + 1));
}

double bernstein_envelope(unsigned n, double x) {
  if (n == 0) throw std::invalid_argument("bernstein_envelope: n must be >= 1");
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("bernstein_envelope: x must lie in the open interval (0, 1)");
  }
  return 1.0 / (static_cast<double>(n) * std::sqrt(2.0 * std::numbers::pi * x * (1.0 - x)));
}

}  // namespace equicert
