#include <stdexcept>
#include <string>

#include "equicert/families.hpp"
#include "equicert/maxent.hpp"

namespace equicert {

namespace {

Rational sup_norm(const MPoly& p) {
  Rational worst;
  for (const auto& [e, c] : p.terms()) worst = std::max(worst, abs(c));
  return worst;
}

Rational sup_norm(const UPoly& p) {
  Rational worst;
  for (const auto& c : p.coefficients()) worst = std::max(worst, abs(c));
  return worst;
}

UPoly gram_form(const RationalMatrix& gram) {
  UPoly out;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      out += UPoly::monomial(static_cast<unsigned>(i + j), gram(i, j));
    }
  }
  return out;
}

RationalMatrix exact_matrix(const DenseMatrix& m) {
  RationalMatrix out(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != out.cols()) throw std::invalid_argument("Gram matrix rows have unequal length");
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = Rational::from_double(m[i][j]);
  }
  return out;
}

void check_putinar_shape(unsigned n, std::size_t a, std::size_t b) {
  if (a != n + 1 || b != n) {
    throw std::invalid_argument("Putinar certificate of degree " + std::to_string(n) + " has Gram sizes " +
                                std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Rational verify_certificate_exact(const ExactHandelmanCertificate& cert, const MPoly& target) {
  if (target.dimension() != cert.d) {
    throw std::invalid_argument("verify_certificate: target dimension " + std::to_string(target.dimension()) +
                                " does not match certificate dimension " + std::to_string(cert.d));
  }
  MPoly residual = -target;
  for (const auto& [alpha, c] : cert.weights) residual += simplex_generator_power(cert.d, alpha) * c;
  return sup_norm(residual);
}

Rational verify_certificate_exact(const ExactPutinarCertificate& cert, const UPoly& target) {
  check_putinar_shape(cert.n, cert.gram_a.rows(), cert.gram_b.rows());
  const UPoly residual = gram_form(cert.gram_a) + one_minus_x_squared() * gram_form(cert.gram_b) - target;
  return sup_norm(residual);
}

double verify_certificate(const HandelmanCertificate& cert, const MPoly& target) {
  ExactHandelmanCertificate exact{cert.d, cert.n, {}};
  for (const auto& w : cert.weights) exact.weights.emplace_back(w.alpha, Rational::from_double(w.value));
  return verify_certificate_exact(exact, target).to_double();
}

double verify_certificate(const HandelmanCertificate& cert, const UPoly& target) {
  if (cert.d != 1) throw std::invalid_argument("verify_certificate: univariate target for a simplex certificate");
  return verify_certificate(cert, MPoly::from_upoly(target));
}

double verify_certificate(const PutinarCertificate& cert, const UPoly& target) {
  check_putinar_shape(cert.n, cert.gram_a.size(), cert.gram_b.size());
  const ExactPutinarCertificate exact{cert.n, exact_matrix(cert.gram_a), exact_matrix(cert.gram_b)};
  return verify_certificate_exact(exact, target).to_double();
}

std::optional<ExactHandelmanCertificate> rationalize_certificate(const HandelmanSolution& solution,
                                                                 std::int64_t max_denominator) {
  const auto& cert = solution.certificate;
  std::vector<Rational> l;
  for (double v : solution.dual.values) l.push_back(rationalize(v, max_denominator));
  ExactHandelmanCertificate out{cert.d, cert.n, {}};
  for (const auto& w : cert.weights) {
    const auto coeffs = generator_coefficients(cert.d, cert.n, w.alpha);
    Rational pairing;
    for (std::size_t b = 0; b < coeffs.size(); ++b) pairing += coeffs[b] * l[b];
    if (pairing.sign() <= 0) return std::nullopt;
    out.weights.emplace_back(w.alpha, Rational(1) / pairing);
  }
  return out;
}

std::optional<ExactPutinarCertificate> rationalize_certificate(const PutinarSolution& solution,
                                                               std::int64_t max_denominator) {
  const unsigned n = solution.certificate.n;
  std::vector<Rational> y;
  for (double v : solution.dual.values) y.push_back(rationalize(v, max_denominator));
  if (y.size() != 2 * n + 1) throw std::invalid_argument("Putinar dual has the wrong length");
  RationalMatrix moment(n + 1, n + 1);
  RationalMatrix localizing(n, n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) moment(i, j) = y[i + j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) localizing(i, j) = y[i + j] - y[i + j + 2];
  }
  try {
    return ExactPutinarCertificate{n, invert_positive_definite(moment), invert_positive_definite(localizing)};
  } catch (const NotPositiveDefinite&) {
    return std::nullopt;
  }
}

}  // namespace equicert
