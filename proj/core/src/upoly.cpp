#include "equicert/upoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace equicert {

namespace {
const Rational kZero{0};
}

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return UPoly(std::move(coeffs));
}

std::size_t UPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

const Rational& UPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->to_double();
  }
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& rhs) { return *this = *this * rhs; }

UPoly& UPoly::operator*=(const Rational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

UPoly& UPoly::operator/=(const Rational& c) {
  if (c.is_zero()) throw std::domain_error("UPoly: division by zero");
  for (auto& coeff : coeffs_) coeff /= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
    if (p.coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.coeffs_[k] << ")";
    if (k == 1) os << "x";
    if (k > 1) os << "x^" << k;
  }
  return os;
}

Rational eval(const UPoly& p, std::span<const Rational> point) {
  if (point.size() != 1) {
    throw std::invalid_argument("eval: univariate polynomial needs a 1-dimensional point, got " +
                                std::to_string(point.size()));
  }
  return p(point[0]);
}

}  // namespace equicert
