#include "equicert/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace equicert {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(std::size_t dimension) : dim_(dimension) {
  if (dimension == 0) throw std::invalid_argument("MPoly: dimension must be positive");
}

MPoly MPoly::constant(std::size_t dimension, const Rational& c) {
  MPoly p(dimension);
  p.add_term(Exponent(dimension, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw std::invalid_argument("MPoly::variable: index out of range");
  Exponent e(dimension, 0);
  e[index] = 1;
  return monomial(e);
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MPoly MPoly::from_upoly(const UPoly& p) {
  MPoly r(1);
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) r.terms_.emplace(Exponent{static_cast<unsigned>(k)}, coeffs[k]);
  }
  return r;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(equicert::total_degree(terms_.rbegin()->first));
}

Rational MPoly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dim_) {
    throw std::invalid_argument("MPoly::add_term: exponent has length " + std::to_string(e.size()) +
                                ", expected " + std::to_string(dim_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MPoly::operator()(std::span<const Rational> point) const {
  if (point.size() != dim_) {
    throw std::invalid_argument("eval: polynomial has dimension " + std::to_string(dim_) +
                                ", point has " + std::to_string(point.size()));
  }
  // powers[i][k] = point[i]^k, grown on demand
  std::vector<std::vector<Rational>> powers(dim_, std::vector<Rational>{Rational{1}});
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[e[i]];
    }
    acc += term;
  }
  return acc;
}

double MPoly::eval_double(std::span<const double> point) const {
  if (point.size() != dim_) {
    throw std::invalid_argument("eval: polynomial has dimension " + std::to_string(dim_) +
                                ", point has " + std::to_string(point.size()));
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

void MPoly::check_dimension(const MPoly& other) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("MPoly: dimension mismatch (" + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_) + ")");
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  check_dimension(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  check_dimension(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_dimension(b);
  MPoly r(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly& MPoly::operator/=(const Rational& c) {
  if (c.is_zero()) throw std::domain_error("MPoly: division by zero");
  for (auto& [e, coeff] : terms_) coeff /= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os;
}

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly result = MPoly::constant(p.dimension(), 1);
  MPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

UPoly to_upoly(const MPoly& p) {
  if (p.dimension() != 1) throw std::invalid_argument("to_upoly: polynomial is not univariate");
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.total_degree() + 1));
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return UPoly(std::move(coeffs));
}

Rational eval(const MPoly& p, std::span<const Rational> point) { return p(point); }

namespace {

void enumerate_homogeneous(std::size_t pos, unsigned remaining, Exponent& current,
                           std::vector<Exponent>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  // Descending first coordinate gives graded-lex order within the degree.
  for (unsigned k = remaining + 1; k-- > 0;) {
    current[pos] = k;
    enumerate_homogeneous(pos + 1, remaining - k, current, out);
  }
}

}  // namespace

std::vector<Exponent> homogeneous_exponents(std::size_t dimension, unsigned degree) {
  if (dimension == 0) throw std::invalid_argument("homogeneous_exponents: dimension must be positive");
  std::vector<Exponent> out;
  Exponent current(dimension, 0);
  enumerate_homogeneous(0, degree, current, out);
  return out;
}

std::vector<Exponent> graded_basis(std::size_t dimension, unsigned degree) {
  std::vector<Exponent> out;
  for (unsigned k = 0; k <= degree; ++k) {
    auto block = homogeneous_exponents(dimension, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace equicert
