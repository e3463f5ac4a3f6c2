#ifndef EQUICERT_UPOLY_HPP
#define EQUICERT_UPOLY_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "equicert/rational.hpp"

namespace equicert {

/// Dense univariate polynomial over the rationals; coefficient k multiplies x^k.
/// The highest stored coefficient is nonzero, so the zero polynomial stores nothing.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);

  static UPoly constant(const Rational& c);
  static UPoly monomial(unsigned power, const Rational& c = 1);
  static UPoly x() { return monomial(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const;

  /// Coefficient of x^k, zero past the degree.
  const Rational& coeff(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  UPoly& operator*=(const Rational& c);
  UPoly& operator/=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend UPoly operator/(UPoly a, const Rational& c) { return a /= c; }
  UPoly operator-() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const UPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact evaluation at a one-dimensional point; throws std::invalid_argument
/// when the point does not have exactly one coordinate.
Rational eval(const UPoly& p, std::span<const Rational> point);

}  // namespace equicert

#endif  // EQUICERT_UPOLY_HPP
