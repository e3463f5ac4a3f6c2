#ifndef EQUICERT_MPOLY_HPP
#define EQUICERT_MPOLY_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "equicert/rational.hpp"
#include "equicert/upoly.hpp"

namespace equicert {

/// Exponent vector of a monomial x_1^{e_1} ... x_d^{e_d}.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);
Exponent operator+(const Exponent& a, const Exponent& b);

/// Graded lexicographic order: lower total degree first, then x_1 > x_2 > ...
/// within a degree, so the degree-1 block of a bivariate basis reads (x, y).
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of variables.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  explicit MPoly(std::size_t dimension);

  static MPoly constant(std::size_t dimension, const Rational& c);
  static MPoly variable(std::size_t dimension, std::size_t index);
  static MPoly monomial(const Exponent& e, const Rational& c = 1);
  static MPoly from_upoly(const UPoly& p);

  std::size_t dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  Rational coeff(const Exponent& e) const;
  /// Adds c·x^e; the term disappears if the coefficient cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// Exact evaluation; throws std::invalid_argument on a dimension mismatch.
  Rational operator()(std::span<const Rational> point) const;
  double eval_double(std::span<const double> point) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& c);
  MPoly& operator/=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator/(MPoly a, const Rational& c) { return a /= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p);

 private:
  void check_dimension(const MPoly& other) const;

  std::size_t dim_;
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned exponent);

/// Converts a one-variable MPoly back to dense form; throws std::invalid_argument otherwise.
UPoly to_upoly(const MPoly& p);

Rational eval(const MPoly& p, std::span<const Rational> point);

/// All exponent vectors of length `dimension` with total degree <= `degree`,
/// in graded lexicographic order.
std::vector<Exponent> graded_basis(std::size_t dimension, unsigned degree);

/// Exponent vectors of length `dimension` with total degree exactly `degree`,
/// in graded lexicographic order.
std::vector<Exponent> homogeneous_exponents(std::size_t dimension, unsigned degree);

}  // namespace equicert

#endif  // EQUICERT_MPOLY_HPP
