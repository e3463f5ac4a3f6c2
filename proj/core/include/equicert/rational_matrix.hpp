#ifndef EQUICERT_RATIONAL_MATRIX_HPP
#define EQUICERT_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "equicert/rational.hpp"

namespace equicert {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::vector<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Raised when a leading principal minor is not strictly positive.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(std::size_t failing_minor);
  /// Order (1-based size) of the first leading principal minor that is <= 0.
  std::size_t failing_minor() const { return failing_minor_; }

 private:
  std::size_t failing_minor_;
};

/// Exact inverse of a symmetric positive definite matrix by fraction-free
/// (Bareiss) elimination on the denominator-cleared integer matrix. Every
/// Bareiss division is checked for exact divisibility. Throws
/// NotPositiveDefinite naming the failing leading minor, and
/// std::invalid_argument for non-square or non-symmetric input.
RationalMatrix invert_positive_definite(const RationalMatrix& m);

/// Solves A x = b exactly for a nonsingular square A (Gaussian elimination with
/// nonzero pivoting). Throws std::domain_error when A is singular.
std::vector<Rational> solve_exact(const RationalMatrix& a, std::vector<Rational> b);

}  // namespace equicert

#endif  // EQUICERT_RATIONAL_MATRIX_HPP
