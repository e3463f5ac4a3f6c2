#include "equicert/rational_matrix.hpp"

#include <ostream>
#include <string>

namespace equicert {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

NotPositiveDefinite::NotPositiveDefinite(std::size_t failing_minor)
    : std::runtime_error("matrix is not positive definite: leading principal minor of order " +
                         std::to_string(failing_minor) + " is not positive"),
      failing_minor_(failing_minor) {}

namespace {

void divide_exact(mpz_class& value, const mpz_class& divisor, const char* where) {
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error(std::string("Bareiss elimination: inexact division in ") + where);
  }
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

}  // namespace

RationalMatrix invert_positive_definite(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invert_positive_definite: matrix is not square");
  if (!m.is_symmetric()) throw std::invalid_argument("invert_positive_definite: matrix is not symmetric");
  const std::size_t n = m.rows();
  if (n == 0) return {};

  // Clear denominators: N = L * M is an integer matrix with M^{-1} = L * N^{-1}.
  mpz_class lcm = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
  }

  const std::size_t w = 2 * n;
  std::vector<mpz_class> aug(n * w);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return aug[i * w + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).raw();
      at(i, j) = q.get_num() * (lcm / q.get_den());
    }
    at(i, n + i) = 1;
  }

  // Forward pass: after step k the pivot at(k, k) is the (k+1)-th leading minor of N.
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(at(k, k)) <= 0) throw NotPositiveDefinite(k + 1);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        divide_exact(t, prev, "forward pass");
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  const mpz_class det = prev;

  // Back substitution on det * N^{-1} = adj(N), which is integral.
  RationalMatrix inv(n, n);
  std::vector<mpz_class> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      t = det * at(ii, n + c);
      for (std::size_t j = ii + 1; j < n; ++j) t -= at(ii, j) * x[j];
      divide_exact(t, at(ii, ii), "back substitution");
      x[ii] = t;
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = Rational(x[i] * lcm, det);
  }
  return inv;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, std::vector<Rational> b) {
  if (!a.is_square() || a.rows() != b.size()) {
    throw std::invalid_argument("solve_exact: shape mismatch");
  }
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      std::swap(b[k], b[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  return x;
}

}  // namespace equicert
