#include "equicert/families.hpp"

#include <stdexcept>
#include <string>

namespace equicert {

UPoly cheb(ChebKind kind, unsigned n) {
  UPoly prev = UPoly::constant(1);
  if (n == 0) return prev;
  UPoly cur = kind == ChebKind::First ? UPoly::x() : UPoly::monomial(1, 2);
  const UPoly two_x = UPoly::monomial(1, 2);
  for (unsigned k = 1; k < n; ++k) {
    UPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UPoly cheb_orthonormal_square(ChebKind kind, unsigned j) {
  const UPoly p = cheb(kind, j);
  UPoly sq = p * p;
  if (kind == ChebKind::First && j == 0) return sq;
  return sq * Rational(2);
}

std::vector<Rational> to_chebyshev_first(const UPoly& p) {
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() + 1));
  UPoly rest = p;
  // T_k has leading coefficient 2^{k-1} (1 for k = 0), so peel from the top.
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& lead = rest.coeff(static_cast<std::size_t>(k));
    if (lead.is_zero()) continue;
    const UPoly tk = cheb(ChebKind::First, static_cast<unsigned>(k));
    const Rational c = lead / tk.coeff(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k)] = c;
    rest -= tk * c;
  }
  return out;
}

UPoly bernstein(unsigned n, int j) {
  if (j < 0 || static_cast<unsigned>(j) > n) {
    throw std::invalid_argument("bernstein: index " + std::to_string(j) + " outside [0, " +
                                std::to_string(n) + "]");
  }
  const auto uj = static_cast<unsigned>(j);
  // (1 - x)^{n-j} = sum_k C(n-j, k) (-1)^k x^k
  std::vector<Rational> coeffs(n + 1);
  const Rational scale(binomial(n, uj));
  for (unsigned k = 0; k <= n - uj; ++k) {
    Rational c = scale * Rational(binomial(n - uj, k));
    coeffs[uj + k] = (k % 2 == 0) ? c : -c;
  }
  return UPoly(std::move(coeffs));
}

UPoly one_minus_x_squared() { return UPoly(std::vector<Rational>{1, 0, -1}); }

MPoly simplex_generator_power(std::size_t d, const Exponent& alpha) {
  if (d == 0) throw std::invalid_argument("simplex_generator_power: dimension must be positive");
  if (alpha.size() != d + 1) {
    throw std::invalid_argument("simplex_generator_power: alpha has length " +
                                std::to_string(alpha.size()) + ", expected " + std::to_string(d + 1));
  }
  Exponent head(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(d));
  MPoly result = MPoly::monomial(head);
  if (alpha[d] > 0) {
    MPoly last = MPoly::constant(d, 1);
    for (std::size_t i = 0; i < d; ++i) last -= MPoly::variable(d, i);
    result *= pow(last, alpha[d]);
  }
  return result;
}

}  // namespace equicert
