#ifndef EQUICERT_TESTS_ORACLES_HPP
#define EQUICERT_TESTS_ORACLES_HPP

// Test-side references computed without the library's closed forms.

#include <cmath>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class choose(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// integral_0^1 t^a (1 - t)^k dt by binomial expansion of (1 - t)^k.
inline mpq_class beta_by_expansion(unsigned a, unsigned k) {
  mpq_class sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    mpq_class term(choose(k, j), a + j + 1);
    term.canonicalize();
    sum += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return sum;
}

// integral over {x >= 0, sum x <= 1} of x^alpha (1 - sum x)^k, one coordinate at a
// time: x_m = (1 - s) t turns the innermost integral into a Beta integral.
inline mpq_class simplex_integral(std::vector<unsigned> alpha, unsigned k = 0) {
  if (alpha.empty()) return 1;
  const unsigned a = alpha.back();
  alpha.pop_back();
  return beta_by_expansion(a, k) * simplex_integral(alpha, a + k + 1);
}

// Moment of the uniform probability measure on the d-simplex.
inline mpq_class simplex_uniform_moment(const std::vector<unsigned>& alpha) {
  mpz_class dfact = 1;
  for (std::size_t i = 2; i <= alpha.size(); ++i) dfact *= static_cast<unsigned long>(i);
  return simplex_integral(alpha) * dfact;
}

// Arcsine moment as prod_{i<=m} (2i - 1) / (2i) for k = 2m.
inline mpq_class arcsine_moment(unsigned k) {
  if (k % 2 == 1) return 0;
  mpq_class r = 1;
  for (unsigned i = 1; i <= k / 2; ++i) r *= mpq_class(2 * i - 1, 2 * i);
  return r;
}

// (H^{-1})_{ij} for the Hilbert matrix H_{ij} = 1 / (i + j + 1), 0 <= i, j <= n.
inline mpz_class inverse_hilbert(unsigned n, unsigned i, unsigned j) {
  const mpz_class b = choose(i + j, i);
  mpz_class v = (i + j + 1) * choose(n + i + 1, n - j) * choose(n + j + 1, n - i) * b * b;
  return ((i + j) % 2 == 0) ? v : mpz_class(-v);
}

inline double chebyshev_t(unsigned n, double x) { return std::cos(n * std::acos(x)); }

inline double chebyshev_u(unsigned n, double x) {
  const double t = std::acos(x);
  return std::sin((n + 1) * t) / std::sin(t);
}

}  // namespace oracle

#endif  // EQUICERT_TESTS_ORACLES_HPP
