#include <cmath>
#include <stdexcept>

#include "equicert/maxent.hpp"

namespace equicert {

Rational rationalize(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw std::domain_error("rationalize: value is not finite");
  if (max_denominator < 1) throw std::invalid_argument("rationalize: max_denominator must be >= 1");
  const mpz_class bound = static_cast<long>(max_denominator);
  const Rational exact = Rational::from_double(value);
  if (exact.denominator() <= bound) return exact;

  // Convergents h/k of the continued fraction of num/den.
  mpz_class num = exact.numerator();
  mpz_class den = exact.denominator();
  mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class k_next = a * k + k_prev;
    if (k_next > bound) {
      // Largest admissible semiconvergent; it beats h/k iff it is closer.
      const mpz_class t = (bound - k_prev) / k;
      const Rational semi(t * h + h_prev, t * k + k_prev);
      const Rational conv(h, k);
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const mpz_class rem = num - a * den;
    num = den;
    den = rem;
  }
  return Rational(h, k);
}

}  // namespace equicert
