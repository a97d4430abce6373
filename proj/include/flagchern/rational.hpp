#ifndef FLAGCHERN_RATIONAL_HPP
#define FLAGCHERN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace flagchern {

/* Exact arithmetic throughout: arbitrary-precision rationals in lowest
 * terms with positive denominator (the canonical form maintained by GMP),
 * plus arbitrary-precision integers for Chern numbers. */
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

inline Integer to_integer(const Rational& r) {
    return r.get_num();
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline std::string to_string(const Integer& z) {
    return z.get_str();
}

/* C(m, k), zero outside 0 <= k <= m. */
inline Integer binomial(long m, long k) {
    if (k < 0 || k > m || m < 0) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return result;
}

inline Integer factorial(long m) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
    return result;
}

/* base^e for integer e of either sign; e < 0 requires base != 0. */
Rational rational_pow(const Rational& base, long e);

}  // namespace flagchern

#endif
