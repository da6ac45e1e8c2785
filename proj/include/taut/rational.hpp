#pragma once

#include <gmpxx.h>

#include <string>

namespace taut {

// Exact rational coefficients. All arithmetic in the engine is exact;
// no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u)
            r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// "num/den", or just "num" when den == 1.
inline std::string rat_str(const Rational& q) {
    return q.get_str();
}

}  // namespace taut
