#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace galois {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class keeps values canonical (den > 0, gcd(num, den) = 1) through
// arithmetic; constructors from raw num/den must canonicalize explicitly.
inline Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_den_mpz_t(), base.get_den_mpz_t(), k);
    num.get_den() = 1;
    den.get_num() = 1;
    return num * den;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int binomial(const Int& top, unsigned long k) {
    // multiplicative formula; exact division at every step
    Int r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= top - static_cast<long>(i - 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Signed prime factorization of a nonzero rational: q = sign * prod p_i^{e_i}.
struct RationalFactors {
    int sign = 1;
    std::vector<std::pair<Int, long>> prime_powers;  // ascending primes, e != 0
};

RationalFactors factor_rational(const Rational& q);

}  // namespace galois
