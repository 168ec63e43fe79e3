#pragma once

#include <gmpxx.h>

#include <string>

#include "symtau/errors.hpp"

namespace symtau {

// Exact rationals are GMP's canonical mpq: gcd(|num|,den)=1, den>0, 0 = 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// GMP canonical string: "p" or "p/q".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw UsageError("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw DivisionByZero("0 raised to a negative power");
    Rat out;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), (e < 0 ? base.get_den() : base.get_num()).get_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), (e < 0 ? base.get_num() : base.get_den()).get_mpz_t(), a);
    out.canonicalize();
    return out;
}

// Conversion hook for numeric evaluation; specialized for complex scalars in
// the numeric module (which route through their real component type).
template <class T>
struct RatCast {
    static T cast(const Rat& q) {
        T n(q.get_num().get_str());
        if (q.get_den() == 1) return n;
        return n / T(q.get_den().get_str());
    }
};

// n(n-1)/2, valid for negative n as well (used for the (-1)^binom(|k|,2) signs).
inline long binom2(long n) { return n * (n - 1) / 2; }

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace symtau
