#pragma once

#include <gmpxx.h>

#include <cassert>
#include <compare>
#include <stdexcept>
#include <string>

namespace minrat {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/* Value of a discrete valuation: an integer or +infinity (the valuation
 * of 0).  +infinity compares greater than every integer and absorbs
 * addition. */
struct ValOrInf {
    bool inf = false;
    long v = 0;

    ValOrInf() = default;
    static ValOrInf infinity() { return ValOrInf{true, 0}; }
    static ValOrInf of(long n) { return ValOrInf{false, n}; }

    bool is_infinity() const { return inf; }
    long value() const {
        assert(!inf);
        return v;
    }

    friend bool operator==(const ValOrInf& a, const ValOrInf& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend std::strong_ordering operator<=>(const ValOrInf& a, const ValOrInf& b) {
        if (a.inf && b.inf) return std::strong_ordering::equal;
        if (a.inf) return std::strong_ordering::greater;
        if (b.inf) return std::strong_ordering::less;
        return a.v <=> b.v;
    }
    friend bool operator==(const ValOrInf& a, long b) { return !a.inf && a.v == b; }
    friend std::strong_ordering operator<=>(const ValOrInf& a, long b) {
        if (a.inf) return std::strong_ordering::greater;
        return a.v <=> b;
    }

    friend ValOrInf operator+(const ValOrInf& a, const ValOrInf& b) {
        if (a.inf || b.inf) return infinity();
        return of(a.v + b.v);
    }
    friend ValOrInf operator+(const ValOrInf& a, long b) {
        if (a.inf) return infinity();
        return of(a.v + b);
    }
    friend ValOrInf min(const ValOrInf& a, const ValOrInf& b) { return a < b ? a : b; }

    std::string str() const { return inf ? "+inf" : std::to_string(v); }
};

/* Exponent of p in x; +infinity iff x = 0.  Does not check primality. */
inline ValOrInf vp(const Int& x, const Int& p) {
    if (x == 0) return ValOrInf::infinity();
    Int rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return ValOrInf::of(static_cast<long>(k));
}

inline ValOrInf vp(const Rat& x, const Int& p) {
    if (x == 0) return ValOrInf::infinity();
    Int rest;
    long num = static_cast<long>(
        mpz_remove(rest.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
    long den = static_cast<long>(
        mpz_remove(rest.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
    return ValOrInf::of(num - den);
}

inline void require_prime(const Int& p) {
    if (p < 2 || !is_probable_prime(p))
        throw std::invalid_argument("padic_val: modulus " + p.get_str() + " is not prime");
}

inline ValOrInf padic_val(const Int& x, const Int& p) {
    require_prime(p);
    return vp(x, p);
}

inline ValOrInf padic_val(const Rat& x, const Int& p) {
    require_prime(p);
    return vp(x, p);
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/* p^e as an exact rational, e of either sign. */
inline Rat pow_rat(const Int& p, long e) {
    if (e >= 0) return Rat(pow_int(p, static_cast<unsigned long>(e)));
    return Rat(1, pow_int(p, static_cast<unsigned long>(-e)));
}

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline bool fits_long(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

}  // namespace minrat
