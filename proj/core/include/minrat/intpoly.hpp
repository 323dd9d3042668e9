#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minrat/valuation.hpp"

namespace minrat {

/* Degree of a polynomial: a nonnegative integer, or -infinity for the
 * zero polynomial so that deg(fg) = deg f + deg g holds without cases. */
struct Degree {
    bool neg_inf = true;
    long d = 0;

    static Degree minus_infinity() { return Degree{true, 0}; }
    static Degree of(long n) { return Degree{false, n}; }

    bool is_neg_inf() const { return neg_inf; }
    long value() const {
        assert(!neg_inf);
        return d;
    }
    friend bool operator==(const Degree& a, const Degree& b) {
        return a.neg_inf == b.neg_inf && (a.neg_inf || a.d == b.d);
    }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.neg_inf && b.neg_inf) return std::strong_ordering::equal;
        if (a.neg_inf) return std::strong_ordering::less;
        if (b.neg_inf) return std::strong_ordering::greater;
        return a.d <=> b.d;
    }
    friend bool operator==(const Degree& a, long b) { return !a.neg_inf && a.d == b; }
    friend std::strong_ordering operator<=>(const Degree& a, long b) {
        if (a.neg_inf) return std::strong_ordering::less;
        return a.d <=> b;
    }
};

/* Univariate polynomial over Z in the variable z.  coeffs[i] is the
 * coefficient of z^i; the vector carries no leading zeros, so the zero
 * polynomial is the empty vector. */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs_low_to_high);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    /* c * z^k */
    static IntPoly monomial(Int c, long k);

    bool is_zero() const { return c_.empty(); }
    Degree degree() const {
        return c_.empty() ? Degree::minus_infinity()
                          : Degree::of(static_cast<long>(c_.size()) - 1);
    }
    /* degree as a plain long; polynomial must be nonzero */
    long deg() const {
        assert(!c_.empty());
        return static_cast<long>(c_.size()) - 1;
    }
    const std::vector<Int>& coeffs() const { return c_; }
    /* coefficient of z^i (0 beyond the degree) */
    const Int& coeff(long i) const;
    const Int& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& a, const IntPoly& b);

    Int operator()(const Int& x) const;
    Rat operator()(const Rat& x) const;

    IntPoly derivative() const;
    /* f(a + b*z) */
    IntPoly compose_linear(const Int& a, const Int& b) const;
    /* exact division of every coefficient */
    IntPoly divexact(const Int& d) const;

    std::string str() const;

  private:
    void trim();
    std::vector<Int> c_;
};

/* Univariate polynomial over Q; mpq_class keeps every coefficient in
 * lowest terms. */
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    bool is_zero() const { return c_.empty(); }
    Degree degree() const {
        return c_.empty() ? Degree::minus_infinity()
                          : Degree::of(static_cast<long>(c_.size()) - 1);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(long i) const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /* L * f where L clears all denominators, as an integer polynomial;
     * returns (poly, L). */
    std::pair<IntPoly, Int> cleared() const;

    std::string str() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/* min over coefficients of v_p; +infinity for the zero polynomial */
ValOrInf poly_val(const IntPoly& f, const Int& p);
ValOrInf poly_val(const RatPoly& f, const Int& p);

/* gcd of the coefficients, nonnegative; 0 for the zero polynomial */
Int content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);

/* Resultant of f and g taken as polynomials of the stated degrees
 * (>= their true degrees; leading zeros allowed), as the determinant of
 * the (df+dg) x (df+dg) Sylvester matrix, computed by fraction-free
 * elimination.  Throws if both polynomials are zero. */
Int resultant(const IntPoly& f, const IntPoly& g, long df, long dg);
/* true degrees */
Int resultant(const IntPoly& f, const IntPoly& g);

/* gcd over Z, primitive with positive leading coefficient (primitive
 * polynomial remainder sequence) */
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/* Determinant of a square integer matrix (Bareiss). */
Int det_bareiss(std::vector<std::vector<Int>> m);

struct RootFindBudget {
    /* caps for the divisor-enumeration route; past them the modular
     * lifting route is used instead */
    unsigned long divisor_pairs_cap = 1u << 18;
    long factor_rho_iters = 2'000'000;
};

/* All rational roots of f (each once, multiplicity ignored).  When
 * height_bound is given, only roots with |num|,|den| <= height_bound are
 * sought (the caller promises all rational roots obey the bound). */
std::vector<Rat> rational_roots(const IntPoly& f,
                                const std::optional<Int>& height_bound = std::nullopt,
                                const RootFindBudget& budget = {});

/* Parsing of ASCII polynomial expressions in z, e.g.
 * "86*z^2 - 1068*z - 338"; '*' optional, rational coefficients allowed. */
RatPoly parse_ratpoly(const std::string& text);
IntPoly parse_intpoly(const std::string& text);

}  // namespace minrat
