#pragma once

#include <optional>
#include <vector>

#include "minrat/model.hpp"

namespace minrat {

/* One valuation condition v_p(h(beta)) > c; bounds may be half-integers. */
struct InequalityEntry {
    IntPoly h;
    Rat c;
};

struct InequalitySystem {
    Int p;
    std::vector<InequalityEntry> entries;
};

/* (lambda, A) = (p^e1, [[p^e2, beta], [0, 1]]) */
struct LocalTransform {
    long e1 = 0;
    long e2 = 0;
    Rat beta = 0;

    bool is_identity() const { return e1 == 0 && e2 == 0 && beta == 0; }
    ScaledTransform as_scaled(const Int& p) const {
        return ScaledTransform::affine(pow_rat(p, e1), pow_rat(p, e2), beta);
    }
};

/* Valuation shortcut: v_p(Res_d) < d (d even) or < 2d (d odd) already
 * proves minimality at p, since transforms move v_p(Res_d) by multiples
 * of gcd(2d, d^2+d). */
bool trivially_minimal_at(const Model& m, const Int& p);

/* f, g monic with 2 deg(g) < deg(f) forces an empty e2 range at every
 * prime, so the model is minimal over Z. */
bool monic_shortcut(const Model& m);

struct E2Range {
    bool empty = true;
    long lo = 0, hi = -1;

    bool contains(long e) const { return !empty && lo <= e && e <= hi; }
};

/* Integer interval of e2 values not excluded by the valuation bounds
 * (constant rows of the condition system plus the res(f - z g, g)
 * bound); empty means no resultant-reducing transform exists at p. */
E2Range e2_range(const Model& m, const Int& p);

/* The 2d+2 conditions on beta at a fixed e2: rows
 * (P_j, (d+1-2j)/2 e2) and (Q_j, (d-1-2j)/2 e2) where P_j, Q_j are the
 * beta-polynomials of the transformed coefficients with the p^(j e2)
 * prefactors removed. */
std::vector<InequalityEntry> inequality_entries(const Model& m, long e2);

/* B(h, c) = min((c - v(h_n))/n, min_i (v(h_i) - v(h_n))/(n - i)):
 * every beta with v(h(beta)) > c has v(beta) >= B.  deg h >= 1. */
Rat beta_floor(const IntPoly& h, const Rat& c, const Int& p);

/* Substitute beta = p^(-t) beta' with t = |B| so that solutions beta' run
 * over the p-integers: entries become (p^(deg h * t) h(p^(-t) z), c + deg h * t). */
InequalitySystem shift_system(const std::vector<InequalityEntry>& entries, long B, const Int& p);

/* An integer beta with v_p(h_i(beta)) > c_i for all i, or nullopt iff no
 * solution exists among the p-integers.  All entry polynomials must be
 * p-integral. */
std::optional<Int> inequality_solutions(const InequalitySystem& V);

/* All roots of f mod p, lifted to [0, p). */
std::vector<Int> roots_mod_p(const IntPoly& f, const Int& p);

struct LocalMinResult {
    LocalTransform transform;
    Model model;
    /* number of successful reduction rounds */
    int rounds = 0;
};

/* Minimal model over Z localized at p, together with the accumulated
 * (e1, e2, beta).  Identity transform iff the input was already minimal. */
LocalMinResult local_minimal_model(const Model& m, const Int& p);

}  // namespace minrat
