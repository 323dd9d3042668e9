#pragma once

#include <string>
#include <vector>

#include "minrat/factor.hpp"
#include "minrat/intpoly.hpp"

namespace minrat {

/* An element (lambda, A) of Gm x GL2 over Q acting on models:
 * [F,G] -> [lambda F_A, lambda G_A] with
 *   F_A = d F(aX+bY, cX+dY) - b G(aX+bY, cX+dY)
 *   G_A = -c F(aX+bY, cX+dY) + a G(aX+bY, cX+dY). */
struct ScaledTransform {
    Rat lambda = 1;
    Rat a = 1, b = 0, c = 0, d = 1;

    ScaledTransform() = default;
    ScaledTransform(Rat lambda_, Rat a_, Rat b_, Rat c_, Rat d_);

    static ScaledTransform identity() { return {}; }
    /* z -> alpha*z + beta as the matrix [[alpha, beta], [0, 1]] */
    static ScaledTransform affine(const Rat& lambda, const Rat& alpha, const Rat& beta);

    Rat det() const { return a * d - b * c; }
    /* group law matching act(act(m, t1), t2) = act(m, t1.then(t2)) */
    ScaledTransform then(const ScaledTransform& t2) const;
    ScaledTransform inverse() const;
};

/* A pair of degree-d homogeneous forms over Q, coefficient i belonging
 * to X^i Y^(d-i); the un-normalized result of a transform. */
struct RatFormPair {
    long d = 0;
    std::vector<Rat> f, g;
};

/* Model [F,G] of a degree-d rational self-map of P^1 over Z.
 * Invariants: Res_d(F,G) != 0, coefficients primitive as a 2d+2 vector,
 * leading nonzero coefficient of G positive. */
class Model {
  public:
    /* coefficients ascending: f[i] multiplies X^i Y^(d-i) */
    Model(long d, std::vector<Int> fcoeffs, std::vector<Int> gcoeffs);
    static Model from_polys(const IntPoly& f, const IntPoly& g);
    static Model from_polys(const IntPoly& f, const IntPoly& g, long d);

    long d() const { return d_; }
    const std::vector<Int>& fc() const { return f_; }
    const std::vector<Int>& gc() const { return g_; }
    IntPoly f() const { return IntPoly(f_); }
    IntPoly g() const { return IntPoly(g_); }
    const Int& resd() const { return resd_; }

    friend bool operator==(const Model& x, const Model& y) {
        return x.d_ == y.d_ && x.f_ == y.f_ && x.g_ == y.g_;
    }
    friend bool operator<(const Model& x, const Model& y) {
        if (x.d_ != y.d_) return x.d_ < y.d_;
        if (x.f_ != y.f_) return x.f_ < y.f_;
        return x.g_ < y.g_;
    }

    std::string str() const; /* "(F)/(G)" */

  private:
    long d_;
    std::vector<Int> f_, g_;
    Int resd_;
};

/* Resultant of the two degree-d forms (Sylvester determinant on the full
 * length-(d+1) coefficient vectors). */
Int res_d(const Model& m);
/* same for arbitrary coefficient vectors of declared degree d */
Int res_d(long d, const std::vector<Int>& f, const std::vector<Int>& g);
Rat res_d(const RatFormPair& p);

RatFormPair act(const Model& m, const ScaledTransform& t);

struct NormalizedModel {
    Model model;
    Rat scalar; /* input pair = scalar * model */
};
NormalizedModel normalize(const RatFormPair& p);

/* exact check of Res_d(lambda F_A, lambda G_A)
 *   = lambda^(2d) det(A)^(d^2+d) Res_d(F, G) */
bool res_transform_check(const Model& m, const ScaledTransform& t);

/* coefficientwise reduction into [0, p) */
struct ReducedModel {
    Int p;
    long d;
    std::vector<Int> f, g;
};
ReducedModel reduce_mod_p(const Model& m, const Int& p);
/* p does not divide Res_d */
bool good_reduction(const Model& m, const Int& p);

FactoredInteger factor_resultant(const Model& m, const FactorBudget& budget = {});
/* radical of Res_d; requires the factorization to complete */
Int conductor(const Model& m, const FactorBudget& budget = {});

/* "(F)/(G)" with polynomials in z; rational coefficients are accepted
 * and cleared (models are projective) */
Model parse_model(const std::string& text);

}  // namespace minrat
