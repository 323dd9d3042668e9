#include "minrat/model.hpp"

#include <algorithm>

namespace minrat {

ScaledTransform::ScaledTransform(Rat lambda_, Rat a_, Rat b_, Rat c_, Rat d_)
    : lambda(std::move(lambda_)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (lambda == 0) throw std::invalid_argument("ScaledTransform: lambda = 0");
    if (det() == 0) throw std::invalid_argument("ScaledTransform: singular matrix");
}

ScaledTransform ScaledTransform::affine(const Rat& lambda, const Rat& alpha, const Rat& beta) {
    return ScaledTransform(lambda, alpha, beta, Rat(0), Rat(1));
}

ScaledTransform ScaledTransform::then(const ScaledTransform& t2) const {
    ScaledTransform r;
    r.lambda = lambda * t2.lambda;
    r.a = a * t2.a + b * t2.c;
    r.b = a * t2.b + b * t2.d;
    r.c = c * t2.a + d * t2.c;
    r.d = c * t2.b + d * t2.d;
    return r;
}

ScaledTransform ScaledTransform::inverse() const {
    Rat dt = det();
    ScaledTransform r;
    r.lambda = 1 / lambda;
    r.a = d / dt;
    r.b = -b / dt;
    r.c = -c / dt;
    r.d = a / dt;
    return r;
}

Model::Model(long d, std::vector<Int> fcoeffs, std::vector<Int> gcoeffs)
    : d_(d), f_(std::move(fcoeffs)), g_(std::move(gcoeffs)) {
    if (d_ < 2) throw std::invalid_argument("Model: degree must be >= 2");
    if (f_.size() != static_cast<size_t>(d_ + 1) || g_.size() != static_cast<size_t>(d_ + 1))
        throw std::invalid_argument("Model: coefficient vectors must have length d+1");
    if (f_.back() == 0 && g_.back() == 0)
        throw std::invalid_argument("Model: both leading coefficients vanish");
    if (f_.front() == 0 && g_.front() == 0)
        throw std::invalid_argument("Model: both trailing coefficients vanish");

    /* primitive */
    Int c = 0;
    for (const auto& x : f_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : g_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c == 0) throw std::invalid_argument("Model: zero model");
    if (c != 1) {
        for (auto& x : f_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (auto& x : g_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    /* sign: leading nonzero coefficient of G positive */
    int sgn = 0;
    for (size_t i = g_.size(); i-- > 0;) {
        if (g_[i] != 0) {
            sgn = sign_of(g_[i]);
            break;
        }
    }
    if (sgn == 0) throw std::invalid_argument("Model: G = 0");
    if (sgn < 0) {
        for (auto& x : f_) x = -x;
        for (auto& x : g_) x = -x;
    }

    resd_ = res_d(d_, f_, g_);
    if (resd_ == 0) throw std::invalid_argument("Model: Res_d = 0, map is not a degree-d morphism");
}

Model Model::from_polys(const IntPoly& f, const IntPoly& g) {
    long df = f.is_zero() ? 0 : f.deg();
    long dg = g.is_zero() ? 0 : g.deg();
    return from_polys(f, g, std::max(df, dg));
}

Model Model::from_polys(const IntPoly& f, const IntPoly& g, long d) {
    std::vector<Int> fc(static_cast<size_t>(d + 1), Int(0));
    std::vector<Int> gc(static_cast<size_t>(d + 1), Int(0));
    for (long i = 0; i <= d; ++i) {
        fc[static_cast<size_t>(i)] = f.coeff(i);
        gc[static_cast<size_t>(i)] = g.coeff(i);
    }
    if (f.degree() > d || g.degree() > d)
        throw std::invalid_argument("Model: polynomial degree exceeds d");
    return Model(d, std::move(fc), std::move(gc));
}

std::string Model::str() const { return "(" + f().str() + ")/(" + g().str() + ")"; }

Int res_d(long d, const std::vector<Int>& f, const std::vector<Int>& g) {
    return resultant(IntPoly(f), IntPoly(g), d, d);
}

Int res_d(const Model& m) { return m.resd(); }

Rat res_d(const RatFormPair& p) {
    Int l = 1;
    for (const auto& x : p.f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : p.g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> f(p.f.size()), g(p.g.size());
    for (size_t i = 0; i < p.f.size(); ++i) f[i] = Rat(Rat(l) * p.f[i]).get_num();
    for (size_t i = 0; i < p.g.size(); ++i) g[i] = Rat(Rat(l) * p.g[i]).get_num();
    Rat scale(Int(1), pow_int(l, static_cast<unsigned long>(2 * p.d)));
    scale.canonicalize();
    return Rat(res_d(p.d, f, g)) * scale;
}

namespace {

/* coefficients of (uX + vY)^k, ascending in the X-power */
std::vector<Rat> linear_form_pow(const Rat& u, const Rat& v, long k) {
    std::vector<Rat> r(static_cast<size_t>(k) + 1);
    /* r[i] = C(k,i) u^i v^(k-i) */
    Int binom = 1;
    std::vector<Int> binoms(static_cast<size_t>(k) + 1);
    for (long i = 0; i <= k; ++i) {
        binoms[static_cast<size_t>(i)] = binom;
        binom = binom * (k - i) / (i + 1);
    }
    Rat upow = 1;
    std::vector<Rat> us(static_cast<size_t>(k) + 1);
    for (long i = 0; i <= k; ++i) {
        us[static_cast<size_t>(i)] = upow;
        upow *= u;
    }
    Rat vpow = 1;
    for (long i = k; i >= 0; --i) {
        r[static_cast<size_t>(i)] = Rat(binoms[static_cast<size_t>(i)]) * us[static_cast<size_t>(i)] * vpow;
        vpow *= v;
    }
    return r;
}

/* F(aX+bY, cX+dY) for the degree-d form with ascending coefficients fc */
std::vector<Rat> compose_form(const std::vector<Int>& fc, long d, const Rat& a, const Rat& b,
                              const Rat& c, const Rat& dd) {
    std::vector<Rat> out(static_cast<size_t>(d + 1), Rat(0));
    /* powers of (aX+bY) ascending i and (cX+dY) descending d-i, built
     * incrementally */
    std::vector<std::vector<Rat>> pa(static_cast<size_t>(d + 1));
    std::vector<std::vector<Rat>> pc(static_cast<size_t>(d + 1));
    for (long i = 0; i <= d; ++i) {
        pa[static_cast<size_t>(i)] = linear_form_pow(a, b, i);
        pc[static_cast<size_t>(i)] = linear_form_pow(c, dd, i);
    }
    for (long i = 0; i <= d; ++i) {
        const Int& fi = fc[static_cast<size_t>(i)];
        if (fi == 0) continue;
        const auto& u = pa[static_cast<size_t>(i)];
        const auto& v = pc[static_cast<size_t>(d - i)];
        for (size_t s = 0; s < u.size(); ++s)
            for (size_t t = 0; t < v.size(); ++t) out[s + t] += Rat(fi) * u[s] * v[t];
    }
    return out;
}

}  // namespace

RatFormPair act(const Model& m, const ScaledTransform& t) {
    if (t.det() == 0) throw std::invalid_argument("act: singular transform");
    long d = m.d();
    std::vector<Rat> fa = compose_form(m.fc(), d, t.a, t.b, t.c, t.d);
    std::vector<Rat> ga = compose_form(m.gc(), d, t.a, t.b, t.c, t.d);
    RatFormPair out;
    out.d = d;
    out.f.resize(static_cast<size_t>(d + 1));
    out.g.resize(static_cast<size_t>(d + 1));
    for (long i = 0; i <= d; ++i) {
        size_t k = static_cast<size_t>(i);
        out.f[k] = t.lambda * (t.d * fa[k] - t.b * ga[k]);
        out.g[k] = t.lambda * (-t.c * fa[k] + t.a * ga[k]);
    }
    return out;
}

NormalizedModel normalize(const RatFormPair& p) {
    Int l = 1;
    for (const auto& x : p.f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : p.g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> f(p.f.size()), g(p.g.size());
    for (size_t i = 0; i < p.f.size(); ++i) f[i] = Rat(Rat(l) * p.f[i]).get_num();
    for (size_t i = 0; i < p.g.size(); ++i) g[i] = Rat(Rat(l) * p.g[i]).get_num();
    Int c = 0;
    for (const auto& x : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : g) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c == 0) throw std::invalid_argument("normalize: zero pair");
    int sgn = 0;
    for (size_t i = g.size(); i-- > 0;) {
        if (g[i] != 0) {
            sgn = sign_of(g[i]);
            break;
        }
    }
    if (sgn < 0) c = -c;
    Model model(p.d, std::move(f), std::move(g));
    /* the Model constructor re-divides by content; the scalar folds both
     * steps: pair = (c / l) * model */
    Rat scalar(c, l);
    scalar.canonicalize();
    return NormalizedModel{std::move(model), scalar};
}

bool res_transform_check(const Model& m, const ScaledTransform& t) {
    Rat lhs = res_d(act(m, t));
    long d = m.d();
    Rat lam = t.lambda;
    Rat dt = t.det();
    Rat rhs = Rat(m.resd());
    for (long i = 0; i < 2 * d; ++i) rhs *= lam;
    for (long i = 0; i < d * d + d; ++i) rhs *= dt;
    return lhs == rhs;
}

ReducedModel reduce_mod_p(const Model& m, const Int& p) {
    require_prime(p);
    ReducedModel r;
    r.p = p;
    r.d = m.d();
    auto red = [&](const std::vector<Int>& v) {
        std::vector<Int> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] = v[i] % p;
            if (out[i] < 0) out[i] += p;
        }
        return out;
    };
    r.f = red(m.fc());
    r.g = red(m.gc());
    return r;
}

bool good_reduction(const Model& m, const Int& p) {
    require_prime(p);
    return m.resd() % p != 0;
}

FactoredInteger factor_resultant(const Model& m, const FactorBudget& budget) {
    return factor_integer(m.resd(), budget);
}

Int conductor(const Model& m, const FactorBudget& budget) {
    FactoredInteger f = factor_resultant(m, budget);
    if (!f.complete())
        throw std::domain_error("conductor: resultant has an unfactored composite cofactor");
    return f.radical();
}

Model parse_model(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("model must look like (F)/(G): " + text);
    size_t start = ++i;
    int depth = 1;
    while (i < text.size() && depth > 0) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
    std::string ftext = text.substr(start, i - start - 1);
    skip();
    if (i >= text.size() || text[i] != '/')
        throw std::invalid_argument("model must look like (F)/(G): " + text);
    ++i;
    skip();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("model must look like (F)/(G): " + text);
    start = ++i;
    depth = 1;
    while (i < text.size() && depth > 0) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
    std::string gtext = text.substr(start, i - start - 1);
    skip();
    if (i != text.size()) throw std::invalid_argument("trailing characters in model: " + text);

    RatPoly fq = parse_ratpoly(ftext);
    RatPoly gq = parse_ratpoly(gtext);
    Int l = 1;
    for (const auto& x : fq.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : gq.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    auto clear = [&](const RatPoly& q) {
        std::vector<Int> v(q.coeffs().size());
        for (size_t k = 0; k < v.size(); ++k) v[k] = Rat(Rat(l) * q.coeffs()[k]).get_num();
        return IntPoly(std::move(v));
    };
    return Model::from_polys(clear(fq), clear(gq));
}

}  // namespace minrat
