#include "minrat/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "minrat/factor.hpp"

namespace minrat {

namespace {
const Int kZero = 0;
const Rat kZeroQ = 0;
}  // namespace

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs_low_to_high) {
    for (long v : coeffs_low_to_high) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly f;
    if (c != 0) f.c_.push_back(std::move(c));
    return f;
}

IntPoly IntPoly::monomial(Int c, long k) {
    IntPoly f;
    if (c != 0) {
        f.c_.assign(static_cast<size_t>(k) + 1, Int(0));
        f.c_.back() = std::move(c);
    }
    return f;
}

const Int& IntPoly::coeff(long i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZero;
    return c_[static_cast<size_t>(i)];
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> r(a.c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly operator*(const Int& a, const IntPoly& b) {
    if (a == 0) return IntPoly();
    std::vector<Int> r(b.c_);
    for (auto& x : r) x *= a;
    return IntPoly(std::move(r));
}

Int IntPoly::operator()(const Int& x) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat IntPoly::operator()(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_linear(const Int& a, const Int& b) const {
    IntPoly lin(std::vector<Int>{a, b});
    IntPoly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + IntPoly::constant(c_[i]);
    return r;
}

IntPoly IntPoly::divexact(const Int& d) const {
    assert(d != 0);
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

const Rat& RatPoly::coeff(long i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZeroQ;
    return c_[static_cast<size_t>(i)];
}

std::pair<IntPoly, Int> RatPoly::cleared() const {
    Int l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat y = Rat(l) * c_[i];
        assert(y.get_den() == 1);
        r[i] = y.get_num();
    }
    return {IntPoly(std::move(r)), l};
}

ValOrInf poly_val(const IntPoly& f, const Int& p) {
    ValOrInf m = ValOrInf::infinity();
    for (const auto& x : f.coeffs()) m = min(m, vp(x, p));
    return m;
}

ValOrInf poly_val(const RatPoly& f, const Int& p) {
    ValOrInf m = ValOrInf::infinity();
    for (const auto& x : f.coeffs()) m = min(m, vp(x, p));
    return m;
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& x : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    return f.divexact(content(f));
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    for (const auto& row : m) {
        (void)row;
        assert(row.size() == n);
    }
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Int resultant(const IntPoly& f, const IntPoly& g, long df, long dg) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("resultant: both polynomials are zero");
    if (df < 0 || dg < 0 || f.degree() > df || g.degree() > dg)
        throw std::invalid_argument("resultant: declared degree below true degree");
    const size_t n = static_cast<size_t>(df + dg);
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    /* g-block on top (df rows), f-block below (dg rows); this orientation
     * makes res(f, g) = lc(g)^{deg f} * f(0) when g = z. */
    for (long r = 0; r < df; ++r)
        for (long j = 0; j <= dg; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = g.coeff(dg - j);
    for (long r = 0; r < dg; ++r)
        for (long j = 0; j <= df; ++j)
            m[static_cast<size_t>(df + r)][static_cast<size_t>(r + j)] = f.coeff(df - j);
    return det_bareiss(std::move(m));
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("resultant: both polynomials are zero");
    long df = f.is_zero() ? 0 : f.deg();
    long dg = g.is_zero() ? 0 : g.deg();
    return resultant(f, g, df, dg);
}

namespace {

/* pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b, over Z */
IntPoly prem(IntPoly a, const IntPoly& b) {
    assert(!b.is_zero());
    long db = b.deg();
    while (!a.is_zero() && a.deg() >= db) {
        long da = a.deg();
        IntPoly t = b.lc() * a - a.lc() * IntPoly::monomial(Int(1), da - db) * b;
        assert(t.is_zero() || t.deg() < da);
        a = std::move(t);
    }
    return a;
}

IntPoly with_positive_lc(IntPoly f) {
    if (!f.is_zero() && sign_of(f.lc()) < 0) return -f;
    return f;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.is_zero()) return with_positive_lc(y);
    if (y.is_zero()) return with_positive_lc(x);
    if (x.deg() < y.deg()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(prem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return with_positive_lc(x);
}

namespace {

/* exact quotient f / g over Q, returned primitive over Z; g must divide f */
IntPoly divexact_poly(const IntPoly& f, const IntPoly& g) {
    assert(!g.is_zero());
    if (f.is_zero()) return IntPoly();
    long dq = f.deg() - g.deg();
    assert(dq >= 0);
    std::vector<Rat> q(static_cast<size_t>(dq) + 1, Rat(0));
    std::vector<Rat> rem;
    for (const auto& c : f.coeffs()) rem.emplace_back(c);
    for (long k = dq; k >= 0; --k) {
        Rat c = rem[static_cast<size_t>(k + g.deg())] / Rat(g.lc());
        q[static_cast<size_t>(k)] = c;
        if (c != 0)
            for (long j = 0; j <= g.deg(); ++j)
                rem[static_cast<size_t>(k + j)] -= c * Rat(g.coeff(j));
    }
    auto [ip, l] = RatPoly(std::move(q)).cleared();
    (void)l;
    return primitive_part(ip);
}

long mod_pos(const Int& x, long p) {
    Int r = x % p;
    long v = r.get_si();
    return v < 0 ? v + p : v;
}

std::vector<long> reduce_coeffs(const IntPoly& f, long p) {
    std::vector<long> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(mod_pos(c, p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

long eval_mod(const std::vector<long>& f, long x, long p) {
    long r = 0;
    for (size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
    return r;
}

std::vector<long> deriv_mod(const std::vector<long>& f, long p) {
    std::vector<long> r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(static_cast<long>((Int(f[i]) * static_cast<long>(i) % p).get_si()));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool gcd_is_constant_mod(std::vector<long> a, std::vector<long> b, long p) {
    auto degv = [](const std::vector<long>& v) { return static_cast<long>(v.size()) - 1; };
    auto inv_mod = [p](long x) {
        Int r;
        Int xi = x, pi = p;
        int ok = mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), pi.get_mpz_t());
        assert(ok);
        (void)ok;
        return r.get_si();
    };
    while (!b.empty()) {
        long db = degv(b);
        long ilc = inv_mod(b.back());
        while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
            long da = degv(a);
            long c = static_cast<long>((Int(a.back()) * ilc % p).get_si());
            for (long j = 0; j <= db; ++j) {
                size_t idx = static_cast<size_t>(da - db + j);
                a[idx] = ((a[idx] - c * b[static_cast<size_t>(j)]) % p + p) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() <= 1;
}

/* continued-fraction rational reconstruction of u mod m with |num| <= nb,
 * |den| <= db; result verified by the caller */
std::optional<Rat> rational_reconstruct(const Int& u, const Int& m, const Int& nb, const Int& db) {
    Int r0 = m, r1 = ((u % m) + m) % m;
    Int t0 = 0, t1 = 1;
    while (r1 > nb) {
        if (r1 == 0) return std::nullopt;
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0) return std::nullopt;
    Int ta = abs(t1);
    if (ta > db) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

/* roots via mod-p root finding, Hensel lifting and rational
 * reconstruction; complete for roots with |num| <= nb, |den| <= db */
void modular_roots(const IntPoly& f, const Int& nb, const Int& db, std::vector<Rat>& out,
                   int depth = 0) {
    static const long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                                   43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                                   101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                                   163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227};
    long p = 0;
    std::vector<long> fp;
    for (long cand : kPrimes) {
        if (f.lc() % cand == 0) continue;
        fp = reduce_coeffs(f, cand);
        if (fp.size() != f.coeffs().size()) continue;
        if (!gcd_is_constant_mod(fp, deriv_mod(fp, cand), cand)) continue;
        p = cand;
        break;
    }
    if (p == 0) {
        /* f has repeated factors (or very unlucky reductions); retry on the
         * squarefree part, whose rational roots are the same set */
        if (depth > 0) throw std::runtime_error("rational_roots: no usable prime");
        IntPoly g = poly_gcd(f, f.derivative());
        if (g.degree() <= 0) throw std::runtime_error("rational_roots: no usable prime");
        modular_roots(divexact_poly(f, g), nb, db, out, depth + 1);
        return;
    }

    Int target = 2 * nb * db + 1;
    IntPoly fd = f.derivative();
    for (long r = 0; r < p; ++r) {
        if (eval_mod(fp, r, p) != 0) continue;
        /* lift the simple root r to x mod q, q >= target */
        Int q = p;
        Int x = r;
        while (q < target) {
            q = q * q;
            Int d = fd(x) % q;
            Int w;
            int ok = mpz_invert(w.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
            assert(ok);
            (void)ok;
            x = (x - f(x) % q * w) % q;
            if (x < 0) x += q;
        }
        auto cand = rational_reconstruct(x, q, nb, db);
        if (cand && f(*cand) == 0) out.push_back(*cand);
    }
}

void push_divisors(const FactoredInteger& fac, const RootFindBudget& budget,
                   std::vector<Int>& out) {
    out.assign(1, Int(1));
    for (const auto& [prime, e] : fac.factors) {
        size_t base = out.size();
        if (base * static_cast<size_t>(e + 1) > budget.divisor_pairs_cap)
            throw std::overflow_error("divisor explosion");
        Int pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= prime;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
}

}  // namespace

std::vector<Rat> rational_roots(const IntPoly& f, const std::optional<Int>& height_bound,
                                const RootFindBudget& budget) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    IntPoly g = f;
    /* strip the z^k factor */
    size_t k = 0;
    while (k < g.coeffs().size() && g.coeffs()[k] == 0) ++k;
    if (k > 0) {
        roots.emplace_back(0);
        std::vector<Int> shifted(g.coeffs().begin() + static_cast<long>(k), g.coeffs().end());
        g = IntPoly(std::move(shifted));
    }
    if (g.degree() <= 0) return roots;
    g = primitive_part(g);

    Int a0 = abs(g.coeff(0));
    Int an = abs(g.lc());
    Int nb = height_bound ? std::min(a0, *height_bound) : a0;
    Int db = height_bound ? std::min(an, *height_bound) : an;

    /* divisor-enumeration route when both end coefficients factor in budget */
    if (!height_bound) {
        FactorBudget fb;
        fb.rho_iters = budget.factor_rho_iters;
        FactoredInteger f0 = factor_integer(a0, fb);
        FactoredInteger fn = factor_integer(an, fb);
        if (f0.complete() && fn.complete()) {
            try {
                std::vector<Int> num_divs, den_divs;
                push_divisors(f0, budget, num_divs);
                push_divisors(fn, budget, den_divs);
                if (num_divs.size() * den_divs.size() <= budget.divisor_pairs_cap) {
                    for (const Int& r : num_divs)
                        for (const Int& s : den_divs) {
                            Int cd;
                            mpz_gcd(cd.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
                            if (cd != 1) continue;
                            Rat cand(r, s);
                            cand.canonicalize();
                            if (g(cand) == 0) roots.push_back(cand);
                            cand = -cand;
                            if (g(cand) == 0) roots.push_back(cand);
                        }
                    std::sort(roots.begin(), roots.end());
                    return roots;
                }
            } catch (const std::overflow_error&) {
                /* too many divisors; fall through to the modular route */
            }
        }
    }

    modular_roots(g, nb, db, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/* ------------------------------------------------------------------ */
/* parsing and printing                                                */

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + what);
    }

    Int parse_uint() {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected a number");
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }

    long parse_exponent() {
        Int e = parse_uint();
        if (!fits_long(e) || e.get_si() > 1'000'000) fail("exponent out of range");
        return e.get_si();
    }

    /* term := coef | coef ['*'] z ['^' n] | z ['^' n] */
    void parse_term(int sgn, std::vector<Rat>& acc) {
        Rat coef(sgn);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_uint();
            Int den = 1;
            if (accept('/')) den = parse_uint();
            if (den == 0) fail("zero denominator");
            coef = Rat(num, den) * sgn;
            coef.canonicalize();
            have_coef = true;
            accept('*');
        }
        long k = 0;
        if (peek() == 'z') {
            ++i;
            k = 1;
            if (accept('^')) k = parse_exponent();
        } else if (!have_coef) {
            fail("expected a coefficient or 'z'");
        }
        if (static_cast<size_t>(k) >= acc.size()) acc.resize(static_cast<size_t>(k) + 1, Rat(0));
        acc[static_cast<size_t>(k)] += coef;
    }
};

std::string coef_str(const Rat& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

template <typename Poly>
std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long k = f.deg_for_print(); k >= 0; --k) {
        Rat c = f.coeff_rat(k);
        if (c == 0) continue;
        bool neg = sign_of(c) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = abs(c);
        if (k == 0) {
            out += coef_str(a);
        } else {
            if (a != 1) out += coef_str(a) + "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

struct IntPolyView {
    const IntPoly& f;
    bool is_zero() const { return f.is_zero(); }
    long deg_for_print() const { return f.deg(); }
    Rat coeff_rat(long k) const { return Rat(f.coeff(k)); }
};

struct RatPolyView {
    const RatPoly& f;
    bool is_zero() const { return f.is_zero(); }
    long deg_for_print() const { return f.degree().value(); }
    Rat coeff_rat(long k) const { return f.coeff(k); }
};

}  // namespace

RatPoly parse_ratpoly(const std::string& text) {
    Parser p(text);
    std::vector<Rat> acc;
    int sgn = 1;
    if (p.accept('+')) {
    } else if (p.accept('-')) {
        sgn = -1;
    }
    p.parse_term(sgn, acc);
    while (!p.eof()) {
        if (p.accept('+'))
            sgn = 1;
        else if (p.accept('-'))
            sgn = -1;
        else
            p.fail("expected '+' or '-'");
        p.parse_term(sgn, acc);
    }
    return RatPoly(std::move(acc));
}

IntPoly parse_intpoly(const std::string& text) {
    RatPoly f = parse_ratpoly(text);
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1)
            throw std::invalid_argument("expected integer coefficients: " + text);
    std::vector<Int> v;
    for (const auto& c : f.coeffs()) v.push_back(c.get_num());
    return IntPoly(std::move(v));
}

std::string IntPoly::str() const { return poly_str(IntPolyView{*this}); }
std::string RatPoly::str() const { return poly_str(RatPolyView{*this}); }

}  // namespace minrat
