#include "minrat/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minrat {

Int FactoredInteger::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, static_cast<unsigned long>(e));
    return v * cofactor;
}

Int FactoredInteger::radical() const {
    if (!complete()) throw std::domain_error("radical of an incompletely factored integer");
    Int r = 1;
    for (const auto& [p, e] : factors) r *= p;
    return r;
}

long FactoredInteger::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::string FactoredInteger::str() const {
    std::string out = sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) out += " * ";
        first = false;
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (cofactor != 1) {
        if (!first) out += " * ";
        first = false;
        out += cofactor.get_str() + " (composite)";
    }
    if (first) out += "1";
    return out;
}

namespace {

/* Pollard-Brent rho; returns a nontrivial factor of n (which must be odd,
 * composite, not a prime power of interest) or 0 when the iteration
 * budget runs out.  iters is decremented as work is done. */
Int pollard_brent(const Int& n, long& iters) {
    const long batch = 128;
    for (unsigned long c = 1; c < 64 && iters > 0; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1 && iters > 0) {
            x = y;
            for (Int i = 0; i < r && iters > 0; ++i, --iters) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1 && iters > 0) {
                ys = y;
                Int chunk_i = r - k;
                if (chunk_i > batch) chunk_i = batch;
                long chunk = chunk_i.get_si();
                for (long i = 0; i < chunk; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    q = q * (d < 0 ? -d : d) % n;
                }
                iters -= chunk;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += chunk;
            }
            r *= 2;
        }
        if (g == n) {
            /* the whole batch collapsed; backtrack one step at a time */
            g = 1;
            long guard = 4 * batch;
            while (g == 1 && guard-- > 0) {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                mpz_gcd(g.get_mpz_t(), (d < 0 ? Int(-d) : d).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
        /* only the trivial factor; retry with the next c */
    }
    return 0;
}

}  // namespace

FactoredInteger factor_integer(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    FactoredInteger out;
    out.sign = sign_of(n) < 0 ? -1 : 1;
    Int m = abs(n);

    std::map<Int, long> found;
    auto take = [&](const Int& p) {
        Int rest;
        long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
        if (e > 0) {
            found[p] += e;
            m = rest;
        }
    };

    take(Int(2));
    take(Int(3));
    take(Int(5));
    for (unsigned long d = 7; d <= budget.trial_limit && m > 1; d += 30) {
        /* wheel mod 30 */
        for (unsigned long off : {0ul, 4ul, 6ul, 10ul, 12ul, 16ul, 22ul, 24ul}) {
            Int dd(d + off);
            if (dd * dd > m) break;
            take(dd);
        }
        if (Int(d) * Int(d) > m) break;
    }
    if (m > 1 && (Int(budget.trial_limit) * Int(budget.trial_limit) > m || is_probable_prime(m))) {
        if (is_probable_prime(m)) {
            found[m] += 1;
            m = 1;
        }
    }

    long iters = budget.rho_iters;
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    Int cof = 1;
    while (!stack.empty()) {
        Int t = stack.back();
        stack.pop_back();
        if (t == 1) continue;
        if (is_probable_prime(t)) {
            Int rest;
            long e = 1;
            /* absorb repeated occurrences hiding in other stack entries is
             * handled naturally; here t is a single chunk */
            found[t] += e;
            (void)rest;
            continue;
        }
        /* perfect power check makes rho's life easier */
        if (mpz_perfect_power_p(t.get_mpz_t())) {
            for (unsigned long k = 2; k <= mpz_sizeinbase(t.get_mpz_t(), 2); ++k) {
                Int root;
                if (mpz_root(root.get_mpz_t(), t.get_mpz_t(), k) != 0) {
                    for (unsigned long j = 0; j < k; ++j) stack.push_back(root);
                    t = 1;
                    break;
                }
            }
            if (t == 1) continue;
        }
        Int f = pollard_brent(t, iters);
        if (f == 0) {
            cof *= t;
        } else {
            stack.push_back(f);
            stack.push_back(t / f);
        }
    }

    /* the unfactored part may itself collect several composites; primality
     * of the product is rechecked so a lucky split is not missed */
    if (cof > 1 && is_probable_prime(cof)) {
        found[cof] += 1;
        cof = 1;
    }

    out.factors.assign(found.begin(), found.end());
    out.cofactor = cof;
    return out;
}

}  // namespace minrat
