#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minrat/valuation.hpp"

namespace minrat {

struct FactorBudget {
    unsigned long trial_limit = 100000;
    /* total Pollard-Brent iterations allowed across all cofactors */
    long rho_iters = 10'000'000;
};

/* sign * prod(p^e) * cofactor, with every listed p passing a primality
 * test and ascending.  cofactor != 1 means the budget ran out on a
 * composite remainder. */
struct FactoredInteger {
    int sign = 1;
    std::vector<std::pair<Int, long>> factors;
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }
    Int value() const;
    /* product of the distinct primes; requires complete() */
    Int radical() const;
    /* exponent of p (p must be listed or coprime to the cofactor) */
    long exponent_of(const Int& p) const;
    std::string str() const;
};

/* n must be nonzero */
FactoredInteger factor_integer(const Int& n, const FactorBudget& budget = {});

}  // namespace minrat
