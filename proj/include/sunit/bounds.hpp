#pragma once

#include <optional>
#include <utility>

#include "sunit/arith.hpp"
#include "sunit/guarded.hpp"

namespace sunit {

// Ingredients of the alpha-bar upper bound for the level N.
struct AlphaBarInputs {
    Int N;
    Int nu;        // N * nu*(N); nu* multiplicative, nu*(p)=1, nu*(p^k)=1-1/p^2
    Int m_upper;   // floor((nu + 1) / 12), upper bound for the newform count
    Int genus;     // genus of X_0(N)
    Int l;         // floor(N/6 * prod_{p|N}(p+1))
    Int l_star;    // floor(N/6 * prod_{p|N}(1+1/p))
};

struct HeightBoundReport {
    GuardedReal simplified_a;            // (5/2) N log N + 9 N
    GuardedReal simplified_b;            // (12/5) N log N + ... + 8.26 N + 28
    std::optional<GuardedReal> optimized;  // (6/5) alpha_bar(16 N) + 28
    long m0 = 0;                         // certified integer bound
};

// The two closed-form height bounds for N_S = S.radical(). |S| >= 1.
std::pair<GuardedReal, GuardedReal> simplified_bounds(
    const PrimeSet& S, long prec = GuardedReal::kDefaultPrec);

// Genus of the modular curve X_0(N).
Int genus_x0(const Int& N);

AlphaBarInputs alpha_bar_inputs(const Int& N);

// Upper bound for alpha(N): min of beta-bar (with the newform count replaced
// by its upper bound) and beta*-bar (with the exact genus). When the genus
// is zero only beta-bar is used.
GuardedReal alpha_bar(const Int& N, long prec = GuardedReal::kDefaultPrec);

// Certified M0: every solution (x,y) of the S-unit equation satisfies
// M(x,y) <= max(h(x), h(y)) <= m0. Requires 2 in S.
HeightBoundReport initial_bound(const PrimeSet& S);

}  // namespace sunit
