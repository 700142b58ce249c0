#pragma once

#include <gmpxx.h>

#include <vector>

#include "sunit/arith.hpp"

namespace sunit {

// A solution (x, y) of x + y = 1 together with its integer triple
// a + b = c, gcd(a,b,c) = 1, c > 0, x = a/c, y = b/c.
struct SUnitSolution {
    Rat x, y;
    Int a, b, c;

    static SUnitSolution from_x(const Rat& x);
    static SUnitSolution from_triple(const Int& a, const Int& b, const Int& c);

    bool is_sunit(const PrimeSet& S) const;

    // ord_p(abc) for each p in S; equals max(|ord_p x|, |ord_p y|) and is
    // constant on a symmetry class. Requires the solution to be S-smooth.
    ExponentVector m_vector(const PrimeSet& S) const;

    bool operator==(const SUnitSolution& o) const { return x == o.x; }
    bool operator<(const SUnitSolution& o) const { return x < o.x; }
};

// The orbit of a solution under the six maps generated by (x,y) -> (y,x)
// and (x,y) -> (1/x, -y/x); size 6, or 3 for the class of (1/2, 1/2).
std::vector<SUnitSolution> symmetry_orbit(const SUnitSolution& sol);

struct SymmetryClass {
    SUnitSolution representative;        // the orbit element with 0 < x <= 1/2
    std::vector<SUnitSolution> orbit;    // sorted by x

    // positive triple (a <= b < c) of the representative
    const Int& pa() const { return representative.a; }
    const Int& pb() const { return representative.b; }
    const Int& pc() const { return representative.c; }
};

SymmetryClass canonical_class(const SUnitSolution& sol);

}  // namespace sunit
