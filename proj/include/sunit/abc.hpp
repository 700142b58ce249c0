#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sunit/solution.hpp"
#include "sunit/solver.hpp"

namespace sunit {

// Coprime positive a <= b < c with a + b = c.
struct ABCTriple {
    Int a, b, c;
    Int radical;   // rad(abc)
    int omega = 0; // number of distinct primes dividing the radical

    bool operator==(const ABCTriple& o) const {
        return a == o.a && b == o.b;
    }
    bool operator<(const ABCTriple& o) const {
        if (c != o.c) return c < o.c;
        return a < o.a;
    }
    bool is_one_one_two() const { return a == 1 && b == 1; }
};

// The positive triple of the symmetry class of a solution; constant across
// the class.
ABCTriple to_abc(const SUnitSolution& sol);

// Enclosure of log c / log rad(abc), width <= 1e-6. Exact 1 for (1,1,2).
GuardedReal quality(const ABCTriple& t);

enum class BakerStatus { Holds, Violated, Excluded };

// c <= (6/5) N (log N)^omega / omega!, decided with certainty. (1,1,2) is
// excluded, not violated.
BakerStatus baker_status(const ABCTriple& t);
bool baker_check(const ABCTriple& t);  // throws on (1,1,2)

// Certified ordering of two triples by quality (ties by (c, a)).
bool quality_less(const ABCTriple& lhs, const ABCTriple& rhs);

struct BakerReport {
    Int radical_max;
    size_t sets_solved = 0;      // maximal support sets actually solved
    size_t sets_total = 0;       // all support sets with N_S <= radical_max
    size_t triples = 0;          // distinct triples with rad <= radical_max
    bool excluded_triple_seen = false;  // (1,1,2)
    std::vector<ABCTriple> violations;
    std::vector<ABCTriple> top;  // highest quality first
};

// Solves the S-unit equation for every squarefree support set with
// N_S <= radical_max (via the maximal sets, reusing monotonicity), converts
// all solutions to triples and checks Baker's explicit inequality.
BakerReport verify_baker(const Int& radical_max, const SolverConfig& cfg = {},
                         size_t top_k = 10);

// All support sets S (as prime vectors) with N_S <= bound, ascending by
// radical; used by the radical sweep front ends.
std::vector<std::vector<Int>> support_sets_up_to(const Int& bound);

// The maximal sets among them (no further prime fits under the bound).
std::vector<std::vector<Int>> maximal_support_sets(const Int& bound);

}  // namespace sunit
