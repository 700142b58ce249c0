#pragma once

#include <cstddef>
#include <vector>

#include "sunit/arith.hpp"
#include "sunit/sieves.hpp"
#include "sunit/solution.hpp"

namespace sunit {

struct EnumOptions {
    size_t threads = 1;
    // above this many hash entries the X side degrades to membership by
    // trial factorization instead of a stored hash set
    size_t hash_entry_budget = size_t(1) << 24;
};

struct EnumStats {
    size_t subsets = 0;
    bool hash_fallback_used = false;
};

// All solutions with m(x,y) <= u, as deduplicated symmetry classes.
// Meet-in-the-middle over 3-partitions S_a | S_b | S_c with weight-balanced
// splitting of S_a.
std::vector<SymmetryClass> refined_enumeration(const PrimeSet& S,
                                               const ExponentVector& u,
                                               const EnumOptions& opts = {},
                                               EnumStats* stats = nullptr);

// All solutions with mu(x,y) <= mu, by running the enumeration with
// u_p = floor(mu_1 / log p) and filtering the mu condition exactly.
std::vector<SymmetryClass> refined_enumeration_mu(const PrimeSet& S,
                                                  const MuVector& mu,
                                                  const EnumOptions& opts = {},
                                                  EnumStats* stats = nullptr);

}  // namespace sunit
