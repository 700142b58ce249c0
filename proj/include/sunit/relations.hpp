#pragma once

#include <gmpxx.h>

#include <vector>

#include "sunit/arith.hpp"
#include "sunit/lattice.hpp"

namespace sunit {

// Integer basis of the lattice of multiplicative relations among the given
// residues: all gamma with prod g_i^{gamma_i} = 1 (mod n).
struct RelationLattice {
    size_t dim = 0;          // number of generators
    Mat basis;               // dim x dim, full rank, HNF-reduced
    Int modulus = 1;
    std::vector<Int> generators;

    // |det(basis)| equals the order of the subgroup generated.
    Int subgroup_order() const;
};

// Computes the relation lattice via the structure of (Z/nZ)^x: cyclic
// components for odd prime powers, {+-1} x <3> for 2^k with k >= 3, and
// Pohlig-Hellman / baby-step giant-step discrete logs. Requires every
// generator to be a unit mod n. Factoring q-1 for q | n is subject to the
// rho budget and surfaces factorization_budget_error.
RelationLattice relation_basis(const std::vector<Int>& gens, const Int& n,
                               unsigned long rho_budget = 1u << 22);

}  // namespace sunit
