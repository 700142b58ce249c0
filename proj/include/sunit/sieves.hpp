#pragma once

#include <cstddef>
#include <vector>

#include "sunit/arith.hpp"
#include "sunit/lattice.hpp"
#include "sunit/relations.hpp"
#include "sunit/solution.hpp"

namespace sunit {

// Componentwise 0 <= lo <= hi over a PrimeSet.
struct BoundPair {
    ExponentVector lo, hi;
};

// Monotonically nonincreasing nonnegative integer vector of length
// t = max(1, floor(|S|/3)).
class MuVector {
  public:
    MuVector() = default;
    explicit MuVector(std::vector<long> entries);
    size_t size() const { return e_.size(); }
    long operator[](size_t j) const { return e_[j]; }
    const std::vector<long>& entries() const { return e_; }
    bool operator==(const MuVector& o) const { return e_ == o.e_; }

    // componentwise <=
    bool all_leq(const MuVector& o) const;

  private:
    std::vector<long> e_;
};

size_t mu_length(const PrimeSet& S);  // t = max(1, |S|/3)

// (mu_1, ..., mu_t): mu_j is the max over a, b, c of the j-th largest of
// ord_p(.) log p, p in S. Enclosures; requires the solution to be S-smooth.
std::vector<GuardedReal> mu_of_solution(const SUnitSolution& sol,
                                        const PrimeSet& S, size_t t,
                                        long prec = GuardedReal::kDefaultPrec);

// Exact integer test of mu_j(n) <= bound for all j, via the precomputed cap
// table cap[j][i] = floor(bound_j / log p_i).
bool mu_within(const ExponentVector& e,
               const std::vector<std::vector<long>>& cap);

struct SieveStats {
    size_t fp_candidates = 0;
    size_t lattice_tasks = 0;
};

// All solutions with m(x,y) not<= lo and m(x,y) <= hi, together with their
// symmetry orbits, as deduplicated classes. Empty when 2 is not in S after
// dropping primes with hi_p = 0.
std::vector<SymmetryClass> deweger_sieve(const PrimeSet& S,
                                         const BoundPair& bounds,
                                         SieveStats* stats = nullptr,
                                         CandidateBudget* budget = nullptr,
                                         size_t threads = 1);

// True if the lattice stage (relation lattice + ellipsoid enumeration) for
// the band given by `bounds` yields only gamma = 0 for every q in S.
bool deweger_lattice_only_zero(const PrimeSet& S, const BoundPair& bounds,
                               size_t threads = 1);

// All solutions with mu(x,y) not<= mu_lo and mu(x,y) <= mu_hi, as classes.
std::vector<SymmetryClass> refined_sieve(const PrimeSet& S,
                                         const MuVector& mu_lo,
                                         const MuVector& mu_hi,
                                         SieveStats* stats = nullptr,
                                         CandidateBudget* budget = nullptr,
                                         size_t threads = 1);

// Squared radius of the refined sieve ellipsoid for |S \ T| coordinates.
Int refined_radius(const MuVector& mu_hi, size_t rest_size);

}  // namespace sunit
