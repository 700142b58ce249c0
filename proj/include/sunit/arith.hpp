#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sunit/guarded.hpp"

namespace sunit {

// Deterministic Miller-Rabin with a fixed witness set, valid for n < 3.3e24.
// Throws std::invalid_argument beyond that range.
bool is_prime(const Int& n);

// Trial division up to a small bound, then Pollard-Brent rho with an
// iteration budget. Returns prime -> exponent. Throws
// factorization_budget_error when rho gives up.
std::map<Int, int> factorize(const Int& n, unsigned long rho_budget = 1u << 22);

// A finite set of rational primes, strictly increasing, with its radical.
class PrimeSet {
  public:
    PrimeSet() : radical_(1) {}
    explicit PrimeSet(std::vector<Int> primes);
    static PrimeSet first_n(size_t n);

    const std::vector<Int>& primes() const { return primes_; }
    const Int& radical() const { return radical_; }
    size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    const Int& prime(size_t i) const { return primes_[i]; }
    bool contains(const Int& p) const;
    bool contains_two() const { return !primes_.empty() && primes_[0] == 2; }
    // index of p, or npos
    size_t index_of(const Int& p) const;
    static constexpr size_t npos = static_cast<size_t>(-1);

    bool operator==(const PrimeSet& o) const { return primes_ == o.primes_; }
    std::string str() const;  // "2,3,5"

  private:
    std::vector<Int> primes_;
    Int radical_;
};

// Integer exponents positionally aligned with a PrimeSet.
class ExponentVector {
  public:
    ExponentVector() = default;
    explicit ExponentVector(size_t n, long v = 0) : e_(n, v) {}
    explicit ExponentVector(std::vector<long> e) : e_(std::move(e)) {}

    size_t size() const { return e_.size(); }
    long operator[](size_t i) const { return e_[i]; }
    long& operator[](size_t i) { return e_[i]; }
    const std::vector<long>& entries() const { return e_; }

    bool all_leq(const ExponentVector& o) const;    // componentwise <=
    bool is_zero() const;

    // product of S.prime(i)^e_i; exponents must be >= 0
    Int value(const PrimeSet& S) const;

  private:
    std::vector<long> e_;
};

// Exponent vector of |n| over S if |n| is S-smooth, otherwise nullopt.
std::optional<ExponentVector> factor_smooth(const Int& n, const PrimeSet& S);

// Weil height h(x) = log max(|num|, den); h(0) = 0.
GuardedReal weil_height(const Rat& x, long prec = GuardedReal::kDefaultPrec);

}  // namespace sunit
