#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <limits>
#include <vector>

#include "sunit/errors.hpp"
#include "sunit/guarded.hpp"

namespace sunit {

using Mat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form. Returns H with the same row span as A;
// pivots positive, entries above a pivot reduced into [0, pivot). If U is
// given it receives a unimodular matrix with U*A = H.
Mat hnf(const Mat& A, Mat* U = nullptr);

// Basis of the left kernel {x : x*A = 0} as rows.
Mat kernel_basis(const Mat& A);

// True if the two full-rank square bases span the same lattice.
bool same_lattice(const Mat& A, const Mat& B);

struct IntegerLattice {
    size_t dim = 0;     // ambient dimension == rank
    Mat basis;          // rows are basis vectors
};

// {x : x^T Q x <= C} with Q symmetric positive definite.
struct IntegerEllipsoid {
    Mat gram;
    Int bound;
};

// LLL with delta = 3/4 on the Gram matrix G; returns a unimodular U such
// that U*G*U^T is LLL-reduced.
Mat gram_lll(const Mat& G);

// LLL-reduced basis of the same lattice (Euclidean inner product).
IntegerLattice lll_reduce(const IntegerLattice& L);

// Shared candidate countdown for enumeration across concurrent calls.
class CandidateBudget {
  public:
    explicit CandidateBudget(long long cap) : remaining_(cap) {}
    // Throws candidate_overflow_error when the budget is exceeded.
    void consume() {
        if (remaining_.fetch_sub(1, std::memory_order_relaxed) <= 0)
            throw candidate_overflow_error("FP candidate budget exceeded");
    }

  private:
    std::atomic<long long> remaining_;
};

// All lattice points v with v^T Q v <= C, one representative per point, in
// lexicographic order of the coordinates w.r.t. the reduced basis. Exact
// integer/rational arithmetic throughout; no square roots. Throws
// candidate_overflow_error if more than `cap` points would be returned or
// the shared budget (if any) runs out.
std::vector<std::vector<Int>> enumerate_ellipsoid(
    const IntegerLattice& L, const IntegerEllipsoid& E,
    size_t cap = std::numeric_limits<size_t>::max(),
    CandidateBudget* budget = nullptr);

}  // namespace sunit
