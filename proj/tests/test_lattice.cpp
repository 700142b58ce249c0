#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sunit/lattice.hpp"

using namespace sunit;

namespace {

IntegerLattice lat(Mat basis) {
    return IntegerLattice{basis.size(), std::move(basis)};
}

Mat ident(size_t n) {
    Mat I(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

// exact Lovász + size-reduction check (delta = 3/4), independent of gram_lll
bool is_lll_reduced(const Mat& B) {
    size_t d = B.size();
    if (d <= 1) return true;
    size_t n = B[0].size();
    std::vector<std::vector<Rat>> bstar(d, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> mu(d, std::vector<Rat>(d, 0));
    std::vector<Rat> norm(d);
    for (size_t i = 0; i < d; ++i) {
        for (size_t k = 0; k < n; ++k) bstar[i][k] = Rat(B[i][k]);
        for (size_t j = 0; j < i; ++j) {
            Rat dot(0);
            for (size_t k = 0; k < n; ++k) dot += Rat(B[i][k]) * bstar[j][k];
            mu[i][j] = dot / norm[j];
            for (size_t k = 0; k < n; ++k)
                bstar[i][k] -= mu[i][j] * bstar[j][k];
        }
        norm[i] = 0;
        for (size_t k = 0; k < n; ++k) norm[i] += bstar[i][k] * bstar[i][k];
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < i; ++j) {
            if (abs(mu[i][j]) > Rat(1, 2)) return false;
        }
    for (size_t i = 1; i < d; ++i) {
        Rat lhs = norm[i] + mu[i][i - 1] * mu[i][i - 1] * norm[i - 1];
        if (lhs < Rat(3, 4) * norm[i - 1]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf basics") {
    Mat A = {{2, 0}, {1, 1}};
    Mat H = hnf(A);
    CHECK(H == Mat{{1, 1}, {0, 2}});
    Mat U;
    hnf(A, &U);
    // U * A == H
    CHECK(U[0][0] * A[0][0] + U[0][1] * A[1][0] == H[0][0]);
    CHECK(same_lattice(A, Mat{{1, 1}, {0, 2}}));
    CHECK(!same_lattice(A, ident(2)));
}

TEST_CASE("kernel basis") {
    // x * A = 0 for A = [[2],[4],[6]] -> kernel rank 2
    Mat A = {{2}, {4}, {6}};
    Mat K = kernel_basis(A);
    CHECK(K.size() == 2);
    for (const auto& row : K)
        CHECK(row[0] * 2 + row[1] * 4 + row[2] * 6 == 0);
}

TEST_CASE("lll_reduce spec examples") {
    // identity stays put
    IntegerLattice I = lll_reduce(lat(ident(2)));
    CHECK(same_lattice(I.basis, ident(2)));
    CHECK(is_lll_reduced(I.basis));

    // size reduction flattens [[1,0],[10,1]]
    IntegerLattice L = lll_reduce(lat({{1, 0}, {10, 1}}));
    CHECK(same_lattice(L.basis, ident(2)));
    CHECK(is_lll_reduced(L.basis));
    for (const auto& row : L.basis)
        for (const Int& v : row) CHECK(abs(v) <= 1);

    // orthogonal basis already reduced
    IntegerLattice D = lll_reduce(lat({{2, 0}, {0, 3}}));
    CHECK(same_lattice(D.basis, Mat{{2, 0}, {0, 3}}));
}

TEST_CASE("lll_reduce preserves lattices on random bases") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> coef(-30, 30);
    for (int iter = 0; iter < 60; ++iter) {
        size_t d = 2 + iter % 4;
        Mat B(d, std::vector<Int>(d));
        // unimodular-ish times diagonal: random until nonsingular
        do {
            for (auto& row : B)
                for (auto& v : row) v = coef(rng);
        } while (hnf(B).back() == std::vector<Int>(d, 0));
        IntegerLattice R = lll_reduce(lat(B));
        CHECK(same_lattice(B, R.basis));
        CHECK(is_lll_reduced(R.basis));
    }
}

TEST_CASE("enumerate_ellipsoid spec examples") {
    // Z^2, unit ball
    auto pts = enumerate_ellipsoid(lat(ident(2)),
                                   IntegerEllipsoid{ident(2), Int(1)});
    std::set<std::vector<Int>> got(pts.begin(), pts.end());
    std::set<std::vector<Int>> want = {
        {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    CHECK(got == want);

    // 2Z x Z, radius^2 = 4
    auto pts2 = enumerate_ellipsoid(lat({{2, 0}, {0, 1}}),
                                    IntegerEllipsoid{ident(2), Int(4)});
    std::set<std::vector<Int>> got2(pts2.begin(), pts2.end());
    std::set<std::vector<Int>> want2 = {
        {0, 0}, {0, 1}, {0, -1}, {0, 2}, {0, -2}, {2, 0}, {-2, 0}};
    CHECK(got2 == want2);

    // 10Z, bound 99: only the origin
    auto pts3 =
        enumerate_ellipsoid(lat({{10}}), IntegerEllipsoid{{{Int(1)}}, Int(99)});
    CHECK(pts3 == std::vector<std::vector<Int>>{{0}});
}

TEST_CASE("enumerate_ellipsoid equals box brute force on random instances") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-10, 10);
    std::uniform_int_distribution<int> qcoef(-3, 3);
    std::uniform_int_distribution<int> cdist(1, 400);
    for (int iter = 0; iter < 50; ++iter) {
        size_t d = 1 + iter % 4;
        Mat B(d, std::vector<Int>(d));
        do {
            for (auto& row : B)
                for (auto& v : row) v = coef(rng);
        } while (hnf(B).back() == std::vector<Int>(d, 0));
        // Q = R^T R + I  >=  I, so |v|_inf <= sqrt(C)
        Mat R(d, std::vector<Int>(d));
        for (auto& row : R)
            for (auto& v : row) v = qcoef(rng);
        Mat Q(d, std::vector<Int>(d, 0));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                for (size_t k = 0; k < d; ++k) Q[i][j] += R[k][i] * R[k][j];
                if (i == j) Q[i][j] += 1;
            }
        Int C(cdist(rng));
        auto pts = enumerate_ellipsoid(lat(B), IntegerEllipsoid{Q, C});
        std::set<std::vector<Int>> got(pts.begin(), pts.end());
        long box = 20;  // sqrt(400)
        auto want = oracle::ellipsoid_points_box(B, Q, C, box);
        CHECK(got == want);
        // symmetry and origin
        CHECK(got.count(std::vector<Int>(d, 0)) == 1);
        for (const auto& v : got) {
            std::vector<Int> neg;
            for (const Int& x : v) neg.push_back(-x);
            CHECK(got.count(neg) == 1);
        }
    }
}

TEST_CASE("candidate cap raises overflow") {
    CHECK_THROWS_AS(enumerate_ellipsoid(lat(ident(2)),
                                        IntegerEllipsoid{ident(2), Int(100)},
                                        3),
                    candidate_overflow_error);
    CandidateBudget budget(2);
    CHECK_THROWS_AS(enumerate_ellipsoid(lat(ident(2)),
                                        IntegerEllipsoid{ident(2), Int(100)},
                                        size_t(-1), &budget),
                    candidate_overflow_error);
}

TEST_CASE("dimension zero lattice") {
    auto pts = enumerate_ellipsoid(lat({}), IntegerEllipsoid{{}, Int(0)});
    CHECK(pts.size() == 1);
    CHECK(pts[0].empty());
    auto none = enumerate_ellipsoid(lat({}), IntegerEllipsoid{{}, Int(-1)});
    CHECK(none.empty());
}
