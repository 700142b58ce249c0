#include <doctest.h>

#include "sunit/bounds.hpp"

using namespace sunit;

namespace {
PrimeSet S23() { return PrimeSet({Int(2), Int(3)}); }
}

TEST_CASE("simplified_bounds frozen values") {
    auto [a6, b6] = simplified_bounds(S23());
    CHECK(a6.mid_double() == doctest::Approx(80.8763920384208).epsilon(1e-12));
    CHECK(b6.mid_double() == doctest::Approx(105.6162429562187).epsilon(1e-12));
    auto [a2, b2] = simplified_bounds(PrimeSet({Int(2)}));
    CHECK(a2.mid_double() == doctest::Approx(21.4657359027997).epsilon(1e-12));
    CHECK(b2.mid_double() == doctest::Approx(48.2385479059572).epsilon(1e-12));
}

TEST_CASE("bound formulas agree across precisions") {
    for (long ns : {2L, 6L, 30L, 15042L}) {
        std::vector<Int> ps;
        for (const auto& [p, e] : factorize(Int(ns))) ps.push_back(p);
        PrimeSet S(ps);
        auto [a1, b1] = simplified_bounds(S, 128);
        auto [a2, b2] = simplified_bounds(S, 512);
        CHECK(a1.cmp_lower(a2) <= 0);
        CHECK(a2.cmp_upper(a1) <= 0);
        CHECK(b1.cmp_lower(b2) <= 0);
        CHECK(b2.cmp_upper(b1) <= 0);
    }
}

TEST_CASE("genus_x0 against the known table") {
    // classical genus values for X_0(N)
    const std::pair<long, long> table[] = {
        {1, 0},  {2, 0},  {3, 0},  {10, 0}, {11, 1}, {12, 0}, {14, 1},
        {15, 1}, {16, 0}, {17, 1}, {22, 2}, {30, 3}, {32, 1}, {36, 1},
        {37, 2}, {48, 3}, {49, 1}, {50, 2}, {64, 3}, {81, 4}, {96, 9},
        {97, 7}, {100, 7}, {101, 8}, {128, 9}, {169, 8}, {200, 19},
        {389, 32}, {240672, 42209}, {480480, 128897}};
    for (auto [n, g] : table) CHECK(genus_x0(Int(n)) == g);
}

TEST_CASE("alpha_bar_inputs invariants and frozen values") {
    AlphaBarInputs in = alpha_bar_inputs(Int(96));
    CHECK(in.nu == 72);
    CHECK(in.m_upper == 6);
    CHECK(in.genus == 9);
    CHECK(in.l == 192);
    CHECK(in.l_star == 32);
    AlphaBarInputs big = alpha_bar_inputs(Int(480480));
    CHECK(big.nu == 360360);
    CHECK(big.m_upper == 30030);
    CHECK(big.l == Int("7749181440"));
    CHECK(big.l_star == 258048);
    CHECK(big.nu <= big.N);
    CHECK(big.l_star <= big.l);
}

TEST_CASE("alpha_bar frozen values") {
    // N = 96: beta*-bar wins (71.607 < 92.591)
    CHECK(alpha_bar(Int(96)).mid_double() ==
          doctest::Approx(71.6069762042).epsilon(1e-9));
    // N = 16 has genus 0, so beta-bar is returned
    CHECK(alpha_bar(Int(16)).mid_double() ==
          doctest::Approx(12.5496509635).epsilon(1e-9));
    // N = 480480: beta-bar wins (920021.88 < 2075737.43)
    CHECK(alpha_bar(Int(480480)).mid_double() ==
          doctest::Approx(920021.879956).epsilon(1e-9));
}

TEST_CASE("initial_bound frozen values") {
    HeightBoundReport r23 = initial_bound(S23());
    CHECK(r23.m0 == 81);  // simplified (5/2) N log N + 9N wins
    HeightBoundReport r2 = initial_bound(PrimeSet({Int(2)}));
    CHECK(r2.m0 == 22);
    HeightBoundReport r6 = initial_bound(PrimeSet::first_n(6));
    CHECK(r6.m0 == 1016660);
    REQUIRE(r6.optimized.has_value());
    // at this size the second simplified bound is the winner
    CHECK(r6.simplified_b.certainly_lt(*r6.optimized));
    CHECK_THROWS_AS(initial_bound(PrimeSet({Int(3), Int(5)})),
                    std::invalid_argument);
}
