#include <doctest.h>

#include "sunit/arith.hpp"
#include "sunit/errors.hpp"

using namespace sunit;

TEST_CASE("deterministic primality") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK(is_prime(Int(109)));
    CHECK(is_prime(Int("6436343") / 279841));  // 23
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(561)));        // Carmichael
    CHECK(!is_prime(Int("3215031751")));  // strong pseudoprime to 2,3,5,7
    // out of certified range
    CHECK_THROWS_AS(is_prime((Int(1) << 127) - 1), std::invalid_argument);
    // 2^89-1 is prime and within the witness range
    CHECK(is_prime((Int(1) << 89) - 1));
}

TEST_CASE("PrimeSet invariants") {
    PrimeSet S({Int(5), Int(2), Int(3)});
    CHECK(S.primes() == std::vector<Int>{2, 3, 5});
    CHECK(S.radical() == 30);
    CHECK(S.size() == 3);
    CHECK(S.contains_two());
    CHECK(S.index_of(Int(3)) == 1);
    CHECK(S.index_of(Int(7)) == PrimeSet::npos);
    CHECK_THROWS_AS(PrimeSet({Int(4)}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSet({Int(2), Int(2)}), std::invalid_argument);
    CHECK(PrimeSet().radical() == 1);
    CHECK(PrimeSet::first_n(6).radical() == 30030);
}

TEST_CASE("factor_smooth") {
    PrimeSet s23({Int(23)});
    auto e = factor_smooth(Int(6436343), s23);
    REQUIRE(e.has_value());
    CHECK((*e)[0] == 5);  // 23^5

    PrimeSet s25({Int(2), Int(5)});
    auto e2 = factor_smooth(Int(10), s25);
    REQUIRE(e2.has_value());
    CHECK((*e2)[0] == 1);
    CHECK((*e2)[1] == 1);

    PrimeSet s23b({Int(2), Int(3)});
    CHECK(!factor_smooth(Int(7), s23b).has_value());
    // negative input factors by absolute value
    auto e3 = factor_smooth(Int(-12), s23b);
    REQUIRE(e3.has_value());
    CHECK((*e3)[0] == 2);
    CHECK((*e3)[1] == 1);
}

TEST_CASE("factor_smooth recomposition on random inputs") {
    PrimeSet S({Int(2), Int(3), Int(5), Int(7)});
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(42);
    for (int i = 0; i < 500; ++i) {
        Int n = rng.get_z_range(Int(1) << 40) + 1;
        auto e = factor_smooth(n, S);
        if (e) CHECK(e->value(S) == n);
    }
    // constructed smooth numbers always factor
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            ExponentVector ev({a, b, 1, 0});
            Int n = ev.value(S);
            auto e = factor_smooth(n, S);
            REQUIRE(e.has_value());
            CHECK(e->entries() == ev.entries());
        }
}

TEST_CASE("weil_height") {
    CHECK(weil_height(Rat(0)).is_exact_zero());
    CHECK(weil_height(Rat(1)).is_exact_zero());
    GuardedReal h = weil_height(Rat(1, 2));
    CHECK(h.mid_double() == doctest::Approx(0.6931471805599453));
    GuardedReal h89 = weil_height(Rat(8, 9));
    CHECK(h89.mid_double() == doctest::Approx(2.1972245773362196));
    CHECK(h89.width_upper_double() < 1e-30);
}

TEST_CASE("floor_div_log examples") {
    CHECK(floor_div_log(Int(10), Int(2)) == 14);
    CHECK(floor_div_log(Int(0), Int(7)) == 0);
    CHECK(floor_div_log(Int(81), Int(3)) == 73);
    CHECK(floor_div_log(Int(1000000000), Int(2)) == 1442695040);
}

TEST_CASE("floor_div_log certified against interval recomputation") {
    for (long M : {1L, 2L, 7L, 100L, 12345L, 99999999L}) {
        for (long p : {2L, 3L, 5L, 13L, 101L}) {
            long f = floor_div_log(Int(M), Int(p));
            GuardedReal logp = GuardedReal::log_int(Int(p), 512);
            // f * log p <= M < (f+1) * log p
            CHECK(logp.mul_rat(Rat(f)).certainly_le(Int(M)));
            CHECK(logp.mul_rat(Rat(f + 1)).certainly_gt(Int(M)));
        }
    }
}

TEST_CASE("factorize with rho") {
    auto f = factorize(Int("6436341"));  // 3^10 * 109
    CHECK(f[Int(3)] == 10);
    CHECK(f[Int(109)] == 1);
    auto g = factorize(Int(2) * 3 * 5 * 7 * 11 * 13);
    CHECK(g.size() == 6);
    // a product of two 40-bit primes exercises the rho path
    Int p("1099511627791"), q("1099511627803");
    auto h = factorize(p * q);
    CHECK(h[p] == 1);
    CHECK(h[q] == 1);
}
