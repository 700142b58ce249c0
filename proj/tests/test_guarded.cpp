#include <doctest.h>

#include <cmath>

#include "sunit/errors.hpp"
#include "sunit/guarded.hpp"

using namespace sunit;

TEST_CASE("interval construction and width") {
    GuardedReal z = GuardedReal::exact_zero();
    CHECK(z.is_exact_zero());
    GuardedReal one = GuardedReal::from_long(1);
    CHECK(one.contains(Rat(1)));
    GuardedReal third = GuardedReal::from_rat(Rat(1, 3));
    CHECK(third.contains(Rat(1, 3)));
    CHECK(third.width_upper_double() < 1e-35);
    // width invariant at construction: <= 2^(1-prec) * max(1, |upper|)
    GuardedReal big = GuardedReal::from_rat(Rat(Int("123456789123456789"), 7));
    CHECK(big.width_upper_double() <=
          std::ldexp(big.mid_double() + 1, 1 - 128));
}

TEST_CASE("outward rounding contains true values of composed expressions") {
    // compare against higher-precision evaluation of the same expression
    auto expr = [](long prec) {
        GuardedReal a = GuardedReal::log_int(Int(7), prec);
        GuardedReal b = GuardedReal::log_int(Int(3), prec);
        return a * b - a / b + a.mul_rat(Rat(22, 7));
    };
    GuardedReal coarse = expr(128);
    GuardedReal fine = expr(1024);
    // fine interval nested in coarse
    CHECK(coarse.cmp_lower(fine) <= 0);
    CHECK(fine.cmp_upper(coarse) <= 0);
}

TEST_CASE("log enclosures on random integers vs long double") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(7);
    for (int i = 0; i < 200; ++i) {
        Int n = rng.get_z_range(Int(1) << 62) + 2;
        GuardedReal g = GuardedReal::log_int(n);
        long double ref = logl(n.get_d());
        CHECK(std::abs((double)(g.mid_double() - ref)) < 1e-12);
    }
}

TEST_CASE("certified_sign resolves and reports exact zero") {
    Sign s = certified_sign([](long prec) {
        return GuardedReal::log_int(Int(3), prec) -
               GuardedReal::log_int(Int(2), prec);
    });
    CHECK(s == Sign::Positive);
    Sign z = certified_sign(
        [](long prec) { return GuardedReal::exact_zero(prec); });
    CHECK(z == Sign::Zero);
    // log 8 / log 2 = 3 exactly: the difference straddles zero forever
    CHECK_THROWS_AS(certified_sign([](long prec) {
                        return GuardedReal::log_int(Int(8), prec) -
                               GuardedReal::log_int(Int(2), prec).mul_rat(
                                   Rat(3));
                    }),
                    precision_exhausted_error);
}

TEST_CASE("interval max and endpoint join") {
    GuardedReal a = GuardedReal::log_int(Int(2));  // ~0.693
    GuardedReal b = GuardedReal::log_int(Int(3));  // ~1.098
    GuardedReal m = GuardedReal::interval_max(a, b);
    CHECK(m.mid_double() == doctest::Approx(std::log(3.0)));
    GuardedReal j = GuardedReal::join_endpoints(a, b);
    CHECK(j.contains(Rat(1)));  // [log2, log3] contains 1
}

TEST_CASE("pow_ui") {
    GuardedReal l = GuardedReal::log_int(Int(15042));
    GuardedReal p4 = l.pow_ui(4);
    double r = std::pow(std::log(15042.0), 4);
    CHECK(p4.mid_double() == doctest::Approx(r).epsilon(1e-12));
    CHECK(l.pow_ui(0).contains(Rat(1)));
}
