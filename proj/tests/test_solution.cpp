#include <doctest.h>

#include <set>

#include "sunit/solution.hpp"

using namespace sunit;

TEST_CASE("solution construction") {
    SUnitSolution s = SUnitSolution::from_x(Rat(1, 9));
    CHECK(s.y == Rat(8, 9));
    CHECK(s.a == 1);
    CHECK(s.b == 8);
    CHECK(s.c == 9);
    SUnitSolution t = SUnitSolution::from_triple(Int(-1), Int(9), Int(8));
    CHECK(t.x == Rat(-1, 8));
    CHECK(t.y == Rat(9, 8));
    // sign normalization: c > 0
    SUnitSolution u = SUnitSolution::from_triple(Int(1), Int(-9), Int(-8));
    CHECK(u.c == 8);
    CHECK_THROWS_AS(SUnitSolution::from_triple(Int(2), Int(2), Int(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SUnitSolution::from_x(Rat(0)), std::invalid_argument);
}

TEST_CASE("symmetry orbit of the special class") {
    SUnitSolution s = SUnitSolution::from_x(Rat(2));
    auto orbit = symmetry_orbit(s);
    CHECK(orbit.size() == 3);
    std::set<Rat> xs;
    for (const auto& o : orbit) xs.insert(o.x);
    CHECK(xs == std::set<Rat>{Rat(2), Rat(-1), Rat(1, 2)});
}

TEST_CASE("symmetry orbit of generic classes") {
    auto orbit = symmetry_orbit(SUnitSolution::from_x(Rat(1, 3)));
    CHECK(orbit.size() == 6);
    std::set<Rat> xs;
    for (const auto& o : orbit) xs.insert(o.x);
    CHECK(xs == std::set<Rat>{Rat(1, 3), Rat(2, 3), Rat(3), Rat(3, 2),
                              Rat(-1, 2), Rat(-2)});

    auto orbit9 = symmetry_orbit(SUnitSolution::from_x(Rat(1, 9)));
    std::set<Rat> xs9;
    for (const auto& o : orbit9) xs9.insert(o.x);
    CHECK(xs9 == std::set<Rat>{Rat(1, 9), Rat(8, 9), Rat(9), Rat(9, 8),
                               Rat(-1, 8), Rat(-8)});
}

TEST_CASE("canonical representative has 0 < x <= 1/2") {
    CHECK(canonical_class(SUnitSolution::from_x(Rat(9))).representative.x ==
          Rat(1, 9));
    CHECK(canonical_class(SUnitSolution::from_x(Rat(1, 2))).representative.x ==
          Rat(1, 2));
    CHECK(canonical_class(SUnitSolution::from_x(Rat(-2))).representative.x ==
          Rat(1, 3));
    // every orbit element canonicalizes to the same representative
    for (const auto& o : symmetry_orbit(SUnitSolution::from_x(Rat(1, 9))))
        CHECK(canonical_class(o).representative.x == Rat(1, 9));
}

TEST_CASE("m_vector is a class invariant") {
    PrimeSet S({Int(2), Int(3)});
    auto cls = canonical_class(SUnitSolution::from_x(Rat(1, 9)));
    auto m0 = cls.representative.m_vector(S);
    for (const auto& o : cls.orbit) {
        auto m = o.m_vector(S);
        CHECK(m.entries() == m0.entries());
    }
    CHECK(m0.entries() == std::vector<long>{3, 2});  // abc = 72
}

TEST_CASE("is_sunit") {
    PrimeSet S({Int(2), Int(3)});
    CHECK(SUnitSolution::from_x(Rat(1, 9)).is_sunit(S));
    CHECK(!SUnitSolution::from_x(Rat(1, 5)).is_sunit(S));
}
