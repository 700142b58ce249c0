#include "sunit/solution.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sunit {

SUnitSolution SUnitSolution::from_x(const Rat& x) {
    if (x == 0 || x == 1)
        throw std::invalid_argument("SUnitSolution: x must avoid 0 and 1");
    SUnitSolution s;
    s.x = x;
    s.y = Rat(1) - x;
    s.y.canonicalize();
    // x and y share the denominator once gcd(a,b,c) = 1
    s.c = Int(s.x.get_den());
    s.a = Int(s.x.get_num());
    s.b = s.c - s.a;
    assert(Int(s.y.get_den()) == s.c && Int(s.y.get_num()) == s.b);
    return s;
}

SUnitSolution SUnitSolution::from_triple(const Int& a, const Int& b,
                                         const Int& c) {
    if (a == 0 || b == 0 || c == 0 || a + b != c)
        throw std::invalid_argument("SUnitSolution: need a + b = c, all nonzero");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("SUnitSolution: triple not coprime");
    SUnitSolution s;
    if (c > 0) {
        s.a = a; s.b = b; s.c = c;
    } else {
        s.a = -a; s.b = -b; s.c = -c;
    }
    s.x = Rat(s.a, s.c);
    s.x.canonicalize();
    s.y = Rat(s.b, s.c);
    s.y.canonicalize();
    return s;
}

bool SUnitSolution::is_sunit(const PrimeSet& S) const {
    return factor_smooth(a, S).has_value() &&
           factor_smooth(b, S).has_value() &&
           factor_smooth(c, S).has_value();
}

ExponentVector SUnitSolution::m_vector(const PrimeSet& S) const {
    auto e = factor_smooth(a * b * c, S);
    if (!e) throw std::invalid_argument("m_vector: solution is not S-smooth");
    return *e;
}

std::vector<SUnitSolution> symmetry_orbit(const SUnitSolution& sol) {
    const Rat& x = sol.x;
    Rat one(1);
    std::vector<Rat> xs = {x,
                           one - x,
                           one / x,
                           one / (one - x),
                           x / (x - one),
                           (x - one) / x};
    for (Rat& v : xs) v.canonicalize();
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<SUnitSolution> orbit;
    orbit.reserve(xs.size());
    for (const Rat& v : xs) orbit.push_back(SUnitSolution::from_x(v));
    assert(orbit.size() == 6 || orbit.size() == 3);
    return orbit;
}

SymmetryClass canonical_class(const SUnitSolution& sol) {
    SymmetryClass cls;
    cls.orbit = symmetry_orbit(sol);
    const Rat half(1, 2);
    bool found = false;
    for (const auto& s : cls.orbit) {
        if (s.x > 0 && s.x <= half) {
            cls.representative = s;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("canonical_class: no representative");
    return cls;
}

}  // namespace sunit
