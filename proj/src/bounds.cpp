#include "sunit/bounds.hpp"

#include <cassert>
#include <stdexcept>

namespace sunit {

std::pair<GuardedReal, GuardedReal> simplified_bounds(const PrimeSet& S,
                                                      long prec) {
    if (S.empty())
        throw std::invalid_argument("simplified_bounds: S must be nonempty");
    const Int& N = S.radical();
    GuardedReal n = GuardedReal::from_int(N, prec);
    GuardedReal logn = GuardedReal::log_int(N, prec);
    GuardedReal a = n * logn * GuardedReal::from_rat(Rat(5, 2), prec) +
                    n * GuardedReal::from_long(9, prec);
    GuardedReal logloglog = GuardedReal::log_int(16 * N, prec).log().log();
    GuardedReal b = n * logn * GuardedReal::from_rat(Rat(12, 5), prec) +
                    n * logloglog * GuardedReal::from_rat(Rat(9, 10), prec) +
                    n * GuardedReal::from_rat(Rat(826, 100), prec) +
                    GuardedReal::from_long(28, prec);
    return {a, b};
}

Int genus_x0(const Int& N) {
    if (N < 1) throw std::invalid_argument("genus_x0: N must be positive");
    if (N == 1) return 0;
    auto fac = factorize(N);

    Int psi = N;
    for (const auto& [p, e] : fac) {
        (void)e;
        psi = psi / p * (p + 1);
    }

    Int nu2 = 1;
    if (N % 4 == 0) {
        nu2 = 0;
    } else {
        for (const auto& [p, e] : fac) {
            (void)e;
            if (p == 2) continue;           // factor 1
            else if (p % 4 == 1) nu2 *= 2;
            else nu2 = 0;
            if (nu2 == 0) break;
        }
    }

    Int nu3 = 1;
    if (N % 9 == 0) {
        nu3 = 0;
    } else {
        for (const auto& [p, e] : fac) {
            (void)e;
            if (p == 3) continue;           // factor 1
            else if (p % 3 == 1) nu3 *= 2;
            else nu3 = 0;
            if (nu3 == 0) break;
        }
    }

    // nu_inf = sum over d | N of phi(gcd(d, N/d)); multiplicative, so build
    // from the divisors of each prime power.
    Int nuinf = 1;
    for (const auto& [p, e] : fac) {
        Int s = 0;
        for (int a = 0; a <= e; ++a) {
            int g = std::min(a, e - a);
            // phi(p^g)
            if (g == 0) s += 1;
            else {
                Int pg;
                mpz_pow_ui(pg.get_mpz_t(), p.get_mpz_t(), g);
                s += pg - pg / p;
            }
        }
        nuinf *= s;
    }

    // g = 1 + psi/12 - nu2/4 - nu3/3 - nuinf/2, exact over Q
    Rat g = 1 + Rat(psi, 12) - Rat(nu2, 4) - Rat(nu3, 3) - Rat(nuinf, 2);
    g.canonicalize();
    if (g.get_den() != 1)
        throw std::logic_error("genus_x0: formula did not produce an integer");
    return Int(g.get_num());
}

AlphaBarInputs alpha_bar_inputs(const Int& N) {
    AlphaBarInputs in;
    in.N = N;
    auto fac = factorize(N);
    in.nu = 1;
    for (const auto& [p, e] : fac) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        if (e == 1) in.nu *= pe;
        else in.nu *= pe - pe / (p * p);
    }
    in.m_upper = (in.nu + 1) / 12;
    in.genus = genus_x0(N);
    Int lprod = N;
    for (const auto& [p, e] : fac) {
        (void)e;
        lprod *= p + 1;
    }
    in.l = lprod / 6;
    Int num = N, den = 6;
    for (const auto& [p, e] : fac) {
        (void)e;
        num *= p + 1;
        den *= p;
    }
    in.l_star = num / den;
    return in;
}

namespace {

// beta-bar = (1/2) m log m + (5/8) m (18 + log l)
GuardedReal beta_bar(const Int& m, const Int& l, long prec) {
    if (m == 0) return GuardedReal::exact_zero(prec);
    GuardedReal mm = GuardedReal::from_int(m, prec);
    GuardedReal t1 = m == 1 ? GuardedReal::exact_zero(prec)
                            : mm * GuardedReal::log_int(m, prec) *
                                  GuardedReal::from_rat(Rat(1, 2), prec);
    GuardedReal t2 = mm * (GuardedReal::from_long(18, prec) +
                           GuardedReal::log_int(l, prec)) *
                     GuardedReal::from_rat(Rat(5, 8), prec);
    return t1 + t2;
}

// beta*-bar = (1/2) g log(g l*) + (1/2) l* log(4 + 4 log l*)
GuardedReal beta_star_bar(const Int& g, const Int& lstar, long prec) {
    assert(g >= 1 && lstar >= 1);
    GuardedReal gg = GuardedReal::from_int(g, prec);
    GuardedReal t1 = gg * GuardedReal::log_int(g * lstar, prec) *
                     GuardedReal::from_rat(Rat(1, 2), prec);
    GuardedReal inner = GuardedReal::from_long(4, prec) +
                        GuardedReal::log_int(lstar, prec) *
                            GuardedReal::from_long(4, prec);
    GuardedReal t2 = GuardedReal::from_int(lstar, prec) * inner.log() *
                     GuardedReal::from_rat(Rat(1, 2), prec);
    return t1 + t2;
}

}  // namespace

GuardedReal alpha_bar(const Int& N, long prec) {
    AlphaBarInputs in = alpha_bar_inputs(N);
    GuardedReal b = beta_bar(in.m_upper, in.l, prec);
    if (in.genus == 0) return b;
    GuardedReal bs = beta_star_bar(in.genus, in.l_star, prec);
    // both are valid upper bounds; use whichever is certainly smaller, else b
    if (bs.certainly_lt(b)) return bs;
    return b;
}

HeightBoundReport initial_bound(const PrimeSet& S) {
    if (!S.contains_two())
        throw std::invalid_argument("initial_bound: 2 must lie in S");
    const long prec = GuardedReal::kDefaultPrec;
    HeightBoundReport rep{GuardedReal(prec), GuardedReal(prec), std::nullopt, 0};
    auto [a, b] = simplified_bounds(S, prec);
    rep.simplified_a = a;
    rep.simplified_b = b;
    GuardedReal opt = alpha_bar(16 * S.radical(), prec)
                          .mul_rat(Rat(6, 5))
                          .add_rat(Rat(28));
    rep.optimized = opt;
    // each bound is individually certified, so the minimum of the ceilings
    // of the upper endpoints is a certified M0
    Int m0 = a.ceil_upper();
    m0 = std::min(m0, b.ceil_upper());
    m0 = std::min(m0, opt.ceil_upper());
    if (m0 < 1) m0 = 1;
    assert(m0.fits_slong_p());
    rep.m0 = m0.get_si();
    return rep;
}

}  // namespace sunit
