#include "sunit/sieves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "sunit/parallel.hpp"

namespace sunit {

namespace {

// process-wide memoization of relation lattices per (modulus, generators)
std::shared_ptr<const RelationLattice> cached_relation_basis(
    const std::vector<Int>& gens, const Int& n) {
    using Key = std::pair<Int, std::vector<Int>>;
    static std::map<Key, std::shared_ptr<const RelationLattice>> cache;
    static std::mutex mu;
    Key key{n, gens};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto lat = std::make_shared<RelationLattice>(relation_basis(gens, n));
    std::lock_guard<std::mutex> lk(mu);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(lat));
    return it->second;
}

Int pow_int(const Int& p, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// floor(2^41 log p), certified
Int scaled_log_floor(const Int& p) {
    static const long kShift = 41;
    for (long prec = GuardedReal::kDefaultPrec; prec <= GuardedReal::kMaxPrec;
         prec *= 2) {
        GuardedReal v = GuardedReal::log_int(p, prec)
                            .mul_rat(Rat(Int(1) << kShift));
        Int flo = v.floor_lower(), fhi = v.floor_upper();
        if (flo == fhi) return flo;
    }
    throw precision_exhausted_error("scaled_log_floor undecided");
}

struct ShrunkSet {
    PrimeSet S;                  // primes with hi_p >= 1
    std::vector<long> lo, hi;    // restricted bounds
};

ShrunkSet shrink(const PrimeSet& S, const BoundPair& b) {
    ShrunkSet r;
    std::vector<Int> ps;
    for (size_t i = 0; i < S.size(); ++i) {
        assert(b.lo[i] >= 0 && b.lo[i] <= b.hi[i]);
        if (b.hi[i] >= 1) {
            ps.push_back(S.prime(i));
            r.lo.push_back(b.lo[i]);
            r.hi.push_back(b.hi[i]);
        }
    }
    r.S = PrimeSet(std::move(ps));
    return r;
}

// gamma over `rest` -> the two candidate triples a + b = c
struct Reconstruction {
    Int a, b_plus;
};

Reconstruction build_ab(const std::vector<Int>& gamma,
                        const std::vector<Int>& rest) {
    Reconstruction r{1, 1};
    for (size_t i = 0; i < rest.size(); ++i) {
        if (gamma[i] > 0)
            r.a *= pow_int(rest[i], gamma[i].get_si());
        else if (gamma[i] < 0)
            r.b_plus *= pow_int(rest[i], (-gamma[i]).get_si());
    }
    return r;
}

void insert_class(std::map<Rat, SymmetryClass>& classes,
                  const SUnitSolution& sol) {
    SymmetryClass cls = canonical_class(sol);
    Rat key = cls.representative.x;
    classes.emplace(std::move(key), std::move(cls));
}

}  // namespace

MuVector::MuVector(std::vector<long> entries) : e_(std::move(entries)) {
    for (size_t j = 0; j < e_.size(); ++j) {
        if (e_[j] < 0)
            throw std::invalid_argument("MuVector: entries must be >= 0");
        if (j > 0 && e_[j] > e_[j - 1])
            throw std::invalid_argument("MuVector: entries must be nonincreasing");
    }
}

bool MuVector::all_leq(const MuVector& o) const {
    assert(size() == o.size());
    for (size_t j = 0; j < size(); ++j)
        if (e_[j] > o.e_[j]) return false;
    return true;
}

size_t mu_length(const PrimeSet& S) {
    return std::max<size_t>(1, S.size() / 3);
}

std::vector<GuardedReal> mu_of_solution(const SUnitSolution& sol,
                                        const PrimeSet& S, size_t t,
                                        long prec) {
    std::vector<GuardedReal> out(t, GuardedReal::exact_zero(prec));
    for (const Int* n : {&sol.a, &sol.b, &sol.c}) {
        auto e = factor_smooth(*n, S);
        if (!e)
            throw std::invalid_argument("mu_of_solution: not S-smooth");
        std::vector<GuardedReal> vals;
        for (size_t i = 0; i < S.size(); ++i) {
            if ((*e)[i] == 0)
                vals.push_back(GuardedReal::exact_zero(prec));
            else
                vals.push_back(GuardedReal::log_int(S.prime(i), prec)
                                   .mul_rat(Rat((*e)[i])));
        }
        // order statistics are monotone in each input, so the enclosure of
        // the j-th largest is [j-th largest of lowers, j-th largest of uppers]
        std::vector<GuardedReal> by_lo = vals, by_hi = vals;
        std::sort(by_lo.begin(), by_lo.end(),
                  [](const GuardedReal& a, const GuardedReal& b) {
                      return a.cmp_lower(b) > 0;
                  });
        std::sort(by_hi.begin(), by_hi.end(),
                  [](const GuardedReal& a, const GuardedReal& b) {
                      return a.cmp_upper(b) > 0;
                  });
        for (size_t j = 0; j < t && j < vals.size(); ++j) {
            GuardedReal enc = GuardedReal::join_endpoints(by_lo[j], by_hi[j]);
            out[j] = GuardedReal::interval_max(out[j], enc);
        }
    }
    return out;
}

bool mu_within(const ExponentVector& e,
               const std::vector<std::vector<long>>& cap) {
    for (size_t j = 0; j < cap.size(); ++j) {
        size_t count = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > cap[j][i]) ++count;
        if (count > j) return false;  // more than j values exceed bound_j
    }
    return true;
}

namespace {

struct DwTask {
    size_t q_index;
};

// The lattice + ellipsoid of de Weger's sieve for one q. Returns the
// enumerated candidates.
std::vector<std::vector<Int>> dw_candidates(const ShrunkSet& sh, size_t qi,
                                            size_t cap,
                                            CandidateBudget* budget) {
    const Int& q = sh.S.prime(qi);
    Int n = pow_int(q, sh.lo[qi] + 1);
    std::vector<Int> rest;
    std::vector<long> rest_u;
    for (size_t i = 0; i < sh.S.size(); ++i) {
        if (i == qi) continue;
        rest.push_back(sh.S.prime(i));
        rest_u.push_back(sh.hi[i]);
    }
    std::vector<Int> gens;
    for (const Int& p : rest) gens.push_back((p * p) % n);
    auto lat = cached_relation_basis(gens, n);

    size_t d = rest.size();
    Int U = 1;
    for (long u : rest_u) {
        Int ui(u);
        mpz_lcm(U.get_mpz_t(), U.get_mpz_t(), ui.get_mpz_t());
    }
    Mat gram(d, std::vector<Int>(d, 0));
    for (size_t i = 0; i < d; ++i) {
        Int w = U / Int(rest_u[i]);
        gram[i][i] = w * w;
    }
    Int C = Int(sh.S.size() - 1) * U * U;
    IntegerLattice L{d, lat->basis};
    return enumerate_ellipsoid(L, IntegerEllipsoid{gram, C}, cap, budget);
}

}  // namespace

std::vector<SymmetryClass> deweger_sieve(const PrimeSet& S,
                                         const BoundPair& bounds,
                                         SieveStats* stats,
                                         CandidateBudget* budget,
                                         size_t threads) {
    std::map<Rat, SymmetryClass> classes;
    // l = u makes the band predicate unsatisfiable
    if (bounds.lo.entries() == bounds.hi.entries()) return {};
    ShrunkSet sh = shrink(S, bounds);
    if (!sh.S.contains_two()) return {};

    size_t nq = sh.S.size();
    std::vector<std::map<Rat, SymmetryClass>> per_q(nq);
    std::vector<size_t> counts(nq, 0);
    parallel_tasks(nq, threads, [&](size_t qi) {
        auto pts = dw_candidates(sh, qi, size_t(-1), budget);
        counts[qi] = pts.size();
        const Int& q = sh.S.prime(qi);
        std::vector<Int> rest;
        std::vector<long> rest_u;
        for (size_t i = 0; i < nq; ++i) {
            if (i == qi) continue;
            rest.push_back(sh.S.prime(i));
            rest_u.push_back(sh.hi[i]);
        }
        for (const auto& gamma : pts) {
            bool in_cube = true;
            for (size_t i = 0; i < rest.size(); ++i)
                if (abs(gamma[i]) > rest_u[i]) {
                    in_cube = false;
                    break;
                }
            if (!in_cube) continue;
            Reconstruction rc = build_ab(gamma, rest);
            for (int sgn = 0; sgn < 2; ++sgn) {
                Int b = sgn == 0 ? rc.b_plus : -rc.b_plus;
                Int c = rc.a + b;
                if (c == 0) continue;
                auto e = factor_smooth(c, sh.S);
                if (!e) continue;
                bool ok = true;
                for (size_t i = 0; i < nq; ++i)
                    if ((*e)[i] > sh.hi[i]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if ((*e)[qi] < sh.lo[qi] + 1) continue;
                insert_class(per_q[qi], SUnitSolution::from_triple(rc.a, b, c));
            }
        }
    });
    for (size_t qi = 0; qi < nq; ++qi) {
        if (stats) stats->fp_candidates += counts[qi];
        for (auto& [k, v] : per_q[qi]) classes.emplace(k, std::move(v));
    }
    if (stats) stats->lattice_tasks += nq;
    std::vector<SymmetryClass> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

bool deweger_lattice_only_zero(const PrimeSet& S, const BoundPair& bounds,
                               size_t threads) {
    ShrunkSet sh = shrink(S, bounds);
    if (!sh.S.contains_two()) return true;
    size_t nq = sh.S.size();
    std::vector<char> clean(nq, 0);
    parallel_tasks(nq, threads, [&](size_t qi) {
        std::vector<std::vector<Int>> pts;
        try {
            pts = dw_candidates(sh, qi, 3, nullptr);
        } catch (const candidate_overflow_error&) {
            clean[qi] = 0;
            return;
        }
        for (const auto& g : pts)
            for (const Int& v : g)
                if (v != 0) {
                    clean[qi] = 0;
                    return;
                }
        clean[qi] = 1;
    });
    for (char c : clean)
        if (!c) return false;
    return true;
}

Int refined_radius(const MuVector& mu_hi, size_t rest_size) {
    size_t t = mu_hi.size();
    Int R = 0;
    for (size_t i = 1; i <= rest_size; ++i) {
        size_t iota = std::min((i + 1) / 2, t);
        Int v(mu_hi[iota - 1]);
        R += v * v;
    }
    return R;
}

std::vector<SymmetryClass> refined_sieve(const PrimeSet& S,
                                         const MuVector& mu_lo,
                                         const MuVector& mu_hi,
                                         SieveStats* stats,
                                         CandidateBudget* budget,
                                         size_t threads) {
    size_t t = mu_length(S);
    if (mu_lo.size() != t || mu_hi.size() != t)
        throw std::invalid_argument("refined_sieve: mu vectors must have length t");
    if (!mu_lo.all_leq(mu_hi))
        throw std::invalid_argument("refined_sieve: need mu_lo <= mu_hi");
    if (mu_lo == mu_hi) return {};
    if (!S.contains_two()) return {};

    size_t s = S.size();
    // cap tables: cap[j][i] = floor(mu_j / log p_i)
    std::vector<std::vector<long>> cap_lo(t, std::vector<long>(s)),
        cap_hi(t, std::vector<long>(s));
    for (size_t j = 0; j < t; ++j)
        for (size_t i = 0; i < s; ++i) {
            cap_lo[j][i] = floor_div_log(Int(mu_lo[j]), S.prime(i));
            cap_hi[j][i] = floor_div_log(Int(mu_hi[j]), S.prime(i));
        }
    std::vector<Int> lambda(s);
    for (size_t i = 0; i < s; ++i) lambda[i] = scaled_log_floor(S.prime(i));

    // all nonempty T with |T| <= t, ordered by (|T|, mask)
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << s); ++m)
        if (static_cast<size_t>(__builtin_popcount(m)) <= t) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    auto mu_band_check = [&](const std::vector<ExponentVector>& evs) {
        for (const auto& e : evs)
            if (!mu_within(e, cap_hi)) return false;
        // mu(x,y) not<= mu_lo
        for (size_t j = 0; j < t; ++j) {
            for (const auto& e : evs) {
                size_t count = 0;
                for (size_t i = 0; i < s; ++i)
                    if (e[i] > cap_lo[j][i]) ++count;
                if (count > j) return true;
            }
        }
        return false;
    };

    std::vector<std::map<Rat, SymmetryClass>> per_task(masks.size());
    std::vector<size_t> counts(masks.size(), 0);
    parallel_tasks(masks.size(), threads, [&](size_t ti) {
        unsigned mask = masks[ti];
        size_t tsize = __builtin_popcount(mask);
        Int n = 1;
        for (size_t i = 0; i < s; ++i)
            if (mask & (1u << i))
                n *= pow_int(S.prime(i), cap_lo[tsize - 1][i] + 1);
        std::vector<Int> rest;
        std::vector<size_t> rest_idx;
        for (size_t i = 0; i < s; ++i)
            if (!(mask & (1u << i))) {
                rest.push_back(S.prime(i));
                rest_idx.push_back(i);
            }
        std::vector<Int> gens;
        for (const Int& p : rest) gens.push_back((p * p) % n);
        auto lat = cached_relation_basis(gens, n);

        size_t d = rest.size();
        Mat gram(d, std::vector<Int>(d, 0));
        for (size_t i = 0; i < d; ++i)
            gram[i][i] = lambda[rest_idx[i]] * lambda[rest_idx[i]];
        Int C = refined_radius(mu_hi, d) << 82;
        IntegerLattice L{d, lat->basis};
        auto pts = enumerate_ellipsoid(L, IntegerEllipsoid{gram, C},
                                       size_t(-1), budget);
        counts[ti] = pts.size();

        for (const auto& gamma : pts) {
            Reconstruction rc = build_ab(gamma, rest);
            // exponent vectors of a and b over the full S
            ExponentVector ea(s, 0), eb(s, 0);
            for (size_t i = 0; i < d; ++i) {
                if (gamma[i] > 0) ea[rest_idx[i]] = gamma[i].get_si();
                if (gamma[i] < 0) eb[rest_idx[i]] = (-gamma[i]).get_si();
            }
            for (int sgn = 0; sgn < 2; ++sgn) {
                Int b = sgn == 0 ? rc.b_plus : -rc.b_plus;
                Int c = rc.a + b;
                if (c == 0) continue;
                auto ec = factor_smooth(c, S);
                if (!ec) continue;
                if (!mu_band_check({ea, eb, *ec})) continue;
                insert_class(per_task[ti],
                             SUnitSolution::from_triple(rc.a, b, c));
            }
        }
    });

    std::map<Rat, SymmetryClass> classes;
    for (size_t ti = 0; ti < masks.size(); ++ti) {
        if (stats) stats->fp_candidates += counts[ti];
        for (auto& [k, v] : per_task[ti]) classes.emplace(k, std::move(v));
    }
    if (stats) stats->lattice_tasks += masks.size();
    std::vector<SymmetryClass> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

}  // namespace sunit
