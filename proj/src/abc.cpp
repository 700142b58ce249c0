#include "sunit/abc.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "sunit/parallel.hpp"

namespace sunit {

ABCTriple to_abc(const SUnitSolution& sol) {
    SymmetryClass cls = canonical_class(sol);
    ABCTriple t;
    t.a = cls.pa();
    t.b = cls.pb();
    t.c = cls.pc();
    assert(t.a <= t.b && t.a + t.b == t.c);
    t.radical = 1;
    for (const auto& [p, e] : factorize(t.a * t.b * t.c)) {
        (void)e;
        t.radical *= p;
        t.omega += 1;
    }
    return t;
}

GuardedReal quality(const ABCTriple& t) {
    if (t.radical < 2)
        throw std::invalid_argument("quality: radical must be >= 2");
    if (t.c == t.radical)  // only (1,1,2): q = 1 exactly
        return GuardedReal::from_long(1);
    for (long prec = GuardedReal::kDefaultPrec; prec <= GuardedReal::kMaxPrec;
         prec *= 2) {
        GuardedReal q = GuardedReal::log_int(t.c, prec) /
                        GuardedReal::log_int(t.radical, prec);
        if (q.width_upper_double() <= 1e-6) return q;
    }
    throw precision_exhausted_error("quality: enclosure did not narrow");
}

BakerStatus baker_status(const ABCTriple& t) {
    if (t.is_one_one_two()) return BakerStatus::Excluded;
    // sign of (6/5) N (log N)^omega / omega! - c
    Rat factor(6 * t.radical, 5);
    for (int i = 2; i <= t.omega; ++i) factor /= i;
    factor.canonicalize();
    Sign s = certified_sign([&](long prec) {
        GuardedReal b = GuardedReal::log_int(t.radical, prec)
                            .pow_ui(static_cast<unsigned long>(t.omega))
                            .mul_rat(factor);
        return b - GuardedReal::from_int(t.c, prec);
    });
    return s == Sign::Negative ? BakerStatus::Violated : BakerStatus::Holds;
}

bool baker_check(const ABCTriple& t) {
    BakerStatus s = baker_status(t);
    if (s == BakerStatus::Excluded)
        throw std::invalid_argument("baker_check: (1,1,2) is excluded");
    return s == BakerStatus::Holds;
}

bool quality_less(const ABCTriple& lhs, const ABCTriple& rhs) {
    // q(lhs) < q(rhs)  <=>  log c_l * log N_r < log c_r * log N_l
    try {
        Sign s = certified_sign([&](long prec) {
            return GuardedReal::log_int(lhs.c, prec) *
                       GuardedReal::log_int(rhs.radical, prec) -
                   GuardedReal::log_int(rhs.c, prec) *
                       GuardedReal::log_int(lhs.radical, prec);
        });
        if (s == Sign::Negative) return true;
        if (s == Sign::Positive) return false;
    } catch (const precision_exhausted_error&) {
        // equal qualities as far as we can tell; fall through to tie-break
    }
    return rhs < lhs;
}

std::vector<std::vector<Int>> support_sets_up_to(const Int& bound) {
    std::vector<Int> primes;
    for (Int p = 2; p <= bound; p += 1)
        if (is_prime(p)) primes.push_back(p);
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, size_t i, const Int& prod) -> void {
        out.push_back(cur);
        for (size_t j = i; j < primes.size(); ++j) {
            if (prod * primes[j] > bound) break;
            cur.push_back(primes[j]);
            self(self, j + 1, prod * primes[j]);
            cur.pop_back();
        }
    };
    rec(rec, 0, Int(1));
    std::sort(out.begin(), out.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  Int pa = 1, pb = 1;
                  for (const Int& p : a) pa *= p;
                  for (const Int& p : b) pb *= p;
                  if (pa != pb) return pa < pb;
                  return a < b;
              });
    return out;
}

std::vector<std::vector<Int>> maximal_support_sets(const Int& bound) {
    auto all = support_sets_up_to(bound);
    std::vector<std::vector<Int>> out;
    for (const auto& s : all) {
        Int prod = 1;
        for (const Int& p : s) prod *= p;
        // maximal iff no absent prime fits under the bound
        bool maximal = true;
        Int q = 2;
        while (q * prod <= bound) {
            if (is_prime(q) &&
                !std::binary_search(s.begin(), s.end(), q)) {
                maximal = false;
                break;
            }
            q += 1;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

BakerReport verify_baker(const Int& radical_max, const SolverConfig& cfg,
                         size_t top_k) {
    if (radical_max < 2)
        throw std::invalid_argument("verify_baker: radical_max must be >= 2");
    BakerReport rep;
    rep.radical_max = radical_max;
    rep.sets_total = support_sets_up_to(radical_max).size();

    // only maximal sets containing 2 can contribute solutions
    std::vector<std::vector<Int>> work;
    for (auto& s : maximal_support_sets(radical_max))
        if (!s.empty() && s[0] == 2) work.push_back(std::move(s));
    rep.sets_solved = work.size();

    std::vector<std::vector<ABCTriple>> per_set(work.size());
    SolverConfig inner = cfg;
    inner.threads = 1;  // parallelism lives at the set level here
    parallel_tasks(work.size(), cfg.threads, [&](size_t i) {
        PrimeSet S(work[i]);
        SolutionSet sols = solve_sunit(S, inner);
        for (const auto& cls : sols.classes) {
            ABCTriple t = to_abc(cls.representative);
            if (t.radical <= radical_max) per_set[i].push_back(std::move(t));
        }
    });

    std::map<std::pair<Int, Int>, ABCTriple> uniq;
    for (auto& v : per_set)
        for (auto& t : v) uniq.emplace(std::make_pair(t.a, t.b), t);

    std::vector<ABCTriple> all;
    for (auto& [k, t] : uniq) {
        if (t.is_one_one_two()) {
            rep.excluded_triple_seen = true;
            continue;
        }
        all.push_back(t);
    }
    rep.triples = all.size() + (rep.excluded_triple_seen ? 1 : 0);

    for (const ABCTriple& t : all)
        if (baker_status(t) == BakerStatus::Violated)
            rep.violations.push_back(t);

    std::sort(all.begin(), all.end(),
              [](const ABCTriple& x, const ABCTriple& y) {
                  return quality_less(y, x);  // highest quality first
              });
    if (all.size() > top_k) all.resize(top_k);
    rep.top = std::move(all);
    return rep;
}

}  // namespace sunit
