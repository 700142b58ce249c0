#include "sunit/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_set>

#include "sunit/parallel.hpp"

namespace sunit {

namespace {

struct IntHash {
    size_t operator()(const Int& v) const {
        const mpz_srcptr z = v.get_mpz_t();
        size_t h = 1469598103934665603ull;
        int sz = z->_mp_size;
        h = (h ^ static_cast<size_t>(sz)) * 1099511628211ull;
        for (int i = 0; i < std::abs(sz); ++i)
            h = (h ^ static_cast<size_t>(mpz_getlimbn(z, i))) *
                1099511628211ull;
        return h;
    }
};

Int pow_int(const Int& p, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Support-restricted working set: primes of S with u_p >= 1.
struct Work {
    const PrimeSet* S = nullptr;
    std::vector<size_t> idx;     // indices into S
    std::vector<Int> primes;
    std::vector<long> u;
    std::vector<Int> weight;     // 1 + u_p
    Int W = 1;                   // total weight
    // optional mu cap table over the FULL S (cap[j][i])
    const std::vector<std::vector<long>>* mu_cap = nullptr;
};

Int subset_weight(const Work& w, unsigned mask) {
    Int r = 1;
    for (size_t i = 0; i < w.primes.size(); ++i)
        if (mask & (1u << i)) r *= w.weight[i];
    return r;
}

// generates all products over the masked primes with exponents in
// [min_exp, u_p], mu-pruned; calls out(value, exponents-over-work-set)
template <typename Out>
void gen_products(const Work& w, unsigned mask, long min_exp, Out&& out) {
    std::vector<size_t> sel;
    for (size_t i = 0; i < w.primes.size(); ++i)
        if (mask & (1u << i)) sel.push_back(i);
    size_t t = w.mu_cap ? w.mu_cap->size() : 0;
    std::vector<size_t> over(t, 0);  // count of primes with e > cap[j]
    std::vector<long> exps(sel.size(), 0);

    auto rec = [&](auto&& self, size_t k, const Int& val) -> void {
        if (k == sel.size()) {
            out(val, sel, exps);
            return;
        }
        size_t wi = sel[k];
        size_t si = w.idx[wi];
        Int v = val;
        long emax = w.u[wi];
        long e = min_exp;
        if (e > 0) v *= pow_int(w.primes[wi], e);
        for (; e <= emax; ++e) {
            // mu prune: track how many exponents exceed cap_j
            bool pruned = false;
            if (t) {
                for (size_t j = 0; j < t; ++j) {
                    if (e > (*w.mu_cap)[j][si]) {
                        ++over[j];
                        if (over[j] > j) pruned = true;
                    }
                }
            }
            if (!pruned) {
                exps[k] = e;
                self(self, k + 1, v);
            }
            if (t) {
                for (size_t j = 0; j < t; ++j)
                    if (e > (*w.mu_cap)[j][si]) --over[j];
            }
            if (pruned) break;  // larger e only gets worse
            v *= w.primes[wi];
        }
        exps[k] = 0;
    };
    rec(rec, 0, Int(1));
}

// Membership oracle for the X side: hash set or trial factorization.
struct XSide {
    bool hash_mode = true;
    std::unordered_set<Int, IntHash> set;
    const Work* w = nullptr;
    unsigned mask = 0;

    bool member(const Int& q) const {
        if (hash_mode) return set.count(q) != 0;
        Int m = q;
        for (size_t i = 0; i < w->primes.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            long e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), w->primes[i].get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(),
                             w->primes[i].get_mpz_t());
                if (++e > w->u[i]) return false;
            }
        }
        return m == 1;
    }
};

struct TaskResult {
    std::map<Rat, SymmetryClass> classes;
    bool fallback = false;
};

}  // namespace

static std::vector<SymmetryClass> enumerate_impl(
    const PrimeSet& S, const ExponentVector& u,
    const std::vector<std::vector<long>>* mu_cap, const EnumOptions& opts,
    EnumStats* stats) {
    assert(u.size() == S.size());
    Work w;
    w.S = &S;
    for (size_t i = 0; i < S.size(); ++i) {
        assert(u[i] >= 0);
        if (u[i] >= 1) {
            w.idx.push_back(i);
            w.primes.push_back(S.prime(i));
            w.u.push_back(u[i]);
            w.weight.push_back(Int(1 + u[i]));
            w.W *= 1 + u[i];
        }
    }
    w.mu_cap = mu_cap;
    size_t n = w.primes.size();
    assert(n < 31);

    // final exact acceptance of a candidate triple
    auto accept = [&](const Int& p, const Int& q, const Int& r) -> bool {
        for (const Int* v : {&p, &q, &r}) {
            auto e = factor_smooth(*v, S);
            if (!e) return false;
            for (size_t i = 0; i < S.size(); ++i)
                if ((*e)[i] > u[i]) return false;
            if (mu_cap && !mu_within(*e, *mu_cap)) return false;
        }
        return true;
    };

    // subsets S_a with w(S_a)^3 >= W
    std::vector<unsigned> tasks;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Int wa = subset_weight(w, mask);
        if (wa * wa * wa >= w.W) tasks.push_back(mask);
    }
    if (stats) stats->subsets = tasks.size();

    std::vector<TaskResult> results(tasks.size());
    parallel_tasks(tasks.size(), opts.threads, [&](size_t ti) {
        unsigned sa = tasks[ti];
        TaskResult& res = results[ti];

        // split S_a = S_a1 | S_a2 with w(S_a1)^2 <= W as tight as possible:
        // greedy by descending weight, then local improvement
        std::vector<size_t> members;
        for (size_t i = 0; i < n; ++i)
            if (sa & (1u << i)) members.push_back(i);
        std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
            if (w.weight[a] != w.weight[b]) return w.weight[a] > w.weight[b];
            return w.primes[a] < w.primes[b];
        });
        unsigned a1 = 0;
        Int wa1 = 1;
        for (size_t i : members) {
            Int cand = wa1 * w.weight[i];
            if (cand * cand <= w.W) {
                a1 |= 1u << i;
                wa1 = cand;
            }
        }
        bool improved = true;
        while (improved) {
            improved = false;
            for (size_t i : members) {
                if (!(a1 & (1u << i))) {
                    Int cand = wa1 * w.weight[i];
                    if (cand * cand <= w.W) {
                        a1 |= 1u << i;
                        wa1 = cand;
                        improved = true;
                    }
                }
            }
            for (size_t i : members) {
                if (!(a1 & (1u << i))) continue;
                for (size_t j : members) {
                    if (a1 & (1u << j)) continue;
                    if (w.weight[j] <= w.weight[i]) continue;
                    Int cand = wa1 / w.weight[i] * w.weight[j];
                    if (cand * cand <= w.W) {
                        a1 = (a1 & ~(1u << i)) | (1u << j);
                        wa1 = cand;
                        improved = true;
                        break;
                    }
                }
                if (improved) break;
            }
        }
        unsigned a2 = sa & ~a1;

        XSide X;
        X.w = &w;
        X.mask = a1;
        if (wa1 > Int(static_cast<unsigned long>(opts.hash_entry_budget))) {
            X.hash_mode = false;
            res.fallback = true;
        } else {
            gen_products(w, a1, 0,
                         [&](const Int& v, const std::vector<size_t>&,
                             const std::vector<long>&) { X.set.insert(v); });
        }

        unsigned rest = ((1u << n) - 1) & ~sa;
        // iterate pairs (S_b, S_c) with the weight/min-prime ordering
        for (unsigned mb = rest;; mb = (mb - 1) & rest) {
            unsigned mc = rest & ~mb;
            bool keep;
            Int wb = subset_weight(w, mb), wc = subset_weight(w, mc);
            if (wb != wc) {
                keep = wb < wc;
            } else if (mb == 0 && mc == 0) {
                keep = true;
            } else if (mb == 0 || mc == 0) {
                keep = false;  // equal weights with one side empty cannot occur
            } else {
                keep = (mb & -mb) < (mc & -mc);  // min prime = lowest set bit
            }
            if (keep) {
                std::vector<Int> bs, cs;
                gen_products(w, mb, 1,
                             [&](const Int& v, const std::vector<size_t>&,
                                 const std::vector<long>&) { bs.push_back(v); });
                gen_products(w, mc, 1,
                             [&](const Int& v, const std::vector<size_t>&,
                                 const std::vector<long>&) { cs.push_back(v); });
                for (const Int& b : bs) {
                    for (const Int& c : cs) {
                        for (int eps = 0; eps < 2; ++eps) {
                            Int target = eps == 0 ? b + c : b - c;
                            if (target == 0) continue;
                            Int tabs = abs(target);
                            // divisors of tabs supported on S_a2, capped by u
                            std::vector<size_t> dsel;
                            for (size_t i = 0; i < n; ++i)
                                if (a2 & (1u << i)) dsel.push_back(i);
                            std::vector<std::pair<Int, long>> stack;
                            auto rec = [&](auto&& self, size_t k,
                                           const Int& a2val) -> void {
                                if (k == dsel.size()) {
                                    Int q = tabs / a2val;
                                    if (!X.member(q)) return;
                                    Int A = q * a2val;
                                    Int p1, p2, p3;
                                    if (eps == 0) {
                                        p1 = b; p2 = c; p3 = A;
                                    } else if (b > c) {
                                        p1 = A; p2 = c; p3 = b;
                                    } else {
                                        p1 = A; p2 = b; p3 = c;
                                    }
                                    if (p1 + p2 != p3) return;
                                    if (!accept(p1, p2, p3)) return;
                                    SUnitSolution sol =
                                        SUnitSolution::from_triple(p1, p2, p3);
                                    SymmetryClass cls = canonical_class(sol);
                                    res.classes.emplace(cls.representative.x,
                                                        std::move(cls));
                                    return;
                                }
                                size_t wi = dsel[k];
                                Int m = tabs / a2val;
                                Int pv = 1;
                                long e = 0;
                                while (true) {
                                    self(self, k + 1, a2val * pv);
                                    if (e >= w.u[wi]) break;
                                    Int nxt = pv * w.primes[wi];
                                    if (!mpz_divisible_p(m.get_mpz_t(),
                                                         nxt.get_mpz_t()))
                                        break;
                                    pv = nxt;
                                    ++e;
                                }
                            };
                            rec(rec, 0, Int(1));
                        }
                    }
                }
            }
            if (mb == 0) break;
        }
    });

    std::map<Rat, SymmetryClass> classes;
    for (auto& r : results) {
        if (stats && r.fallback) stats->hash_fallback_used = true;
        for (auto& [k, v] : r.classes) classes.emplace(k, std::move(v));
    }
    std::vector<SymmetryClass> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

std::vector<SymmetryClass> refined_enumeration(const PrimeSet& S,
                                               const ExponentVector& u,
                                               const EnumOptions& opts,
                                               EnumStats* stats) {
    return enumerate_impl(S, u, nullptr, opts, stats);
}

std::vector<SymmetryClass> refined_enumeration_mu(const PrimeSet& S,
                                                  const MuVector& mu,
                                                  const EnumOptions& opts,
                                                  EnumStats* stats) {
    size_t t = mu_length(S);
    if (mu.size() != t)
        throw std::invalid_argument(
            "refined_enumeration_mu: mu must have length t");
    std::vector<std::vector<long>> cap(t, std::vector<long>(S.size()));
    for (size_t j = 0; j < t; ++j)
        for (size_t i = 0; i < S.size(); ++i)
            cap[j][i] = floor_div_log(Int(mu[j]), S.prime(i));
    ExponentVector u(S.size(), 0);
    for (size_t i = 0; i < S.size(); ++i) u[i] = cap[0][i];
    return enumerate_impl(S, u, &cap, opts, stats);
}

}  // namespace sunit
