#include "sunit/solver.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>

namespace sunit {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Immediate: return "immediate";
        case Stage::DewegerSieve: return "deweger-sieve";
        case Stage::RefinedSieve: return "refined-sieve";
        case Stage::Enumeration: return "refined-enumeration";
    }
    return "?";
}

std::map<std::string, size_t> SolutionSet::stage_histogram() const {
    std::map<std::string, size_t> h;
    for (Stage s : provenance) h[stage_name(s)] += 1;
    return h;
}

void CoverageLedger::check_complete() const {
    if (m0 < 1) throw std::logic_error("ledger: m0 not set");
    long top = m0;
    for (auto [lo, hi] : m_bands) {
        if (hi != top)
            throw std::logic_error("ledger: gap between M bands");
        if (lo >= hi) throw std::logic_error("ledger: empty M band recorded");
        top = lo;
    }
    if (top != frontier)
        throw std::logic_error("ledger: M bands do not reach the frontier");
    if (frontier == 0) return;  // no solution has M(x,y) = 0
    // mu tiling: box(b) + bands b+1 .. M+1 covers {M(x,y) <= frontier}
    if (mu_box < 0 || mu_band_high != frontier + 1 || mu_band_low != mu_box + 1)
        throw std::logic_error("ledger: mu tiling incomplete");
}

namespace {

using Clock = std::chrono::steady_clock;

BoundPair band_bounds(const PrimeSet& S, long Mlo, long Mhi, long prec_cap) {
    BoundPair b{ExponentVector(S.size(), 0), ExponentVector(S.size(), 0)};
    for (size_t i = 0; i < S.size(); ++i) {
        b.lo[i] = floor_div_log(Int(Mlo), S.prime(i), prec_cap);
        b.hi[i] = floor_div_log(Int(Mhi), S.prime(i), prec_cap);
    }
    return b;
}

MuVector mu_lo_vec(long n, size_t t) {
    std::vector<long> e(t);
    for (size_t j = 0; j < t; ++j) e[j] = (n - 1) / static_cast<long>(j + 1);
    return MuVector(std::move(e));
}

MuVector mu_hi_vec(long n, long M, size_t t) {
    if (n == M + 1) return MuVector(std::vector<long>(t, M));
    return mu_lo_vec(n + 1, t);
}

struct ClassStore {
    std::map<Rat, std::pair<SymmetryClass, Stage>> by_rep;

    void insert(std::vector<SymmetryClass>&& classes, Stage stage) {
        for (auto& c : classes) {
            Rat key = c.representative.x;
            by_rep.emplace(std::move(key),
                           std::make_pair(std::move(c), stage));
        }
    }
};

// M1 start from the expected sieve strength: (s-1)(log M0 + log(2 pi e)/2)
long informed_m1(size_t s, long m0) {
    GuardedReal r = (GuardedReal::log_int(Int(m0)) +
                     GuardedReal::from_rat(Rat(14189386, 10000000))) *
                    GuardedReal::from_long(static_cast<long>(s) - 1);
    Int c = r.ceil_upper();
    return c.fits_slong_p() ? c.get_si() : m0;
}

}  // namespace

SolutionSet solve_sunit(const PrimeSet& S, const SolverConfig& cfg,
                        CoverageLedger* ledger_out) {
    SolutionSet out;
    out.S = S;
    if (!S.contains_two()) return out;  // a + b = c cannot be all odd

    HeightBoundReport rep = initial_bound(S);
    out.m0 = rep.m0;

    if (S.size() == 1) {
        out.classes.push_back(
            canonical_class(SUnitSolution::from_triple(Int(1), Int(1), Int(2))));
        out.provenance.push_back(Stage::Immediate);
        return out;
    }

    CoverageLedger ledger;
    ledger.m0 = rep.m0;
    ClassStore store;
    const long m0 = rep.m0;
    const size_t t = mu_length(S);

    // (ii)(a) find M1 with an ellipsoid stage that returns only gamma = 0
    long M1 = 10;
    if (cfg.informed_start)
        M1 = std::max<long>(M1, informed_m1(S.size(), m0));
    M1 = std::min(M1, m0);
    while (M1 < m0) {
        BoundPair b = band_bounds(S, M1, m0, cfg.precision_cap);
        if (deweger_lattice_only_zero(S, b, cfg.threads)) break;
        M1 = std::min(m0, (13 * M1) / 10);
    }
    if (M1 < m0) ledger.m_bands.emplace_back(M1, m0);
    long frontier = (M1 < m0) ? M1 : m0;

    // (ii)(b) descend with full sieve bands until the FP output blows up
    long Mk = frontier;
    while (Mk > 0) {
        long Mn = (10 * Mk) / 13;
        BoundPair b = band_bounds(S, Mn, Mk, cfg.precision_cap);
        CandidateBudget budget(cfg.fp_cap);
        std::vector<SymmetryClass> found;
        try {
            found = deweger_sieve(S, b, nullptr, &budget, cfg.threads);
        } catch (const candidate_overflow_error&) {
            break;  // the refined stages take over from here
        }
        store.insert(std::move(found), Stage::DewegerSieve);
        ledger.m_bands.emplace_back(Mn, Mk);
        Mk = Mn;
    }
    frontier = Mk;
    ledger.frontier = frontier;

    // (iii) refined sieve from above, refined enumeration from below,
    // alternating by accumulated elapsed time
    if (frontier > 0) {
        const long M = frontier;
        long next_a = M + 1;  // next sieve band parameter
        long next_b = 1;      // next enumeration box parameter
        double time_a = 0, time_b = 0;
        EnumOptions eopts;
        eopts.threads = cfg.threads;
        eopts.hash_entry_budget = cfg.hash_entry_budget;
        while (next_a >= next_b) {
            bool run_a = time_a < time_b;  // ties go to the enumeration side
            auto t0 = Clock::now();
            if (run_a) {
                MuVector lo = mu_lo_vec(next_a, t);
                MuVector hi = mu_hi_vec(next_a, M, t);
                if (!(lo == hi)) {
                    auto found = refined_sieve(S, lo, hi, nullptr, nullptr,
                                               cfg.threads);
                    store.insert(std::move(found), Stage::RefinedSieve);
                }
                if (ledger.mu_band_high < 0) ledger.mu_band_high = next_a;
                ledger.mu_band_low = next_a;
                --next_a;
                time_a += std::chrono::duration<double>(Clock::now() - t0)
                              .count();
            } else {
                auto found =
                    refined_enumeration_mu(S, mu_lo_vec(next_b, t), eopts);
                store.insert(std::move(found), Stage::Enumeration);
                ledger.mu_box = next_b;
                ++next_b;
                time_b += std::chrono::duration<double>(Clock::now() - t0)
                              .count();
            }
        }
    }

    ledger.check_complete();

    // soundness: every class lies inside the certified box [0, m0]
    BoundPair top = band_bounds(S, 0, m0, cfg.precision_cap);
    for (auto& [key, cs] : store.by_rep) {
        ExponentVector m = cs.first.representative.m_vector(S);
        if (!m.all_leq(top.hi))
            throw std::logic_error("solver: class escapes the certified bound");
        out.classes.push_back(std::move(cs.first));
        out.provenance.push_back(cs.second);
    }
    if (ledger_out) *ledger_out = ledger;
    return out;
}

}  // namespace sunit
