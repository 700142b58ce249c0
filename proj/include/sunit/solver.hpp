#pragma once

#include <map>
#include <string>
#include <vector>

#include "sunit/arith.hpp"
#include "sunit/bounds.hpp"
#include "sunit/enumeration.hpp"
#include "sunit/sieves.hpp"
#include "sunit/solution.hpp"

namespace sunit {

struct SolverConfig {
    size_t threads = 1;
    long long fp_cap = 1000;            // band switch threshold for (FP) output
    size_t hash_entry_budget = size_t(1) << 24;
    long precision_cap = GuardedReal::kMaxPrec;
    bool informed_start = false;        // try M1 from the volume heuristic first
};

// Which pipeline stage first found a class.
enum class Stage { Immediate, DewegerSieve, RefinedSieve, Enumeration };
const char* stage_name(Stage s);

struct SolutionSet {
    PrimeSet S;
    long m0 = 0;
    std::vector<SymmetryClass> classes;   // sorted by representative x
    std::vector<Stage> provenance;        // parallel to classes

    size_t total_solutions() const {
        return classes.empty() ? 0 : 6 * classes.size() - 3;
    }
    std::map<std::string, size_t> stage_histogram() const;
};

// Records which regions of the search space each stage covered and checks
// at the end that the union is exactly [0, m0].
struct CoverageLedger {
    long m0 = 0;
    std::vector<std::pair<long, long>> m_bands;  // (lo, hi], hi descending
    long mu_band_high = -1, mu_band_low = -1;    // refined sieve n range
    long mu_box = -1;                            // enumeration mu'(n') box
    long frontier = -1;                          // where the M bands stopped

    void check_complete() const;  // throws std::logic_error on a gap
};

// Solves the S-unit equation x + y = 1 completely.
SolutionSet solve_sunit(const PrimeSet& S, const SolverConfig& cfg = {},
                        CoverageLedger* ledger_out = nullptr);

}  // namespace sunit
