#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunit/abc.hpp"
#include "sunit/errors.hpp"
#include "sunit/solver.hpp"

using json = nlohmann::ordered_json;
using namespace sunit;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitBadPrimes = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    size_t threads = 1;
    long long fp_cap = 1000;
    size_t mem_budget = size_t(1) << 28;  // bytes for the enumeration hash
    long precision_cap = GuardedReal::kMaxPrec;
    bool informed_start = false;
    bool timings = false;
};

SolverConfig make_config(const CommonOpts& o) {
    SolverConfig cfg;
    cfg.threads = o.threads;
    cfg.fp_cap = o.fp_cap;
    cfg.hash_entry_budget = std::max<size_t>(1, o.mem_budget / 32);
    cfg.precision_cap = o.precision_cap;
    cfg.informed_start = o.informed_start;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    const char* env_threads = std::getenv("SUNIT_THREADS");
    if (env_threads) o.threads = std::strtoul(env_threads, nullptr, 10);
    cmd->add_option("--threads", o.threads, "worker threads (env SUNIT_THREADS)");
    cmd->add_option("--fp-cap", o.fp_cap,
                    "candidate count per sieve band before switching stages");
    cmd->add_option("--mem-budget", o.mem_budget,
                    "memory budget in bytes for the enumeration hash set");
    cmd->add_option("--precision-cap", o.precision_cap,
                    "interval arithmetic precision cap in bits");
    cmd->add_flag("--informed-start", o.informed_start,
                  "start the first sieve band from the volume heuristic");
    cmd->add_flag("--timings", o.timings,
                  "include wall times in the output records (non-reproducible)");
}

std::vector<Int> parse_primes(const std::string& list) {
    std::vector<Int> ps;
    std::string cur;
    for (char ch : list + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("empty prime entry");
            ps.emplace_back(cur);
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw std::invalid_argument(std::string("bad character '") + ch +
                                        "' in prime list");
        }
    }
    return ps;
}

void emit(const json& rec) { std::cout << rec.dump() << "\n"; }

void emit_solution_set(const SolutionSet& sols, bool full, bool timings,
                       double wall_s, bool csv) {
    if (csv) {
        std::cout << sols.S.radical().get_str() << ","
                  << sols.classes.size() << "\n";
        return;
    }
    json rec;
    rec["type"] = "summary";
    rec["S"] = sols.S.str();
    rec["N_S"] = sols.S.radical().get_str();
    rec["m0"] = std::to_string(sols.m0);
    rec["classes"] = std::to_string(sols.classes.size());
    rec["solutions"] = std::to_string(sols.total_solutions());
    json stages = json::object();
    for (const auto& [name, count] : sols.stage_histogram())
        stages[name] = std::to_string(count);
    rec["stages"] = stages;
    if (timings) rec["wall_ms"] = std::to_string(long(wall_s * 1000));
    emit(rec);
    if (!full) return;
    for (size_t i = 0; i < sols.classes.size(); ++i) {
        const auto& cls = sols.classes[i];
        json c;
        c["type"] = "class";
        c["S"] = sols.S.str();
        c["x"] = cls.representative.x.get_str();
        c["y"] = cls.representative.y.get_str();
        c["a"] = cls.pa().get_str();
        c["b"] = cls.pb().get_str();
        c["c"] = cls.pc().get_str();
        c["orbit"] = std::to_string(cls.orbit.size());
        c["stage"] = stage_name(sols.provenance[i]);
        emit(c);
    }
}

json triple_record(const char* type, const ABCTriple& t) {
    json r;
    r["type"] = type;
    r["a"] = t.a.get_str();
    r["b"] = t.b.get_str();
    r["c"] = t.c.get_str();
    r["radical"] = t.radical.get_str();
    r["omega"] = std::to_string(t.omega);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", quality(t).mid_double());
    r["quality"] = buf;
    return r;
}

int run_solve(const std::vector<PrimeSet>& sets, const CommonOpts& opts,
              bool full, bool csv) {
    SolverConfig cfg = make_config(opts);
    for (const PrimeSet& S : sets) {
        auto t0 = std::chrono::steady_clock::now();
        SolutionSet sols = solve_sunit(S, cfg);
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        emit_solution_set(sols, full, opts.timings, wall, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-unit equation solver and abc-triple tools"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve x + y = 1 in S-units");
    std::string primes_arg;
    size_t first_n = 0;
    std::string radical_max_arg;
    bool full = false, csv = false;
    CommonOpts sopts;
    solve->add_option("--primes", primes_arg, "comma-separated primes, e.g. 2,3");
    solve->add_option("--first-n", first_n, "S = the first n primes");
    solve->add_option("--radical-max", radical_max_arg,
                      "solve every S with N_S <= this bound");
    solve->add_flag("--full", full, "emit one record per solution class");
    solve->add_flag("--csv", csv, "summary as CSV (n_or_NS,classes)");
    add_common(solve, sopts);

    // verify-abc
    auto* vabc = app.add_subcommand("verify-abc",
                                    "check Baker's explicit abc inequality");
    std::string vmax_arg;
    size_t top_k = 10;
    CommonOpts vopts;
    vabc->add_option("--radical-max", vmax_arg, "radical bound")->required();
    vabc->add_option("--top", top_k, "size of the quality ranking");
    add_common(vabc, vopts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitBadPrimes : 0;
    }

    try {
        if (solve->parsed()) {
            int mode_count = (!primes_arg.empty()) + (first_n > 0) +
                             (!radical_max_arg.empty());
            if (mode_count != 1) {
                std::cerr << "solve: pass exactly one of --primes, --first-n, "
                             "--radical-max\n";
                return kExitBadPrimes;
            }
            std::vector<PrimeSet> sets;
            if (!primes_arg.empty()) {
                sets.emplace_back(parse_primes(primes_arg));
            } else if (first_n > 0) {
                if (csv) {
                    // one row per n, matching the table layout
                    std::cout << "n,count\n";
                    SolverConfig cfg = make_config(sopts);
                    for (size_t n = 1; n <= first_n; ++n) {
                        SolutionSet sols =
                            solve_sunit(PrimeSet::first_n(n), cfg);
                        std::cout << n << "," << sols.classes.size() << "\n";
                    }
                    return 0;
                }
                sets.push_back(PrimeSet::first_n(first_n));
            } else {
                Int bound(radical_max_arg);
                for (const auto& s : support_sets_up_to(bound))
                    if (!s.empty()) sets.emplace_back(s);
            }
            return run_solve(sets, sopts, full, csv);
        }

        if (vabc->parsed()) {
            SolverConfig cfg = make_config(vopts);
            BakerReport rep = verify_baker(Int(vmax_arg), cfg, top_k);
            json sum;
            sum["type"] = "abc-summary";
            sum["radical_max"] = rep.radical_max.get_str();
            sum["sets_total"] = std::to_string(rep.sets_total);
            sum["sets_solved"] = std::to_string(rep.sets_solved);
            sum["triples"] = std::to_string(rep.triples);
            sum["violations"] = std::to_string(rep.violations.size());
            if (rep.excluded_triple_seen) sum["excluded"] = "(1,1,2)";
            emit(sum);
            for (const auto& t : rep.violations)
                emit(triple_record("abc-violation", t));
            for (size_t i = 0; i < rep.top.size(); ++i) {
                json r = triple_record("abc-top", rep.top[i]);
                r["rank"] = std::to_string(i + 1);
                emit(r);
            }
            return rep.violations.empty() ? 0 : kExitViolations;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadPrimes;
    } catch (const precision_exhausted_error& e) {
        std::cerr << "budget: " << e.what() << " (partial results above)\n";
        return kExitBudget;
    } catch (const factorization_budget_error& e) {
        std::cerr << "budget: " << e.what() << " (partial results above)\n";
        return kExitBudget;
    } catch (const candidate_overflow_error& e) {
        std::cerr << "budget: " << e.what() << " (partial results above)\n";
        return kExitBudget;
    }
    return 0;
}
