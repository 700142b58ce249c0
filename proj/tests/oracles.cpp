#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

namespace {

Int pow_int(const Int& p, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// all exponent vectors (ea, eb) with disjoint supports, ea, eb <= cap
void disjoint_pairs(const PrimeSet& S, const std::vector<long>& cap, size_t i,
                    std::vector<long>& ea, std::vector<long>& eb,
                    const std::function<void()>& out) {
    if (i == S.size()) {
        out();
        return;
    }
    for (long a = 0; a <= cap[i]; ++a)
        for (long b = 0; b <= cap[i]; ++b) {
            if (a != 0 && b != 0) continue;
            ea[i] = a;
            eb[i] = b;
            disjoint_pairs(S, cap, i + 1, ea, eb, out);
        }
    ea[i] = eb[i] = 0;
}

}  // namespace

std::vector<TripleExps> solutions_in_box(const PrimeSet& S,
                                         const std::vector<long>& cap) {
    std::set<Triple> seen;
    std::vector<TripleExps> out;
    std::vector<long> ea(S.size(), 0), eb(S.size(), 0);
    disjoint_pairs(S, cap, 0, ea, eb, [&] {
        Int a = 1, b = 1;
        for (size_t i = 0; i < S.size(); ++i) {
            if (ea[i]) a *= pow_int(S.prime(i), ea[i]);
            if (eb[i]) b *= pow_int(S.prime(i), eb[i]);
        }
        if (a > b) return;  // canonical a <= b
        Int c = a + b;
        std::vector<long> ec(S.size(), 0);
        Int m = c;
        for (size_t i = 0; i < S.size(); ++i) {
            while (mpz_divisible_p(m.get_mpz_t(), S.prime(i).get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(),
                             S.prime(i).get_mpz_t());
                ec[i] += 1;
            }
            if (ec[i] > cap[i]) return;
        }
        if (m != 1) return;
        Triple t{a, b, c};
        if (seen.insert(t).second) out.push_back(TripleExps{t, ea, eb, ec});
    });
    std::sort(out.begin(), out.end(),
              [](const TripleExps& x, const TripleExps& y) {
                  return x.t < y.t;
              });
    return out;
}

std::vector<long> m_of(const TripleExps& te) {
    std::vector<long> m(te.ea.size());
    for (size_t i = 0; i < m.size(); ++i)
        m[i] = std::max(te.ea[i], std::max(te.eb[i], te.ec[i]));
    return m;
}

std::vector<double> mu_of(const PrimeSet& S, const TripleExps& te, size_t t) {
    std::vector<double> out(t, 0.0);
    for (const std::vector<long>* e : {&te.ea, &te.eb, &te.ec}) {
        std::vector<double> vals;
        for (size_t i = 0; i < S.size(); ++i)
            vals.push_back((*e)[i] * std::log(S.prime(i).get_d()));
        std::sort(vals.rbegin(), vals.rend());
        for (size_t j = 0; j < t && j < vals.size(); ++j)
            out[j] = std::max(out[j], vals[j]);
    }
    return out;
}

bool mu_leq(const std::vector<double>& mu, const std::vector<long>& bound) {
    for (size_t j = 0; j < mu.size(); ++j) {
        double diff = mu[j] - double(bound[j]);
        if (std::abs(diff) < 1e-9 && mu[j] != 0.0)
            throw std::logic_error("oracle mu comparison too close to a tie");
        if (diff > 0) return false;
    }
    return true;
}

unsigned long subgroup_order(const std::vector<Int>& gens, const Int& n) {
    std::set<Int> group{Int(1) % n};
    std::vector<Int> frontier{Int(1) % n};
    while (!frontier.empty()) {
        std::vector<Int> next;
        for (const Int& x : frontier)
            for (const Int& g : gens) {
                Int y = (x * g) % n;
                if (group.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return group.size();
}

std::set<std::vector<Int>> ellipsoid_points_box(
    const std::vector<std::vector<Int>>& basis,
    const std::vector<std::vector<Int>>& Q, const Int& C, long box) {
    size_t d = basis.size();
    std::set<std::vector<Int>> out;
    if (d == 0) {
        if (C >= 0) out.insert({});
        return out;
    }
    size_t n = basis[0].size();

    // membership: solve x * basis = v over Q by Gaussian elimination and
    // check integrality (basis is square and invertible in the tests)
    auto member = [&](const std::vector<Int>& v) -> bool {
        std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d + 1));
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) A[j][i] = Rat(basis[i][j]);
            A[i][d] = Rat(v[i]);
        }
        for (size_t col = 0, row = 0; col < d && row < d; ++col) {
            size_t piv = row;
            while (piv < d && A[piv][col] == 0) ++piv;
            if (piv == d) return false;
            std::swap(A[piv], A[row]);
            for (size_t i = 0; i < d; ++i) {
                if (i == row || A[i][col] == 0) continue;
                Rat f = A[i][col] / A[row][col];
                for (size_t j = col; j <= d; ++j) A[i][j] -= f * A[row][j];
            }
            ++row;
        }
        for (size_t i = 0; i < d; ++i) {
            Rat x = A[i][d] / A[i][i];
            x.canonicalize();
            if (x.get_den() != 1) return false;
        }
        return true;
    };

    std::vector<Int> v(n, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            Rat val(0);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    val += Rat(v[r] * Q[r][c] * v[c]);
            if (val > Rat(C)) return;
            if (member(v)) out.insert(v);
            return;
        }
        for (long x = -box; x <= box; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
        v[i] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace oracle
