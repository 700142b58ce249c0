#include "sunit/relations.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace sunit {

namespace {

Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int powmod_signed(const Int& b, const Int& e, const Int& m) {
    if (e >= 0) return powmod(b, e, m);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("powmod_signed: not invertible");
    return powmod(inv, -e, m);
}

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

// x with g^x = h in the cyclic group <g> of prime order ell (mod n).
Int bsgs(const Int& g, const Int& h, const Int& ell, const Int& n) {
    Int m;
    mpz_sqrt(m.get_mpz_t(), ell.get_mpz_t());
    m += 1;
    std::unordered_map<Int, Int, IntHash> baby;
    Int cur = 1;
    for (Int j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = (cur * g) % n;
    }
    Int gm_inv = powmod_signed(powmod(g, m, n), Int(-1), n);
    Int y = h % n;
    for (Int i = 0; i < m; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) {
            Int x = (i * m + it->second) % ell;
            return x;
        }
        y = (y * gm_inv) % n;
    }
    throw std::invalid_argument("bsgs: element not in the cyclic subgroup");
}

// Discrete log of h in the cyclic group <g> of order m (mod n), with the
// factorization of m supplied. Pohlig-Hellman with prime-power lifting.
Int dlog_cyclic(const Int& g, const Int& h, const Int& m,
                const std::map<Int, int>& m_factors, const Int& n) {
    if (m == 1) return Int(0);
    std::vector<Int> residues, moduli;
    for (const auto& [ell, k] : m_factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), ell.get_mpz_t(), k);
        Int g_i = powmod(g, m / pe, n);      // order ell^k
        Int h_i = powmod(h, m / pe, n);
        // digits of x mod ell^k
        Int x(0), pw(1);
        Int gamma = powmod(g_i, pe / ell, n);  // order ell
        for (int j = 0; j < k; ++j) {
            Int exp = pe / (pw * ell);
            Int target = powmod(powmod_signed(g_i, -x, n) * h_i % n, exp, n);
            Int d = bsgs(gamma, target, ell, n);
            x += d * pw;
            pw *= ell;
        }
        residues.push_back(x);
        moduli.push_back(pe);
    }
    // CRT
    Int x = residues[0], mod = moduli[0];
    for (size_t i = 1; i < residues.size(); ++i) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(),
                       moduli[i].get_mpz_t()) == 0)
            throw std::logic_error("dlog_cyclic: CRT moduli not coprime");
        Int t = ((residues[i] - x) * inv) % moduli[i];
        if (t < 0) t += moduli[i];
        x += mod * t;
        mod *= moduli[i];
    }
    return x;
}

// One cyclic component of (Z/nZ)^x under CRT.
struct Component {
    Int prime_power;   // q^e | n this component lives in
    Int generator;     // generates the component mod prime_power
    Int order;
    std::map<Int, int> order_factors;
    bool sign_component = false;  // the {+-1} part of (Z/2^e)^x, e >= 3
};

Int primitive_root_mod_q(const Int& q, const std::map<Int, int>& qm1_factors) {
    Int qm1 = q - 1;
    for (Int g = 2; g < q; g += 1) {
        bool ok = true;
        for (const auto& [ell, k] : qm1_factors) {
            (void)k;
            if (powmod(g, qm1 / ell, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for prime q
}

std::vector<Component> unit_group_components(const std::map<Int, int>& n_fac,
                                             unsigned long rho_budget) {
    std::vector<Component> comps;
    for (const auto& [q, e] : n_fac) {
        Int qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
        if (q == 2) {
            if (e == 1) continue;  // trivial group
            if (e == 2) {
                Component c;
                c.prime_power = qe;
                c.generator = 3;  // == -1 mod 4
                c.order = 2;
                c.order_factors = {{Int(2), 1}};
                c.sign_component = true;
                comps.push_back(c);
                continue;
            }
            // (Z/2^e)^x = {+-1} x <3>, ord(3) = 2^{e-2}
            Component sign;
            sign.prime_power = qe;
            sign.generator = qe - 1;
            sign.order = 2;
            sign.order_factors = {{Int(2), 1}};
            sign.sign_component = true;
            comps.push_back(sign);
            Component main;
            main.prime_power = qe;
            main.generator = 3;
            main.order = Int(1) << (e - 2);
            main.order_factors = {{Int(2), e - 2}};
            comps.push_back(main);
        } else {
            Component c;
            c.prime_power = qe;
            c.order_factors = factorize(q - 1, rho_budget);
            Int g = primitive_root_mod_q(q, c.order_factors);
            if (e >= 2) {
                // lift: g or g+q is a primitive root mod q^e
                Int q2 = q * q;
                if (powmod(g, q - 1, q2) == 1) g += q;
                c.order_factors[q] += e - 1;
            }
            c.generator = g;
            c.order = q - 1;
            for (int i = 1; i < e; ++i) c.order *= q;
            comps.push_back(c);
        }
    }
    return comps;
}

// dlog of x in one component (x given mod the full n, reduced here).
Int component_dlog(const Component& c, const Int& x_in) {
    Int x = x_in % c.prime_power;
    if (c.sign_component) {
        if (c.prime_power == 4) return Int(x % 4 == 3 ? 1 : 0);
        Int r = x % 8;
        return Int((r == 1 || r == 3) ? 0 : 1);
    }
    if (c.prime_power % 2 == 0) {
        // the <3> part of (Z/2^e)^x; flip sign if needed
        Int r = x % 8;
        Int y = (r == 1 || r == 3) ? x : (c.prime_power - x);
        return dlog_cyclic(c.generator, y, c.order, c.order_factors,
                           c.prime_power);
    }
    return dlog_cyclic(c.generator, x, c.order, c.order_factors,
                       c.prime_power);
}

}  // namespace

Int RelationLattice::subgroup_order() const {
    Int det = 1;
    for (size_t i = 0; i < dim; ++i) det *= basis[i][i];  // HNF is triangular
    return abs(det);
}

RelationLattice relation_basis(const std::vector<Int>& gens, const Int& n,
                               unsigned long rho_budget) {
    if (n < 2) throw std::invalid_argument("relation_basis: modulus must be >= 2");
    RelationLattice L;
    L.dim = gens.size();
    L.modulus = n;
    for (const Int& g : gens) {
        Int r = g % n;
        if (r < 0) r += n;
        Int d;
        mpz_gcd(d.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        if (d != 1)
            throw std::invalid_argument(
                "relation_basis: generator shares a factor with the modulus");
        L.generators.push_back(r);
    }
    size_t d = L.dim;
    if (d == 0) {
        L.basis = Mat{};
        return L;
    }

    auto n_fac = factorize(n, rho_budget);
    auto comps = unit_group_components(n_fac, rho_budget);
    size_t R = comps.size();

    // Gamma = { gamma : sum_i gamma_i * dlog(g_i) = 0 mod ord(component) }
    // = left kernel of [V | diag(orders)] projected to the first d coords.
    Mat A(d + R, std::vector<Int>(R, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < R; ++j)
            A[i][j] = component_dlog(comps[j], L.generators[i]);
    for (size_t j = 0; j < R; ++j) A[d + j][j] = comps[j].order;

    Mat K = kernel_basis(A);
    Mat proj;
    for (const auto& row : K)
        proj.emplace_back(row.begin(), row.begin() + d);
    Mat H = hnf(proj);
    // drop zero rows (kernel rank can exceed d by the R helper rows)
    Mat B;
    for (auto& row : H) {
        bool zero = true;
        for (const Int& v : row)
            if (v != 0) {
                zero = false;
                break;
            }
        if (!zero) B.push_back(row);
    }
    if (B.size() != d)
        throw std::logic_error("relation_basis: kernel projection not full rank");
    L.basis = std::move(B);

    // verify every basis row by modular exponentiation
    for (const auto& row : L.basis) {
        Int prod = 1;
        for (size_t i = 0; i < d; ++i) {
            if (row[i] == 0) continue;
            prod = (prod * powmod_signed(L.generators[i], row[i], n)) % n;
        }
        if (prod != 1)
            throw std::logic_error("relation_basis: basis row fails verification");
    }
    return L;
}

}  // namespace sunit
