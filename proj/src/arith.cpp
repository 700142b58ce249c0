#include "sunit/arith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace

bool is_prime(const Int& n) {
    // witness set valid for n < 3.317e24 (Sorenson-Webster)
    static const Int limit("3317044064679887385961980");
    if (n >= limit)
        throw std::invalid_argument(
            "is_prime: input too large for the deterministic witness set");
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    for (long a : small)
        if (miller_rabin_witness(n, Int(a), d, r)) return false;
    return true;
}

namespace {

// Pollard-Brent rho. Deterministic: cycles through c = 1, 2, ...
Int rho_factor(const Int& n, unsigned long budget) {
    assert(n > 1 && !is_prime(n));
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        Int saved_x;
        unsigned long steps = 0;
        unsigned long limit = 128;
        while (d == 1) {
            if (steps >= budget)
                throw factorization_budget_error(
                    "pollard rho budget exhausted for n = " + n.get_str());
            saved_x = x;
            Int prod(1);
            for (unsigned long i = 0; i < limit && d == 1; ++i) {
                x = (x * x + c) % n;
                prod = (prod * (x > y ? x - y : y - x)) % n;
                ++steps;
                if ((i & 127) == 127 || i + 1 == limit) {
                    mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
                    if (d != 1) break;
                }
            }
            if (d == 1) {
                y = x;
                limit *= 2;
            }
        }
        if (d != n) return d;
        // cycle collapsed; retry with the next polynomial
    }
}

void factor_into(const Int& n, std::map<Int, int>& out, unsigned long budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = rho_factor(n, budget);
    factor_into(d, out, budget);
    factor_into(n / d, out, budget);
}

}  // namespace

std::map<Int, int> factorize(const Int& n, unsigned long rho_budget) {
    assert(n != 0);
    Int m = abs(n);
    std::map<Int, int> out;
    // trial division on small primes first
    for (long p = 2; p < 100000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (Int(p) * p > m) break;
        while (m % p == 0) {
            out[Int(p)] += 1;
            m /= p;
        }
    }
    if (m > 1) factor_into(m, out, rho_budget);
    return out;
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    for (size_t i = 0; i < primes_.size(); ++i) {
        if (i > 0 && primes_[i] == primes_[i - 1])
            throw std::invalid_argument("PrimeSet: duplicate prime " +
                                        primes_[i].get_str());
        if (!is_prime(primes_[i]))
            throw std::invalid_argument("PrimeSet: " + primes_[i].get_str() +
                                        " is not prime");
    }
    radical_ = 1;
    for (const Int& p : primes_) radical_ *= p;
}

PrimeSet PrimeSet::first_n(size_t n) {
    std::vector<Int> ps;
    Int c = 2;
    while (ps.size() < n) {
        if (is_prime(c)) ps.push_back(c);
        c += 1;
    }
    return PrimeSet(std::move(ps));
}

bool PrimeSet::contains(const Int& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

size_t PrimeSet::index_of(const Int& p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return npos;
    return static_cast<size_t>(it - primes_.begin());
}

std::string PrimeSet::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < primes_.size(); ++i) {
        if (i) os << ',';
        os << primes_[i].get_str();
    }
    return os.str();
}

bool ExponentVector::all_leq(const ExponentVector& o) const {
    assert(size() == o.size());
    for (size_t i = 0; i < size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

bool ExponentVector::is_zero() const {
    for (long v : e_)
        if (v != 0) return false;
    return true;
}

Int ExponentVector::value(const PrimeSet& S) const {
    assert(size() == S.size());
    Int r = 1;
    for (size_t i = 0; i < size(); ++i) {
        assert(e_[i] >= 0);
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), S.prime(i).get_mpz_t(),
                   static_cast<unsigned long>(e_[i]));
        r *= pw;
    }
    return r;
}

std::optional<ExponentVector> factor_smooth(const Int& n, const PrimeSet& S) {
    assert(n != 0);
    Int m = abs(n);
    ExponentVector e(S.size(), 0);
    for (size_t i = 0; i < S.size() && m > 1; ++i) {
        const Int& p = S.prime(i);
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            e[i] += 1;
        }
    }
    if (m != 1) return std::nullopt;
    return e;
}

GuardedReal weil_height(const Rat& x, long prec) {
    Int num = abs(Int(x.get_num()));
    Int den(x.get_den());
    Int mx = std::max(num, den);
    if (mx <= 1) return GuardedReal::exact_zero(prec);
    return GuardedReal::log_int(mx, prec);
}

}  // namespace sunit
