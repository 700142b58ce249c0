#include "sunit/guarded.hpp"

#include <cassert>
#include <cstdio>
#include <utility>

namespace sunit {

void GuardedReal::init(long prec) {
    prec_ = prec;
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_nan(lo_);
    mpfr_set_nan(hi_);
}

GuardedReal::GuardedReal(long prec) { init(prec); }

GuardedReal::GuardedReal(const GuardedReal& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

GuardedReal::GuardedReal(GuardedReal&& o) noexcept {
    prec_ = o.prec_;
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave o in a destructible state
    mpfr_init2(o.lo_, 2);
    mpfr_init2(o.hi_, 2);
}

GuardedReal& GuardedReal::operator=(const GuardedReal& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

GuardedReal& GuardedReal::operator=(GuardedReal&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

GuardedReal::~GuardedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

GuardedReal GuardedReal::from_int(const Int& n, long prec) {
    GuardedReal r(prec);
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::from_long(long n, long prec) {
    GuardedReal r(prec);
    mpfr_set_si(r.lo_, n, MPFR_RNDD);
    mpfr_set_si(r.hi_, n, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::from_rat(const Rat& q, long prec) {
    GuardedReal r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::exact_zero(long prec) {
    GuardedReal r(prec);
    mpfr_set_zero(r.lo_, 0);
    mpfr_set_zero(r.hi_, 0);
    return r;
}

GuardedReal GuardedReal::log_int(const Int& n, long prec) {
    assert(n > 0);
    GuardedReal x = from_int(n, prec);
    return x.log();
}

GuardedReal GuardedReal::log() const {
    assert(mpfr_sgn(lo_) > 0);
    GuardedReal r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::operator+(const GuardedReal& o) const {
    GuardedReal r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::operator-(const GuardedReal& o) const {
    GuardedReal r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::operator-() const {
    GuardedReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::operator*(const GuardedReal& o) const {
    // general interval product: min/max over the four endpoint products
    GuardedReal r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower: min of products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper: max of products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

GuardedReal GuardedReal::operator/(const GuardedReal& o) const {
    assert(mpfr_sgn(o.lo_) > 0 || mpfr_sgn(o.hi_) < 0);
    GuardedReal r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

GuardedReal GuardedReal::add_rat(const Rat& q) const {
    return *this + from_rat(q, prec_);
}

GuardedReal GuardedReal::mul_rat(const Rat& q) const {
    return *this * from_rat(q, prec_);
}

GuardedReal GuardedReal::pow_ui(unsigned long e) const {
    GuardedReal r = from_long(1, prec_);
    GuardedReal base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool GuardedReal::certainly_lt(const Int& k) const {
    return mpfr_cmp_z(hi_, k.get_mpz_t()) < 0;
}

bool GuardedReal::certainly_le(const Int& k) const {
    return mpfr_cmp_z(hi_, k.get_mpz_t()) <= 0;
}

bool GuardedReal::certainly_gt(const Int& k) const {
    return mpfr_cmp_z(lo_, k.get_mpz_t()) > 0;
}

bool GuardedReal::certainly_lt(const GuardedReal& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool GuardedReal::is_exact_zero() const {
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool GuardedReal::contains(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

int GuardedReal::cmp_lower(const GuardedReal& o) const {
    return mpfr_cmp(lo_, o.lo_);
}

int GuardedReal::cmp_upper(const GuardedReal& o) const {
    return mpfr_cmp(hi_, o.hi_);
}

GuardedReal GuardedReal::interval_max(const GuardedReal& a,
                                      const GuardedReal& b) {
    GuardedReal r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

GuardedReal GuardedReal::join_endpoints(const GuardedReal& a,
                                        const GuardedReal& b) {
    GuardedReal r(std::max(a.prec_, b.prec_));
    mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Int GuardedReal::floor_lower() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

Int GuardedReal::floor_upper() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

Int GuardedReal::ceil_upper() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
    return z;
}

double GuardedReal::width_upper_double() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double GuardedReal::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, 64);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

std::string GuardedReal::str(size_t digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "[%.*Rg, %.*Rg]", (int)digits, lo_,
                  (int)digits, hi_);
    return buf;
}

Sign certified_sign(const std::function<GuardedReal(long)>& f, long start_prec,
                    long prec_cap) {
    for (long prec = start_prec; prec <= prec_cap; prec *= 2) {
        GuardedReal g = f(prec);
        if (g.is_exact_zero()) return Sign::Zero;
        if (g.certainly_lt(Int(0))) return Sign::Negative;
        if (g.certainly_gt(Int(0))) return Sign::Positive;
    }
    throw precision_exhausted_error("certified_sign: undecided at precision cap");
}

long floor_div_log(const Int& M, const Int& p, long prec_cap) {
    assert(M >= 0 && p >= 2);
    if (M == 0) return 0;
    for (long prec = GuardedReal::kDefaultPrec; prec <= prec_cap; prec *= 2) {
        GuardedReal q =
            GuardedReal::from_int(M, prec) / GuardedReal::log_int(p, prec);
        Int flo = q.floor_lower();
        Int fhi = q.floor_upper();
        if (flo == fhi) {
            assert(flo.fits_slong_p());
            return flo.get_si();
        }
    }
    throw precision_exhausted_error("floor_div_log: undecided at precision cap");
}

}  // namespace sunit
