#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <string>

#include "sunit/errors.hpp"

namespace sunit {

using Int = mpz_class;
using Rat = mpq_class;

// An interval [lower, upper] of dyadic rationals enclosing a real number.
// Every operation rounds the lower endpoint down and the upper endpoint up,
// so the true value of a composed expression always lies in the result.
// Comparisons against exact numbers are only reported when certain.
class GuardedReal {
  public:
    static constexpr long kDefaultPrec = 128;
    static constexpr long kMaxPrec = 4096;

    explicit GuardedReal(long prec = kDefaultPrec);
    GuardedReal(const GuardedReal& o);
    GuardedReal(GuardedReal&& o) noexcept;
    GuardedReal& operator=(const GuardedReal& o);
    GuardedReal& operator=(GuardedReal&& o) noexcept;
    ~GuardedReal();

    static GuardedReal from_int(const Int& n, long prec = kDefaultPrec);
    static GuardedReal from_long(long n, long prec = kDefaultPrec);
    static GuardedReal from_rat(const Rat& q, long prec = kDefaultPrec);
    static GuardedReal exact_zero(long prec = kDefaultPrec);

    // log of an exact positive integer or of an enclosure with lower > 0.
    static GuardedReal log_int(const Int& n, long prec = kDefaultPrec);
    GuardedReal log() const;

    GuardedReal operator+(const GuardedReal& o) const;
    GuardedReal operator-(const GuardedReal& o) const;
    GuardedReal operator*(const GuardedReal& o) const;
    GuardedReal operator/(const GuardedReal& o) const;  // o must not straddle 0
    GuardedReal operator-() const;

    GuardedReal add_rat(const Rat& q) const;
    GuardedReal mul_rat(const Rat& q) const;
    GuardedReal pow_ui(unsigned long e) const;

    long precision() const { return prec_; }

    // Certain comparisons; "maybe" answers are reported as false.
    bool certainly_lt(const Int& k) const;   // upper <  k
    bool certainly_le(const Int& k) const;   // upper <= k
    bool certainly_gt(const Int& k) const;   // lower >  k
    bool certainly_lt(const GuardedReal& o) const;  // upper < o.lower
    bool is_exact_zero() const;
    bool contains(const Rat& q) const;

    // exact endpoint comparisons (for order statistics on enclosures)
    int cmp_lower(const GuardedReal& o) const;
    int cmp_upper(const GuardedReal& o) const;
    // [max(lo), max(hi)] — encloses max of the two enclosed reals
    static GuardedReal interval_max(const GuardedReal& a, const GuardedReal& b);
    // [a.lo, b.hi]
    static GuardedReal join_endpoints(const GuardedReal& a, const GuardedReal& b);

    Int floor_lower() const;
    Int floor_upper() const;
    Int ceil_upper() const;

    // Width as an upper bound in double precision (for diagnostics/tests).
    double width_upper_double() const;
    double mid_double() const;

    std::string str(size_t digits = 20) const;

  private:
    mpfr_t lo_, hi_;
    long prec_;

    void init(long prec);
};

enum class Sign { Negative, Zero, Positive };

// Evaluates `f` at doubling precision until the sign of the enclosed value
// is certain. `f(prec)` must enclose the same real number at any precision.
Sign certified_sign(const std::function<GuardedReal(long)>& f,
                    long start_prec = GuardedReal::kDefaultPrec,
                    long prec_cap = GuardedReal::kMaxPrec);

// floor(M / log p), certified. p >= 2, M >= 0.
long floor_div_log(const Int& M, const Int& p,
                   long prec_cap = GuardedReal::kMaxPrec);

}  // namespace sunit
