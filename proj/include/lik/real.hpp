#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace lik {

using Int = mpz_class;
using Rat = mpq_class;

// Strong type for precision in bits, so Real(2, Prec{128}) can't be confused
// with an integer-valued constructor.
struct Prec {
    long bits;
};

// Raised when a cancellation guard detects that a requested result cannot be
// trusted at the current working precision.
struct precision_shortfall : std::runtime_error {
    explicit precision_shortfall(const std::string& what) : std::runtime_error(what) {}
};

// Raised for arguments outside a formula's validity region (pole, domain edge).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Arbitrary-precision real backed by mpfr_t. Value semantics; every value
// carries its own precision and binary operations round to the wider of the
// two operand precisions (round-to-nearest). All operations are deterministic
// for fixed inputs and precisions.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(Prec p) { mpfr_init2(v_, clamp(p.bits)); mpfr_set_zero(v_, 1); }
    Real(long x, Prec p) { mpfr_init2(v_, clamp(p.bits)); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, Prec p) : Real(static_cast<long>(x), p) {}
    Real(double x, Prec p) { mpfr_init2(v_, clamp(p.bits)); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const Int& x, Prec p) { mpfr_init2(v_, clamp(p.bits)); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Rat& x, Prec p) { mpfr_init2(v_, clamp(p.bits)); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    // Decimal string, e.g. Real("118.6038", Prec{256}).
    Real(const char* s, Prec p) {
        mpfr_init2(v_, clamp(p.bits));
        if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0)
            throw std::invalid_argument(std::string("Real: bad literal ") + s);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    // Binary exponent; only meaningful for nonzero values.
    long exp2() const { return is_zero() ? LONG_MIN : static_cast<long>(mpfr_get_exp(v_)); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Exact conversion: every finite Real is a dyadic rational.
    Rat to_rat() const {
        Rat q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    Real to_prec(Prec p) const {
        Real r(p);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
    Real operator-() const {
        Real r(Prec{prec()});
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) {
        Real r(Prec{a.prec()});
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(Prec{a.prec()});
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(Prec{a.prec()});
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) { return a + (-b); }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) {
        Real r(Prec{b.prec()});
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(Prec{b.prec()});
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator*(const Real& a, const Int& b) {
        Real r(Prec{a.prec()});
        mpfr_mul_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Int& a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, const Int& b) {
        Real r(Prec{a.prec()});
        mpfr_div_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Rat& b) {
        Real r(Prec{a.prec()});
        mpfr_mul_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

    static Real pi(Prec p) {
        Real r(p);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real euler(Prec p) {  // Euler-Mascheroni constant
        Real r(p);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    static Real log2c(Prec p) {
        Real r(p);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e with e possibly far outside double range.
    static Real pow2(long e, Prec p) {
        Real r(1L, p);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

  private:
    static long clamp(long bits) { return bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }
    template <class F>
    static Real bin(F f, const Real& a, const Real& b) {
        Real r(Prec{a.prec() > b.prec() ? a.prec() : b.prec()});
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline Real abs(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real sqrt(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real log(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real log1p(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real expm1(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real atan(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_atan(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real cosh(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real sinh(const Real& x) {
    Real r(Prec{x.prec()});
    mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& x, long e) {
    Real r(Prec{x.prec()});
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& x, const Real& y) {
    Real r(Prec{x.prec() > y.prec() ? x.prec() : y.prec()});
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real ldexp(const Real& x, long e) {
    Real r(Prec{x.prec()});
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

// Error estimates are coarse by design; 32 bits of mantissa is plenty.
inline constexpr long kErrPrec = 32;
inline Real err_zero() { return Real(Prec{kErrPrec}); }
inline Real err_from(const Real& x) { return abs(x).to_prec(Prec{kErrPrec}); }
// One ulp of x at its own precision (0 for exact zero).
inline Real ulp_of(const Real& x) {
    if (x.is_zero()) return err_zero();
    return Real::pow2(x.exp2() - x.prec() + 1, Prec{kErrPrec});
}

// Working-precision contract shared by the evaluation engines.
struct PrecisionContext {
    long work_bits = 192;       // >= 64
    Real target_abs_err;        // > 0
    int ladder_factor = 2;      // >= 2

    Prec prec() const { return Prec{work_bits}; }

    static PrecisionContext with_bits(long bits) {
        if (bits < 64) throw std::invalid_argument("PrecisionContext: work_bits must be >= 64");
        PrecisionContext c;
        c.work_bits = bits;
        c.target_abs_err = Real::pow2(-(bits - 16), Prec{kErrPrec});
        return c;
    }
    // Default ladder: alternating binomial sums with 3^-n-sized results lose
    // about n*log2(3) bits, so provision for that plus headroom.
    static PrecisionContext for_nmax(long n_max) {
        long bits = static_cast<long>(n_max * 1.5849625007211562) + 64;
        if (bits < 192) bits = 192;
        return with_bits(bits);
    }
};

// Accumulator that watches for catastrophic cancellation: if the running
// partial sum ever exceeds the final result by more than 2^(work_bits-32),
// the result has fewer than 32 trusted bits and we refuse to return it.
class GuardedSum {
  public:
    explicit GuardedSum(Prec p) : acc_(p), peak_(err_zero()) {}
    void add(const Real& t) {
        acc_ += t;
        Real m = err_from(acc_);
        if (m > peak_) peak_ = m;
    }
    const Real& peak() const { return peak_; }
    // Throws precision_shortfall if the cancellation guard trips.
    Real finalize(long work_bits, const char* label) const {
        if (!peak_.is_zero()) {
            Real floor_mag = ldexp(peak_, -(work_bits - 32));
            if (acc_.is_zero() || err_from(acc_) < floor_mag) {
                double lost = acc_.is_zero() ? static_cast<double>(work_bits)
                                             : static_cast<double>(peak_.exp2() - acc_.exp2());
                throw precision_shortfall(
                    std::string(label) + ": cancellation of ~" + std::to_string(static_cast<long>(lost)) +
                    " bits exceeds budget at work_bits=" + std::to_string(work_bits) +
                    " (needs > " + std::to_string(static_cast<long>(lost) + 32) + " bits)");
            }
        }
        return acc_;
    }
    const Real& value_unchecked() const { return acc_; }

  private:
    Real acc_;
    Real peak_;
};

// Scientific-notation formatting with an explicit significant-digit count.
// Deterministic: fixed rounding, fixed layout d.dddde[+-]XX.
std::string format_sci(const Real& x, long sig_digits);

// Digit count justified by an absolute error bound: ceil(-log10 err) + 2,
// clamped to what the value's precision can honestly show.
long justified_digits(const Real& value, const Real& err);

}  // namespace lik
