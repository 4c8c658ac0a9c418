#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace abcmin {

// Software floating point used to settle comparisons that are too close to
// trust in double. Precision is process-wide: ABC_PRECISION_BITS in the
// environment overrides the default of 128 mantissa bits (values below 100
// are clamped up so at least ~30 significant decimal digits are available).
class BigFloat {
public:
    static int precision_bits();

    BigFloat() { mpfr_init2(v_, precision_bits()); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double x) { mpfr_init2(v_, precision_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit BigFloat(long x) { mpfr_init2(v_, precision_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit BigFloat(int x) : BigFloat(static_cast<long>(x)) {}

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, precision_bits()); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend BigFloat operator-(BigFloat a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    friend BigFloat sqrt(BigFloat a) { mpfr_sqrt(a.v_, a.v_, MPFR_RNDN); return a; }
    friend BigFloat abs(BigFloat a) { mpfr_abs(a.v_, a.v_, MPFR_RNDN); return a; }
    friend BigFloat scalbn2(BigFloat a, long e) { mpfr_mul_2si(a.v_, a.v_, e, MPFR_RNDN); return a; }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    bool positive() const { return mpfr_sgn(v_) > 0; }
    bool negative() const { return mpfr_sgn(v_) < 0; }

private:
    mutable mpfr_t v_;
};

// True when |a - b| is below `margin`: the ordering should then be
// re-derived in BigFloat instead of trusted from doubles.
inline bool needs_extended(double a, double b, double margin = 1e-9) {
    double d = a - b;
    return (d < 0 ? -d : d) < margin;
}

// Relative tie tolerance for extended-precision comparisons: two values whose
// extended evaluations agree to 2^-(prec-40) are treated as equal (genuinely
// equal reals evaluated along different formula paths agree far tighter).
bool extended_equal(const BigFloat& a, const BigFloat& b);

}  // namespace abcmin
