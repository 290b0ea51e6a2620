#ifndef NORZETA_MP_REAL_HPP
#define NORZETA_MP_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "norzeta/rational.hpp"

namespace norzeta {

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations produce results at the larger operand precision with
// round-to-nearest. Deterministic given inputs and precisions.
class MPReal {
  public:
    explicit MPReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    MPReal(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    MPReal(unsigned long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_ui(v_, x, MPFR_RNDN);
    }
    MPReal(int x, mpfr_prec_t prec) : MPReal(static_cast<long>(x), prec) {}
    MPReal(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    MPReal(const BigRational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    MPReal(const BigInt& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    MPReal(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("MPReal: cannot parse '" + s + "'");
    }

    MPReal(const MPReal& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MPReal(MPReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    MPReal& operator=(const MPReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MPReal& operator=(MPReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MPReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    MPReal rounded_to(mpfr_prec_t prec) const {
        MPReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // floor(log2 |x|) + 1 for nonzero finite x
    mpfr_exp_t exp2() const { return mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with round-trip digits at this precision by default.
    std::string str(std::size_t digits = 0) const;

    friend MPReal operator+(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator-(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator/(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator+(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator+(long a, const MPReal& b) { return b + a; }
    friend MPReal operator-(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator-(long a, const MPReal& b) {
        MPReal r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(long a, const MPReal& b) { return b * a; }
    friend MPReal operator/(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator/(long a, const MPReal& b) {
        MPReal r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    MPReal operator-() const {
        MPReal r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MPReal& operator+=(const MPReal& o) {
        bump_prec(o.prec());
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator-=(const MPReal& o) {
        bump_prec(o.prec());
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator*=(const MPReal& o) {
        bump_prec(o.prec());
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator/=(const MPReal& o) {
        bump_prec(o.prec());
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator*=(long x) {
        mpfr_mul_si(v_, v_, x, MPFR_RNDN);
        return *this;
    }
    MPReal& operator/=(long x) {
        mpfr_div_si(v_, v_, x, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const MPReal& a, const MPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const MPReal& a, const MPReal& b) { return !(a == b); }
    friend bool operator<(const MPReal& a, const MPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const MPReal& a, const MPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const MPReal& a, const MPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const MPReal& a, const MPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }
    friend bool operator<(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const MPReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  private:
    void bump_prec(mpfr_prec_t p) {
        if (prec() < p) {
            MPReal tmp(p);
            mpfr_set(tmp.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, tmp.v_);
        }
    }
    mpfr_t v_;
};

#define NORZETA_MPFR_UNARY(name, fn)                 \
    inline MPReal name(const MPReal& x) {            \
        MPReal r(x.prec());                          \
        fn(r.raw(), x.raw(), MPFR_RNDN);             \
        return r;                                    \
    }

NORZETA_MPFR_UNARY(abs, mpfr_abs)
NORZETA_MPFR_UNARY(sqrt, mpfr_sqrt)
NORZETA_MPFR_UNARY(exp, mpfr_exp)
NORZETA_MPFR_UNARY(log, mpfr_log)
NORZETA_MPFR_UNARY(log1p, mpfr_log1p)
NORZETA_MPFR_UNARY(log2, mpfr_log2)
NORZETA_MPFR_UNARY(sin, mpfr_sin)
NORZETA_MPFR_UNARY(cos, mpfr_cos)
NORZETA_MPFR_UNARY(tanh, mpfr_tanh)
NORZETA_MPFR_UNARY(sinh, mpfr_sinh)
NORZETA_MPFR_UNARY(cosh, mpfr_cosh)
#undef NORZETA_MPFR_UNARY

inline MPReal floor(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}
inline MPReal ceil(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_ceil(r.raw(), x.raw());
    return r;
}

inline MPReal atan2(const MPReal& y, const MPReal& x) {
    MPReal r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline MPReal pow(const MPReal& b, const MPReal& e) {
    MPReal r(std::max(b.prec(), e.prec()));
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline MPReal pow(const MPReal& b, long e) {
    MPReal r(b.prec());
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}
inline MPReal hypot(const MPReal& x, const MPReal& y) {
    MPReal r(std::max(x.prec(), y.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline MPReal ldexp2(const MPReal& x, long e) {
    MPReal r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
// 2^e
inline MPReal pow2(long e, mpfr_prec_t prec) {
    MPReal r(1L, prec);
    return ldexp2(r, e);
}
inline MPReal max(const MPReal& a, const MPReal& b) { return a >= b ? a : b; }
inline MPReal min(const MPReal& a, const MPReal& b) { return a <= b ? a : b; }

inline MPReal const_pi(mpfr_prec_t prec) {
    MPReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline MPReal const_euler(mpfr_prec_t prec) {
    MPReal r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline MPReal const_catalan(mpfr_prec_t prec) {
    MPReal r(prec);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}
inline MPReal const_log2(mpfr_prec_t prec) {
    MPReal r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

// MPFR-native special functions on the real line (trusted references).
inline MPReal gamma_mpfr(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline MPReal lngamma_mpfr(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline MPReal digamma_mpfr(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline MPReal zeta_mpfr(const MPReal& x) {
    MPReal r(x.prec());
    mpfr_zeta(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline MPReal zeta_mpfr_ui(unsigned long n, mpfr_prec_t prec) {
    MPReal r(prec);
    mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

}  // namespace norzeta

#endif
