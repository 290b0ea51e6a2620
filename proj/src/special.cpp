#include "norzeta/special.hpp"

#include <algorithm>
#include <cmath>

#include "norzeta/exact_core.hpp"

namespace norzeta {
namespace {

bool nonpositive_integer(const MPComplex& z) {
    return z.imag().is_zero() && z.real().is_integer() && z.real() <= 0;
}

// Shift threshold: the Stirling series reaches ~e^{-2 pi x} at its optimal
// truncation, so x ~ W ln2 / (2 pi) bits requires this much real part.
double stirling_threshold(mpfr_prec_t work) { return 0.1153 * static_cast<double>(work) + 6.0; }

MPReal bern_over(std::size_t two_j, long num_extra, mpfr_prec_t prec) {
    // B_{2j} / (2j (2j-1)) or variants; numerator fetched exactly
    BigRational b = exact_core().bernoulli_number(two_j);
    return MPReal(b, prec) / num_extra;
}

MPReal term_mag(const MPReal& x) { return abs(x); }
MPReal term_mag(const MPComplex& z) { return abs(z); }

// Stirling series for log Gamma at w with Re w >= threshold.
template <typename T>
T log_gamma_asymptotic(const T& w, mpfr_prec_t wp, const MPReal& scale_eps) {
    mpfr_prec_t p = wp;
    T acc = (w - MPReal(BigRational(1, 2), p)) * log(w) - w;
    MPReal half_ln_2pi = log(const_pi(p) * 2L) / 2L;
    acc = acc + half_ln_2pi;
    T w2 = 1L / (w * w);
    T t = 1L / w;
    for (std::size_t j = 1; j < 4096; ++j) {
        T term = t * bern_over(2 * j, static_cast<long>(2 * j) * static_cast<long>(2 * j - 1), p);
        acc = acc + term;
        if (term_mag(term) < scale_eps) break;
        t = t * w2;
    }
    return acc;
}

}  // namespace

namespace {

// generic complex/real log-gamma with right shift; T is MPReal or MPComplex
template <typename T>
T log_gamma_shifted(const T& z, const PrecisionContext& ctx, double re_z) {
    mpfr_prec_t wp = ctx.working() + 32;
    double z0 = stirling_threshold(wp);
    long n = re_z < z0 ? static_cast<long>(std::ceil(z0 - re_z)) : 0;
    T w = z + n;
    MPReal eps = pow2(-static_cast<long>(wp) - 4, wp);
    T lg = log_gamma_asymptotic(w, wp, eps);
    if (n > 0) {
        // lnGamma(z) = lnGamma(z+n) - sum_{k=0}^{n-1} ln(z+k); all logs principal,
        // every argument in the right half-plane
        T ls = log(z);
        for (long k = 1; k < n; ++k) ls = ls + log(z + k);
        lg = lg - ls;
    }
    return lg;
}

}  // namespace

MPComplex log_gamma(const MPComplex& z, const PrecisionContext& ctx) {
    if (!(z.real() > 0)) throw DomainError("log_gamma: requires Re z > 0");
    return log_gamma_shifted(z, ctx, z.real().to_double()).rounded_to(ctx.working());
}

MPReal log_gamma(const MPReal& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw DomainError("log_gamma: requires x > 0");
    MPReal r(ctx.working());
    mpfr_lngamma(r.raw(), x.rounded_to(ctx.working() + 16).raw(), MPFR_RNDN);
    return r;
}

MPComplex gamma(const MPComplex& z, const PrecisionContext& ctx) {
    if (z.is_real()) return MPComplex(gamma(z.real(), ctx));
    mpfr_prec_t wp = ctx.working() + 32;
    if (z.real() > 0) return exp(log_gamma_shifted(z, ctx, z.real().to_double())).rounded_to(ctx.working());
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    MPComplex zz = z.rounded_to(wp);
    MPComplex one_minus = MPComplex(1L, wp) - zz;
    MPComplex g = exp(log_gamma_shifted(one_minus, ctx, one_minus.real().to_double()));
    MPComplex s = sin_pi(zz, wp);
    MPComplex r = MPComplex(const_pi(wp)) / (s * g);
    return r.rounded_to(ctx.working());
}

MPReal gamma(const MPReal& x, const PrecisionContext& ctx) {
    if (x.is_integer() && x <= 0) throw PoleError("gamma: pole at nonpositive integer");
    MPReal r(ctx.working());
    mpfr_gamma(r.raw(), x.rounded_to(ctx.working() + 16).raw(), MPFR_RNDN);
    return r;
}

namespace {

// digamma asymptotic: psi(w) ~ ln w - 1/(2w) - sum B_2j / (2j w^{2j})
template <typename T>
T digamma_asymptotic(const T& w, mpfr_prec_t p, const MPReal& eps) {
    T acc = log(w) - 1L / (w * 2L);
    T w2 = 1L / (w * w);
    T t = w2;
    for (std::size_t j = 1; j < 4096; ++j) {
        T term = t * bern_over(2 * j, static_cast<long>(2 * j), p);
        acc = acc - term;
        if (term_mag(term) < eps) break;
        t = t * w2;
    }
    return acc;
}

template <typename T>
T digamma_shifted(const T& z, const PrecisionContext& ctx, double re_z) {
    mpfr_prec_t wp = ctx.working() + 32;
    double z0 = stirling_threshold(wp);
    long n = re_z < z0 ? static_cast<long>(std::ceil(z0 - re_z)) : 0;
    T w = z + n;
    MPReal eps = pow2(-static_cast<long>(wp) - 4, wp);
    T d = digamma_asymptotic(w, wp, eps);
    for (long k = 0; k < n; ++k) d = d - 1L / (z + k);
    return d;
}

// psi^(m)(w) ~ (-1)^{m-1} [ (m-1)!/w^m + m!/(2 w^{m+1})
//                           + sum_j B_2j (2j+m-1)!/((2j)! w^{2j+m}) ]
template <typename T>
T polygamma_asymptotic(int m, const T& w, mpfr_prec_t p, const MPReal& eps) {
    BigInt fm1 = factorial(static_cast<unsigned long>(m - 1));
    T wm = pow(w, static_cast<long>(m));
    T acc = MPReal(fm1, p) / wm;                                     // (m-1)!/w^m
    acc = acc + MPReal(BigInt(fm1 * m), p) / (wm * w * 2L);          // m!/(2 w^{m+1})
    T w2 = 1L / (w * w);
    T t = 1L / (wm * w * w);                                         // w^{-(2+m)}
    BigInt rising = factorial(static_cast<unsigned long>(m + 1));    // (2j+m-1)!/(2j)! at j=1 -> (m+1)!/2
    for (std::size_t j = 1; j < 4096; ++j) {
        BigRational c = exact_core().bernoulli_number(2 * j) * BigRational(rising) / BigRational(factorial(2 * j));
        T term = t * MPReal(c, p);
        acc = acc + term;
        if (term_mag(term) < eps) break;
        t = t * w2;
        rising = BigInt(rising * BigInt(static_cast<unsigned long>(2 * j + m)) * BigInt(static_cast<unsigned long>(2 * j + m + 1)));
    }
    if (m % 2 == 0) acc = -acc;
    return acc;
}

template <typename T>
T polygamma_shifted(int m, const T& z, const PrecisionContext& ctx, double re_z) {
    mpfr_prec_t wp = ctx.working() + 32;
    double z0 = stirling_threshold(wp) + m;
    long n = re_z < z0 ? static_cast<long>(std::ceil(z0 - re_z)) : 0;
    T w = z + n;
    MPReal eps = pow2(-static_cast<long>(wp) - 4, wp);
    T acc = polygamma_asymptotic(m, w, wp, eps);
    // psi^(m)(z) = psi^(m)(z+1) - (-1)^m m!/z^{m+1}
    BigInt fm = factorial(static_cast<unsigned long>(m));
    long sgn = (m % 2 == 0) ? 1 : -1;  // (-1)^m
    for (long k = 0; k < n; ++k) {
        T p1 = pow(z + k, static_cast<long>(m + 1));
        acc = acc - MPReal(BigInt(fm * sgn), wp) / p1;
    }
    return acc;
}

}  // namespace

MPComplex digamma(const MPComplex& z, const PrecisionContext& ctx) {
    if (nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
    if (z.is_real()) return MPComplex(digamma(z.real(), ctx));
    return digamma_shifted(z, ctx, z.real().to_double()).rounded_to(ctx.working());
}

MPReal digamma(const MPReal& x, const PrecisionContext& ctx) {
    if (x.is_integer() && x <= 0) throw PoleError("digamma: pole at nonpositive integer");
    MPReal r(ctx.working());
    mpfr_digamma(r.raw(), x.rounded_to(ctx.working() + 16).raw(), MPFR_RNDN);
    return r;
}

MPComplex polygamma(int m, const MPComplex& z, const PrecisionContext& ctx) {
    if (m < 1 || m > 4) throw DomainError("polygamma: order must be 1..4");
    if (nonpositive_integer(z)) throw PoleError("polygamma: pole at nonpositive integer");
    if (z.is_real()) return MPComplex(polygamma(m, z.real(), ctx));
    return polygamma_shifted(m, z, ctx, z.real().to_double()).rounded_to(ctx.working());
}

MPReal polygamma(int m, const MPReal& x, const PrecisionContext& ctx) {
    if (m < 1 || m > 4) throw DomainError("polygamma: order must be 1..4");
    if (x.is_integer() && x <= 0) throw PoleError("polygamma: pole at nonpositive integer");
    return polygamma_shifted(m, x, ctx, x.to_double()).rounded_to(ctx.working());
}

}  // namespace norzeta
