#ifndef NORZETA_SERIES_HPP
#define NORZETA_SERIES_HPP

#include <cstddef>

#include "norzeta/precision.hpp"
#include "norzeta/rational.hpp"
#include "norzeta/rational_poly.hpp"

namespace norzeta {

// Horner evaluation of an exact polynomial at floating alpha.
MPComplex eval_poly(const RationalPolynomial& p, const MPComplex& alpha);
MPReal eval_poly(const RationalPolynomial& p, const MPReal& alpha);

struct SeriesEvaluation {
    MPComplex value;
    long terms_used = 0;
    MPReal tail_estimate;
    bool converged = false;

    SeriesEvaluation() : value(64), tail_estimate(0L, 64) {}
    SeriesEvaluation(MPComplex v, long terms, MPReal tail, bool ok)
        : value(std::move(v)), terms_used(terms), tail_estimate(std::move(tail)), converged(ok) {}

    const MPComplex& value_or_throw() const {
        if (!converged) throw NonConvergenceError("series did not converge within max_terms");
        return value;
    }
};

// Hurwitz zeta via the Norlund-coefficient series, pole-separated form:
//   zeta(s,a) = G_0/(s-1) + sum_{k>=1} (-1)^k/k! * q_k(s) * (s-1)_k * G_k,
//   q_k(s) = B_k^(s+k-1)/(s+k-1) exact-divided, G_k = Gamma(a)/Gamma(s+a-1+k).
// The argument is shifted by zeta(s,a) = a^-s + zeta(s,a+1) until the shifted
// a gives factorial-against-Beta(k,a) decay at working precision.
SeriesEvaluation hurwitz_zeta(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx);
SeriesEvaluation riemann_zeta(const MPComplex& s, const PrecisionContext& ctx);

// Gamma(s)[s zeta(s+1,a) - a^-s] by the two-coefficient bracket series.
SeriesEvaluation hurwitz_zeta_alt(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx);

// a^-s Gamma(s) by the Norlund series (cross-checks gamma and pow).
SeriesEvaluation power_gamma_series(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx);

// psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x) through the same series.
SeriesEvaluation polygamma_series(int n, const MPComplex& x, const PrecisionContext& ctx);

// psi(a) - ln a = sum_n (-1)^n/n [B_n^(n) + n B_{n-1}^(n-1)] / (a)_n.
SeriesEvaluation digamma_series(const MPComplex& a, const PrecisionContext& ctx);

// ln Gamma(x+1); the k = 0,1 terms use the closed-form limits. Converges
// slowly (~1/(k^2 ln^2 k)); intended for modest precision targets.
SeriesEvaluation log_gamma_series(const MPComplex& x, const PrecisionContext& ctx);

enum class LogRatioVariant { inverse_factorial, p_constant };  // series families below

// ln((x+1)/x):
//   inverse_factorial: sum_r (-1)^r B_r^(r) / (x+1)_{r+1}
//   p_constant:        1/x - 1/(2x(x+1)) + (1/x) sum_{r>=2} (-1)^r [B_r^(r-1)/(r-1)] / (x+1)_r
SeriesEvaluation log_ratio_series(const MPComplex& x, const PrecisionContext& ctx, LogRatioVariant v);

struct EulerSumResult {
    MPReal value;
    long terms = 0;
    MPReal tail_estimate;
};

// Partial sums sum_{k<=N} H_k/(k+1)^2 -> zeta(3) and
// (1/2) sum_{k<=N} [H_k^2 - H_k^(2)]/(k+1)^2 -> zeta(4).
EulerSumResult euler_sum_zeta3(long N, const PrecisionContext& ctx);
EulerSumResult euler_sum_zeta4(long N, const PrecisionContext& ctx);

// Rubinstein coefficients at complex s (exact rational versions in ExactCore).
MPComplex alpha_coeff(std::size_t k, const MPComplex& s, const PrecisionContext& ctx);
MPComplex alpha_coeff_prime(std::size_t k, const MPComplex& s, const PrecisionContext& ctx);

// Relative residual of d/da zeta(s,a) = -s zeta(s+1,a) with the derivative
// taken through the series term-by-term.
MPReal partial_a_identity_check(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx);

}  // namespace norzeta

#endif
