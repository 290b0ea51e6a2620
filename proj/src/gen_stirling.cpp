#include "norzeta/gen_stirling.hpp"

#include <vector>

#include "norzeta/em_oracle.hpp"
#include "norzeta/exact_core.hpp"
#include "norzeta/special.hpp"
#include "tail_sum.hpp"

namespace norzeta {
namespace {

bool nonpositive_integer(const MPComplex& z) {
    return z.imag().is_zero() && z.real().is_integer() && z.real() <= 0;
}

// e^{i pi lambda}, collapsing to the exact sign for integer lambda
MPComplex minus_one_pow(const MPComplex& lambda, mpfr_prec_t wp) {
    if (lambda.is_real() && lambda.real().is_integer()) {
        long l = lambda.real().to_long();
        return MPComplex((l % 2 == 0) ? 1L : -1L, wp);
    }
    MPReal pi = const_pi(wp);
    return exp(MPComplex(-pi * lambda.imag(), pi * lambda.real()));
}

}  // namespace

MPComplex stirling1_complex(const MPComplex& lambda, int k, const PrecisionContext& ctx) {
    if (k < 1 || k > 5) throw DomainError("stirling1_complex: k must be 1..5");
    if (nonpositive_integer(lambda)) throw PoleError("stirling1_complex: Gamma(lambda) pole");
    mpfr_prec_t wp = ctx.working() + 32;
    PrecisionContext ictx(std::max<mpfr_prec_t>(24, wp - 64), 64, ctx.max_terms, ctx.tail_confirm);
    MPComplex lw = lambda.rounded_to(wp);

    // positive-integer lambda with k > lambda: (s)_{lambda-1} is a polynomial
    // of degree lambda-1, so high derivatives vanish
    if (lw.is_real() && lw.real().is_integer() && MPReal(static_cast<long>(k), wp) > lw.real())
        return MPComplex(0L, ctx.working());

    // H_{lambda-1}^(r) = (-1)^(r-1)/(r-1)! [psi^(r-1)(lambda) - psi^(r-1)(1)]
    std::vector<MPComplex> H(5, MPComplex(0L, wp));
    if (k >= 2) {
        H[1] = digamma(lw, ictx) + MPComplex(const_euler(wp));
        for (int r = 2; r <= k - 1; ++r) {
            MPComplex d = polygamma(r - 1, lw, ictx) -
                          polygamma(r - 1, MPComplex(1L, wp), ictx);
            MPComplex v = d / MPReal(factorial(static_cast<unsigned long>(r - 1)), wp);
            H[static_cast<std::size_t>(r)] = ((r % 2 == 0) ? -v : v);
        }
    }

    MPComplex glam = gamma(lw, ictx).rounded_to(wp);
    MPComplex phase = minus_one_pow(lw, wp);  // (-1)^lambda
    if (k % 2 == 1) phase = -phase;           // times (-1)^k

    // complete Bell combinations of H-values, from the derivatives of
    // exp(lnGamma(s+lambda-1) - lnGamma(s)) at s = 1; each carries 1/(k-1)!
    MPComplex bell(0L, wp);
    const MPComplex& H1 = H[1];
    switch (k) {
        case 1:
            bell = MPComplex(1L, wp);
            break;
        case 2:
            bell = H1;
            break;
        case 3:
            bell = (H1 * H1 - H[2]) / 2L;
            break;
        case 4:
            bell = (H1 * H1 * H1 - 3L * H1 * H[2] + 2L * H[3]) / 6L;
            break;
        case 5:
            bell = (H1 * H1 * H1 * H1 - 6L * H1 * H1 * H[2] + 8L * H1 * H[3] +
                    3L * H[2] * H[2] - 6L * H[4]) / 24L;
            break;
    }
    MPComplex v = phase * glam * bell;
    return v.rounded_to(ctx.working());
}

MPReal stirling1_recursion_residual(const MPComplex& lambda, int k, const PrecisionContext& ctx) {
    if (k < 2 || k > 5) throw DomainError("stirling1_recursion_residual: k must be 2..5");
    MPComplex sl = stirling1_complex(lambda, k, ctx);
    MPComplex slm_km1 = stirling1_complex(lambda - 1L, k - 1, ctx);
    MPComplex slm_k = stirling1_complex(lambda - 1L, k, ctx);
    return abs(sl - slm_km1 + (lambda - 1L) * slm_k);
}

AppendixASuite appendixA_suite(const MPReal& x, unsigned n, const PrecisionContext& ctx) {
    if (!(x > 0)) throw DomainError("appendixA_suite: requires x > 0");
    mpfr_prec_t wp = ctx.working() + 32;
    PrecisionContext ictx(std::max<mpfr_prec_t>(24, wp - 64), 64, ctx.max_terms, ctx.tail_confirm);
    MPReal xw = x.rounded_to(wp);
    AppendixASuite rep;

    // (A.1): Beta via gammas against n!/(x)_{n+1}
    MPReal beta = exp(log_gamma(xw, ictx) + log_gamma(MPReal(static_cast<long>(n) + 1, wp), ictx) -
                      log_gamma(xw + static_cast<long>(n) + 1, ictx));
    MPReal poch = xw;
    for (unsigned j = 1; j <= n; ++j) poch *= (xw + static_cast<long>(j));
    MPReal direct = MPReal(factorial(n), wp) / poch;
    rep.beta_vs_pochhammer = abs(beta - direct) / abs(direct);

    // (A.2): sum_k k!/((k+1)(x)_{k+1}) = psi'(x)
    {
        const long J = std::max<long>(2000, ctx.target_precision * 8);
        MPReal s(0L, wp);
        MPReal ratio = 1L / xw;  // k!/(x)_{k+1}
        MPReal tJ(0L, wp), tJm1(0L, wp);
        for (long k = 0; k < J; ++k) {
            MPReal t = ratio / (k + 1);
            s += t;
            if (k == J - 2) tJm1 = t;
            if (k == J - 1) tJ = t;
            ratio *= MPReal(k + 1, wp) / (xw + (k + 1));
        }
        s += detail::zeta_tail_two_point(tJm1, tJ, J, xw + 1L, ictx);
        MPReal ref = polygamma(1, xw, ictx);
        rep.trigamma_series = abs(s - ref) / abs(ref);
    }

    // (A.6): sum_{k>=1} k! H_k/(x)_{k+2} = 1/x^3; the tail carries a ln k factor
    {
        const long J = std::max<long>(2000, ctx.target_precision * 8);
        MPReal s(0L, wp);
        MPReal ratio = 1L / (xw * (xw + 1L));  // k!/(x)_{k+2}
        MPReal H(0L, wp);
        MPReal t4[4] = {MPReal(0L, wp), MPReal(0L, wp), MPReal(0L, wp), MPReal(0L, wp)};
        for (long k = 1; k < J; ++k) {
            H += MPReal(1L, wp) / k;
            ratio *= MPReal(k, wp) / (xw + (k + 1));
            MPReal t = ratio * H;
            s += t;
            if (k >= J - 4) t4[k - (J - 4)] = t;
        }
        s += detail::zeta_tail_log_four_point(t4, J, xw + 1L, ictx);
        MPReal ref = 1L / (xw * xw * xw);
        rep.harmonic_series = abs(s - ref) / abs(ref);
    }

    // (A.7): n!/(x)_{n+1} [psi(x) - psi(x+n+1)] vs -sum_l (-1)^l C(n,l)/(x+l)^2
    {
        MPReal lhs = direct * (digamma(xw, ictx) - digamma(xw + static_cast<long>(n) + 1, ictx));
        MPReal rhs(0L, wp);
        for (unsigned l = 0; l <= n; ++l) {
            MPReal d = xw + static_cast<long>(l);
            MPReal t = MPReal(binomial(n, l), wp) / (d * d);
            if (l % 2 == 0)
                rhs -= t;
            else
                rhs += t;
        }
        rep.beta_derivative = abs(lhs - rhs) / max(abs(lhs), pow2(-8, wp));
    }

    rep.beta_vs_pochhammer = rep.beta_vs_pochhammer.rounded_to(ctx.working());
    rep.trigamma_series = rep.trigamma_series.rounded_to(ctx.working());
    rep.harmonic_series = rep.harmonic_series.rounded_to(ctx.working());
    rep.beta_derivative = rep.beta_derivative.rounded_to(ctx.working());
    return rep;
}

}  // namespace norzeta
