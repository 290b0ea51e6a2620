#include "stieltjes_series.hpp"

#include "norzeta/exact_core.hpp"
#include "norzeta/special.hpp"
#include "series_plan.hpp"

namespace norzeta {
namespace detail {

namespace {

void check_domain(const MPComplex& a) {
    if (!(a.real() > 0)) throw DomainError("stieltjes: requires Re a > 0");
}

struct Shifted {
    MPComplex a;  // shifted argument at internal precision
    long M = 0;
    long k_budget = 0;
    mpfr_prec_t wp = 0;
};

Shifted shift_for(const MPComplex& a, const PrecisionContext& ctx) {
    double ar = a.real().to_double();
    double ai = a.imag().to_double();
    double needed = static_cast<double>(ctx.working()) + 16.0;
    ShiftPlan p = plan_shift(needed, ar, ctx.max_terms);
    Shifted s;
    s.M = p.shift;
    s.k_budget = p.k_budget;
    s.wp = ctx.working() + extra_working_bits(1.0, ai, p.a_target);
    s.a = a.rounded_to(s.wp) + s.M;
    return s;
}

}  // namespace

MPComplex gamma0_c(const MPComplex& a, const PrecisionContext& ctx) {
    check_domain(a);
    return -digamma(a, ctx);
}

SeriesEvaluation gamma1_series_c(const MPComplex& a, const PrecisionContext& ctx) {
    check_domain(a);
    Shifted sh = shift_for(a, ctx);
    PrecisionContext ictx(std::max<mpfr_prec_t>(24, sh.wp - 64), 64, ctx.max_terms, ctx.tail_confirm);

    const MPComplex& as = sh.a;
    MPComplex psi = digamma(as, ictx);
    MPComplex psi1 = polygamma(1, as, ictx);

    ExactCore& core = exact_core();
    MPComplex sum(0L, sh.wp);
    MPComplex g(1L, sh.wp);  // Gamma(a)/Gamma(k+a), g_0 = 1
    MPReal thr_scale = pow2(-static_cast<long>(ctx.working()) - 2, sh.wp);
    int small_run = 0;
    long k = 0;
    bool converged = false;
    MPReal last_mag(0L, sh.wp);
    for (k = 1; k <= ctx.max_terms; ++k) {
        g = g / (as + (k - 1));
        MPReal c(core.norlund_number(static_cast<std::size_t>(k)), sh.wp);
        MPComplex t = g * (c / static_cast<long>(k) / static_cast<long>(k));
        if (k & 1) t = -t;
        sum += t;
        last_mag = abs(t);
        if (last_mag <= thr_scale * (abs(sum) + abs(psi))) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
        if (k > sh.k_budget * 2 && k > 128) break;
    }
    MPComplex val = -((psi * psi - psi1) / 2L + exp(log_gamma(as, ictx)) * sum);
    // unshift: gamma_1(a) = gamma_1(a+1) + ln(a)/a
    MPComplex a0 = a.rounded_to(sh.wp);
    for (long j = sh.M - 1; j >= 0; --j) {
        MPComplex aj = a0 + j;
        val += log(aj) / aj;
    }
    return {val.rounded_to(ctx.working()), k, (last_mag * (k + 1)).rounded_to(ctx.working()), converged};
}

SeriesEvaluation gamma2_series_c(const MPComplex& a, const PrecisionContext& ctx) {
    check_domain(a);
    Shifted sh = shift_for(a, ctx);
    PrecisionContext ictx(std::max<mpfr_prec_t>(24, sh.wp - 64), 64, ctx.max_terms, ctx.tail_confirm);

    const MPComplex& as = sh.a;
    MPComplex psi = digamma(as, ictx);
    MPComplex psi1 = polygamma(1, as, ictx);
    MPComplex psi2 = polygamma(2, as, ictx);

    ExactCore& core = exact_core();
    MPComplex s1(0L, sh.wp), s2(0L, sh.wp);
    MPComplex g(1L, sh.wp);            // Gamma(a)/Gamma(k+a)
    MPComplex psi_ka = psi + 1L / as;  // psi(k+a) at k = 1
    MPReal Hkm1(0L, sh.wp);            // H_{k-1}; gamma k + k psi(k) = k H_{k-1}
    MPReal thr_scale = pow2(-static_cast<long>(ctx.working()) - 2, sh.wp);
    int small_run = 0;
    bool converged = false;
    long k = 0;
    MPReal last_mag(0L, sh.wp);
    for (k = 1; k <= ctx.max_terms; ++k) {
        g = g / (as + (k - 1));
        MPReal bkk(core.norlund_number(static_cast<std::size_t>(k)), sh.wp);
        MPReal dbk(core.norlund_poly_dalpha(static_cast<std::size_t>(k)).eval(BigRational(k)), sh.wp);
        long k2 = k * k;
        MPComplex t1 = g * (dbk / k2);
        // -1 + gamma k + k psi(k) - k psi(k+a) collapses to -1 + k H_{k-1} - k psi(k+a)
        MPComplex br = MPComplex(Hkm1 * k - 1L) - psi_ka * k;
        MPComplex t2 = g * bkk * br / (static_cast<long>(k) * k2);
        if (k & 1) {
            t1 = -t1;
            t2 = -t2;
        }
        s1 += t1;
        s2 += t2;
        last_mag = abs(t1) + abs(t2);
        if (last_mag <= thr_scale * (abs(s1) + abs(s2) + 1L)) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
        psi_ka += 1L / (as + k);  // psi(k+1+a) = psi(k+a) + 1/(k+a)
        Hkm1 += MPReal(BigRational(1, k), sh.wp);
        if (k > sh.k_budget * 2 && k > 128) break;
    }
    MPComplex lead = (-(psi * psi * psi) + MPReal(3L, sh.wp) * psi * psi1 - psi2) / 3L;
    MPComplex ga = exp(log_gamma(as, ictx));
    MPComplex val = lead + (ga * s1 + ga * s2) * 2L;
    MPComplex a0 = a.rounded_to(sh.wp);
    for (long j = sh.M - 1; j >= 0; --j) {
        MPComplex aj = a0 + j;
        MPComplex lg = log(aj);
        val += lg * lg / aj;
    }
    return {val.rounded_to(ctx.working()), k, (last_mag * (k + 1)).rounded_to(ctx.working()), converged};
}

}  // namespace detail
}  // namespace norzeta
