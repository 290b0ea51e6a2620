#include "norzeta/series.hpp"

#include <cmath>
#include <vector>

#include "norzeta/exact_core.hpp"
#include "norzeta/special.hpp"
#include "series_plan.hpp"
#include "float_coeffs.hpp"
#include "stieltjes_series.hpp"

namespace norzeta {

MPComplex eval_poly(const RationalPolynomial& p, const MPComplex& alpha) {
    mpfr_prec_t prec = alpha.prec();
    MPComplex acc(0L, prec);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * alpha + MPReal(c[i], prec);
    return acc;
}

MPReal eval_poly(const RationalPolynomial& p, const MPReal& alpha) {
    mpfr_prec_t prec = alpha.prec();
    MPReal acc(0L, prec);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * alpha + MPReal(c[i], prec);
    return acc;
}

namespace {

bool exact_nonpositive_int(const MPComplex& z) {
    return z.imag().is_zero() && z.real().is_integer() && z.real() <= 0;
}

PrecisionContext inner_ctx(mpfr_prec_t wp, const PrecisionContext& ctx) {
    return PrecisionContext(std::max<mpfr_prec_t>(24, wp - 64), 64, ctx.max_terms, ctx.tail_confirm);
}

// Gamma(a)/Gamma(w+k) for k = 0..kmax. Forward division starts where
// Re(w+k) >= 1; lower indices are filled by backward multiplication, which
// lands exact zeros when w hits a nonpositive integer.
std::vector<MPComplex> gamma_ratio_table(const MPComplex& a, const MPComplex& w, long kmax,
                                         mpfr_prec_t wp, const PrecisionContext& ctx) {
    long kstar = 0;
    double wre = w.real().to_double();
    if (wre < 1) kstar = static_cast<long>(std::ceil(1.0 - wre));
    if (kstar > kmax) kstar = kmax;
    std::vector<MPComplex> G(static_cast<std::size_t>(kmax) + 1, MPComplex(0L, wp));
    PrecisionContext ictx = inner_ctx(wp, ctx);
    MPComplex base = exp(log_gamma(a, ictx) - log_gamma(w + kstar, ictx));
    G[static_cast<std::size_t>(kstar)] = base.rounded_to(wp);
    for (long k = kstar; k < kmax; ++k) G[k + 1] = G[k] / (w + k);
    for (long k = kstar; k > 0; --k) G[k - 1] = G[k] * (w + (k - 1));
    return G;
}

struct CoreResult {
    MPComplex value;
    long terms = 0;
    MPReal tail;
    bool converged = false;
    CoreResult(mpfr_prec_t wp) : value(0L, wp), tail(0L, wp) {}
};

// Pole-separated (1.6)/(2.29) at an already-shifted a; with_psi multiplies each
// term by psi(s+a-1+k), giving the series side of the derivative identity.
CoreResult hurwitz_core(const MPComplex& s, const MPComplex& a, long k_budget, mpfr_prec_t wp,
                        const PrecisionContext& ctx, bool with_psi) {
    CoreResult out(wp);
    ExactCore& core = exact_core();
    MPComplex sw = s.rounded_to(wp);
    MPComplex aw = a.rounded_to(wp);
    MPComplex w = sw + aw - 1L;

    long kmax = std::min<long>(ctx.max_terms, std::max<long>(k_budget * 2, 64));
    std::vector<MPComplex> G = gamma_ratio_table(aw, w, kmax, wp, ctx);

    MPComplex psi_w(0L, wp);
    if (with_psi) {
        // psi(w+k) tracked incrementally; w may sit left of the imaginary axis
        PrecisionContext ictx = inner_ctx(wp, ctx);
        psi_w = digamma(w, ictx).rounded_to(wp);
    }

    MPComplex sum = G[0] / (sw - 1L);
    if (with_psi) sum = sum * psi_w;
    out.terms = 1;

    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPComplex P(1L, wp);       // (s-1)_k
    MPReal fact(1L, wp);       // k!
    MPReal peak(0L, wp);
    int small_run = 0;
    MPReal last_mag(0L, wp);
    for (long k = 1; k <= kmax; ++k) {
        P *= (sw + (k - 2));
        fact *= k;
        if (with_psi) psi_w += 1L / (w + (k - 1));
        MPComplex q = eval_poly(core.norlund_poly_over_alpha(static_cast<std::size_t>(k)), sw + (k - 1));
        MPComplex t = q * P * G[static_cast<std::size_t>(k)] / fact;
        if (k & 1) t = -t;
        if (with_psi) t = t * psi_w;
        sum += t;
        ++out.terms;
        last_mag = abs(t);
        peak = max(peak, last_mag);
        MPReal scale = max(abs(sum), ldexp2(peak, -24));
        if (last_mag <= thr * scale) {
            if (++small_run >= ctx.tail_confirm) {
                out.converged = true;
                break;
            }
        } else
            small_run = 0;
    }
    out.value = sum;
    out.tail = last_mag * (out.terms + 1);
    return out;
}

SeriesEvaluation finish(const MPComplex& v, long terms, const MPReal& tail, bool conv,
                        const PrecisionContext& ctx) {
    return {v.rounded_to(ctx.working()), terms, tail.rounded_to(ctx.working()), conv};
}

// Laurent fallback for |s-1| < 2^-8: explicit pole plus gamma_0..gamma_2.
SeriesEvaluation hurwitz_near_pole(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working() + 32;
    MPComplex ds = (s - 1L).rounded_to(wp);
    MPComplex g0 = detail::gamma0_c(a, ctx).rounded_to(wp);
    SeriesEvaluation g1 = detail::gamma1_series_c(a, ctx);
    SeriesEvaluation g2 = detail::gamma2_series_c(a, ctx);
    MPComplex v = 1L / ds + g0 - g1.value.rounded_to(wp) * ds + g2.value.rounded_to(wp) * (ds * ds) / 2L;
    // dominated by the omitted gamma_3 term
    MPReal mag_ds = abs(ds);
    MPReal tail = mag_ds * mag_ds * mag_ds * (abs(g2.value) + 1L);
    bool conv = g1.converged && g2.converged && tail <= ctx.eps_target() * abs(v);
    return finish(v, g1.terms_used + g2.terms_used, tail, conv, ctx);
}

}  // namespace

SeriesEvaluation hurwitz_zeta(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx) {
    if (!(a.real() > 0)) throw DomainError("hurwitz_zeta: requires Re a > 0");
    if (s.is_real() && s.real() == 1 && s.imag().is_zero()) throw PoleError("hurwitz_zeta: pole at s = 1");

    const double sr = s.real().to_double();
    const double si = s.imag().to_double();
    if (std::fabs(sr - 1.0) < 1.0 / 256 && std::fabs(si) < 1.0 / 256 && abs(s - 1L) < MPReal(1.0 / 256, 64))
        return hurwitz_near_pole(s, a, ctx);

    if (exact_nonpositive_int(s)) {
        // the series terminates: (s-1)_k = 0 once k > 1 - Re s; no shift needed
        long extra = detail::extra_working_bits(sr, si, a.real().to_double());
        mpfr_prec_t wp = ctx.working() + extra;
        long m = 1 - static_cast<long>(sr);
        CoreResult r = hurwitz_core(s, a, m + 8, wp, ctx, false);
        return finish(r.value, r.terms, r.tail, r.converged, ctx);
    }

    double needed = static_cast<double>(ctx.working()) + 16.0 + 4.7 * std::fabs(si);
    detail::ShiftPlan plan = detail::plan_shift(needed, a.real().to_double(), ctx.max_terms);
    mpfr_prec_t wp = ctx.working() + detail::extra_working_bits(sr, si, plan.a_target);

    MPComplex aw = a.rounded_to(wp);
    MPComplex sw = s.rounded_to(wp);
    MPComplex prefix(0L, wp);
    for (long j = 0; j < plan.shift; ++j) prefix += exp(-sw * log(aw + j));

    CoreResult r = hurwitz_core(sw, aw + plan.shift, plan.k_budget, wp, ctx, false);
    return finish(prefix + r.value, r.terms, r.tail, r.converged, ctx);
}

SeriesEvaluation riemann_zeta(const MPComplex& s, const PrecisionContext& ctx) {
    return hurwitz_zeta(s, MPComplex(1L, ctx.working()), ctx);
}

SeriesEvaluation polygamma_series(int n, const MPComplex& x, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("polygamma_series: requires n >= 1");
    if (!(x.real() > 0)) throw DomainError("polygamma_series: requires Re x > 0");
    SeriesEvaluation z = hurwitz_zeta(MPComplex(static_cast<long>(n) + 1, ctx.working()), x, ctx);
    MPReal f(factorial(static_cast<unsigned long>(n)), ctx.working());
    MPComplex v = z.value * f;
    if (n % 2 == 0) v = -v;  // (-1)^(n+1) n!
    return {v, z.terms_used, z.tail_estimate * f, z.converged};
}

SeriesEvaluation hurwitz_zeta_alt(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx) {
    if (!(a.real() > 0)) throw DomainError("hurwitz_zeta_alt: requires Re a > 0");
    if (exact_nonpositive_int(s)) throw PoleError("hurwitz_zeta_alt: Gamma(s) pole at nonpositive integer s");

    const double sr = s.real().to_double();
    const double si = s.imag().to_double();
    double needed = static_cast<double>(ctx.working()) + 16.0 + 4.7 * std::fabs(si);
    detail::ShiftPlan plan = detail::plan_shift(needed, a.real().to_double(), ctx.max_terms);
    mpfr_prec_t wp = ctx.working() + detail::extra_working_bits(sr, si, plan.a_target);
    PrecisionContext ictx = inner_ctx(wp, ctx);

    MPComplex sw = s.rounded_to(wp);
    MPComplex aw = a.rounded_to(wp);
    MPComplex as = aw + plan.shift;

    ExactCore& core = exact_core();
    // R_k = Gamma(s+k)/Gamma(s+k+a'), filled like the main table with w = s
    long kmax = std::min<long>(ctx.max_terms, std::max<long>(plan.k_budget * 2, 64));
    std::vector<MPComplex> R(static_cast<std::size_t>(kmax) + 1, MPComplex(0L, wp));
    {
        long kstar = 0;
        if (sr < 1) kstar = static_cast<long>(std::ceil(1.0 - sr));
        if (kstar > kmax) kstar = kmax;
        MPComplex base = exp(log_gamma(sw + kstar, ictx) - log_gamma(sw + kstar + as, ictx));
        R[static_cast<std::size_t>(kstar)] = base.rounded_to(wp);
        for (long k = kstar; k < kmax; ++k) R[k + 1] = R[k] * (sw + k) / (sw + k + as);
        for (long k = kstar; k > 0; --k) R[k - 1] = R[k] * (sw + (k - 1) + as) / (sw + (k - 1));
    }

    MPComplex sum(0L, wp);
    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPReal fact(1L, wp);
    MPReal peak(0L, wp), last_mag(0L, wp);
    int small_run = 0;
    bool converged = false;
    long terms = 0;
    for (long k = 1; k <= kmax; ++k) {
        fact *= k;
        MPComplex br = (sw - 1L) * eval_poly(core.norlund_poly_over_alpha(static_cast<std::size_t>(k)), sw + (k - 1)) -
                       sw * eval_poly(core.norlund_poly_over_alpha(static_cast<std::size_t>(k)), sw + k);
        MPComplex t = br * R[static_cast<std::size_t>(k)] / fact;
        if ((k & 1) == 0) t = -t;  // (-1)^(k-1)
        sum += t;
        ++terms;
        last_mag = abs(t);
        peak = max(peak, last_mag);
        MPReal scale = max(abs(sum), ldexp2(peak, -24));
        if (last_mag <= thr * scale) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
    }
    MPComplex val = exp(log_gamma(as, ictx)).rounded_to(wp) * sum;

    // unshift: F(s,a) = F(s,a+M) + Gamma(s)[s sum_j (a+j)^(-s-1) + (a+M)^(-s) - a^(-s)]
    if (plan.shift > 0) {
        MPComplex corr(0L, wp);
        for (long j = 0; j < plan.shift; ++j) corr += exp(-(sw + 1L) * log(aw + j));
        corr = corr * sw + exp(-sw * log(as)) - exp(-sw * log(aw));
        val += gamma(sw, ictx).rounded_to(wp) * corr;
    }
    return finish(val, terms, last_mag * (terms + 1), converged, ctx);
}

SeriesEvaluation power_gamma_series(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx) {
    if (!(a.real() > 0)) throw DomainError("power_gamma_series: requires Re a > 0");
    if (exact_nonpositive_int(s)) throw PoleError("power_gamma_series: Gamma(s) pole");

    mpfr_prec_t wp = ctx.working() + 32;
    PrecisionContext ictx = inner_ctx(wp, ctx);
    MPComplex sw = s.rounded_to(wp);
    MPComplex aw = a.rounded_to(wp);
    ExactCore& core = exact_core();

    long kmax = ctx.max_terms;
    // R_k = Gamma(s+k)/Gamma(s+k+a) via incremental updates from k = kstar
    long kstar = 0;
    double sre = s.real().to_double();
    if (sre < 1) kstar = static_cast<long>(std::ceil(1.0 - sre));
    MPComplex R0 = exp(log_gamma(sw + kstar, ictx) - log_gamma(sw + kstar + aw, ictx)).rounded_to(wp);

    // k = 0 term with the (s-1)/(s-1) cancellation applied: Gamma(a)Gamma(s)/Gamma(s+a)
    MPComplex ga = exp(log_gamma(aw, ictx)).rounded_to(wp);
    MPComplex Rk = R0;
    for (long k = kstar; k > 0; --k) Rk = Rk * (sw + (k - 1) + aw) / (sw + (k - 1));
    MPComplex sum = ga * Rk;  // k = 0
    long terms = 1;

    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPReal fact(1L, wp);
    MPReal peak = abs(sum), last_mag(0L, wp);
    int small_run = 0;
    bool converged = false;
    MPComplex sm1 = sw - 1L;
    for (long k = 1; k <= kmax; ++k) {
        Rk = Rk * (sw + (k - 1)) / (sw + (k - 1) + aw);
        fact *= k;
        MPComplex q = eval_poly(core.norlund_poly_over_alpha(static_cast<std::size_t>(k)), sw + (k - 1));
        MPComplex t = sm1 * q * ga * Rk / fact;
        if (k & 1) t = -t;
        sum += t;
        ++terms;
        last_mag = abs(t);
        peak = max(peak, last_mag);
        MPReal scale = max(abs(sum), ldexp2(peak, -24));
        if (last_mag <= thr * scale) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
    }
    return finish(sum, terms, last_mag * (terms + 1), converged, ctx);
}

SeriesEvaluation digamma_series(const MPComplex& a, const PrecisionContext& ctx) {
    if (!(a.real() > 0)) throw DomainError("digamma_series: requires Re a > 0");
    double needed = static_cast<double>(ctx.working()) + 16.0;
    detail::ShiftPlan plan = detail::plan_shift(needed, a.real().to_double(), ctx.max_terms);
    mpfr_prec_t wp = ctx.working() + detail::extra_working_bits(1.0, a.imag().to_double(), plan.a_target);

    MPComplex aw = a.rounded_to(wp);
    MPComplex as = aw + plan.shift;
    ExactCore& core = exact_core();

    MPComplex sum(0L, wp);
    MPComplex poch(1L, wp);  // (a')_n
    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPReal peak(0L, wp), last_mag(0L, wp);
    int small_run = 0;
    bool converged = false;
    long n = 0;
    for (n = 1; n <= ctx.max_terms; ++n) {
        poch *= (as + (n - 1));
        BigRational c = core.norlund_number(static_cast<std::size_t>(n)) +
                        BigRational(static_cast<long>(n)) * core.norlund_number(static_cast<std::size_t>(n) - 1);
        MPComplex t = MPReal(c, wp) / (poch * n);
        if (n & 1) t = -t;
        sum += t;
        last_mag = abs(t);
        peak = max(peak, last_mag);
        MPReal scale = max(abs(sum), ldexp2(peak, -24));
        if (last_mag <= thr * scale) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
        if (n > plan.k_budget * 2 && n > 128) break;
    }
    // sum = psi(a') - ln a'; unshift to psi(a) - ln a
    MPComplex val = sum + log(as) - log(aw);
    for (long j = 0; j < plan.shift; ++j) val -= 1L / (aw + j);
    return finish(val, n, last_mag * (n + 1), converged, ctx);
}

SeriesEvaluation log_gamma_series(const MPComplex& x, const PrecisionContext& ctx) {
    if (!(x.real() > -1)) throw DomainError("log_gamma_series: requires Re x > -1");
    mpfr_prec_t wp = ctx.working() + 16;
    PrecisionContext ictx = inner_ctx(wp, ctx);
    MPComplex xw = x.rounded_to(wp);

    MPComplex psi_x1 = digamma(xw + 1L, ictx).rounded_to(wp);
    MPReal euler = const_euler(wp);
    // k = 0: x[psi(x+1) + gamma - 1]; k = 1: (1/2)[psi(x+1) - x + gamma]
    MPComplex sum = xw * (psi_x1 + (euler - 1L));
    sum += (psi_x1 - xw + euler) / 2L;
    long terms = 2;

    auto b = detail::norlund_b_float(64, wp);
    MPComplex G = 1L / (xw + 1L);  // Gamma(k-1)Gamma(x+1)/Gamma(k+x) at k = 2
    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPReal peak = abs(sum), last_mag(0L, wp);
    int small_run = 0;
    bool converged = false;
    long k = 2;
    for (; k <= ctx.max_terms; ++k) {
        if (b->size() <= static_cast<std::size_t>(k)) b = detail::norlund_b_float(static_cast<std::size_t>(k) * 2, wp);
        MPReal pk = detail::p_float(*b, static_cast<std::size_t>(k));  // p_{k+1}
        MPComplex bracket = MPComplex(MPReal(BigRational(1, k - 1), wp) ) - xw / k - G;
        MPComplex t = bracket * pk;
        sum += t;
        ++terms;
        last_mag = abs(t);
        peak = max(peak, last_mag);
        MPReal scale = max(abs(sum), ldexp2(peak, -16) + ctx.eps_working());
        if (last_mag <= thr * scale) {
            if (++small_run >= ctx.tail_confirm) {
                converged = true;
                break;
            }
        } else
            small_run = 0;
        G = G * (k - 1) / (xw + k);
    }
    return finish(sum, terms, last_mag * (k + 1), converged, ctx);
}

SeriesEvaluation log_ratio_series(const MPComplex& x, const PrecisionContext& ctx, LogRatioVariant v) {
    if (!(x.real() > 0)) throw DomainError("log_ratio_series: requires Re x > 0");
    mpfr_prec_t wp = ctx.working() + 16;
    MPComplex xw = x.rounded_to(wp);
    auto b = detail::norlund_b_float(64, wp);

    MPComplex sum(0L, wp);
    MPReal thr = pow2(-static_cast<long>(ctx.working()) - 2, wp);
    MPReal peak(0L, wp), last_mag(0L, wp);
    int small_run = 0;
    bool converged = false;
    long terms = 0;
    long r = 0;

    if (v == LogRatioVariant::inverse_factorial) {
        // sum_r (-1)^r B_r^(r) / (x+1)_{r+1} with B_r^(r) = b_r r!
        MPComplex u = 1L / (xw + 1L);  // r!/(x+1)_{r+1} at r = 0
        for (r = 0; r <= ctx.max_terms; ++r) {
            if (b->size() <= static_cast<std::size_t>(r)) b = detail::norlund_b_float(static_cast<std::size_t>(r) * 2, wp);
            MPComplex t = u * (*b)[static_cast<std::size_t>(r)];
            if (r & 1) t = -t;
            sum += t;
            ++terms;
            last_mag = abs(t);
            peak = max(peak, last_mag);
            MPReal scale = max(abs(sum), ldexp2(peak, -16));
            if (last_mag <= thr * scale) {
                if (++small_run >= ctx.tail_confirm) {
                    converged = true;
                    break;
                }
            } else
                small_run = 0;
            u = u * (r + 1) / (xw + (r + 2));
        }
    } else {
        // 1/x - 1/(2x(x+1)) - (1/x) sum_{r>=2} r! p_{r+1} / (x+1)_r
        sum = 1L / xw - 1L / (xw * (xw + 1L) * 2L);
        terms = 2;
        MPComplex vr = 2L / ((xw + 1L) * (xw + 2L));  // r!/(x+1)_r at r = 2
        for (r = 2; r <= ctx.max_terms; ++r) {
            if (b->size() <= static_cast<std::size_t>(r)) b = detail::norlund_b_float(static_cast<std::size_t>(r) * 2, wp);
            MPReal pk = detail::p_float(*b, static_cast<std::size_t>(r));  // p_{r+1}
            MPComplex t = -(vr * pk) / xw;
            sum += t;
            ++terms;
            last_mag = abs(t);
            peak = max(peak, last_mag);
            MPReal scale = max(abs(sum), ldexp2(peak, -16));
            if (last_mag <= thr * scale) {
                if (++small_run >= ctx.tail_confirm) {
                    converged = true;
                    break;
                }
            } else
                small_run = 0;
            vr = vr * (r + 1) / (xw + (r + 1));
        }
    }
    return finish(sum, terms, last_mag * (r + 2), converged, ctx);
}

EulerSumResult euler_sum_zeta3(long N, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("euler_sum_zeta3: requires N >= 1");
    mpfr_prec_t wp = ctx.working();
    MPReal sum(0L, wp), H(0L, wp);
    for (long k = 1; k <= N; ++k) {
        H += MPReal(1L, wp) / k;
        sum += H / ((k + 1) * (k + 1));
    }
    // tail ~ int (ln x + gamma + 1/x...) / x^2 = (ln N + gamma + 1)/N
    MPReal tail = (log(MPReal(N, wp)) + const_euler(wp) + 1L) / N;
    return {sum, N, tail};
}

EulerSumResult euler_sum_zeta4(long N, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("euler_sum_zeta4: requires N >= 1");
    mpfr_prec_t wp = ctx.working();
    MPReal sum(0L, wp), H(0L, wp), H2(0L, wp);
    for (long k = 1; k <= N; ++k) {
        MPReal inv = MPReal(1L, wp) / k;
        H += inv;
        H2 += inv * inv;
        sum += (H * H - H2) / ((k + 1) * (k + 1));
    }
    sum = sum / 2L;
    MPReal L = log(MPReal(N, wp)) + const_euler(wp);
    MPReal tail = (L * L + L * 2L + 2L) / (2L * MPReal(N, wp));
    return {sum, N, tail};
}

MPComplex alpha_coeff(std::size_t k, const MPComplex& s, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working();
    if (k == 0) return MPComplex(1L, wp);
    MPComplex sw = s.rounded_to(wp);
    MPComplex q = eval_poly(exact_core().norlund_poly_over_alpha(k), sw + (static_cast<long>(k) - 1));
    MPComplex v = (sw - 1L) * q / MPReal(factorial(k), wp);
    return (k & 1) ? -v : v;
}

MPComplex alpha_coeff_prime(std::size_t k, const MPComplex& s, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working();
    if (k == 0) return MPComplex(0L, wp);
    MPComplex sw = s.rounded_to(wp);
    MPComplex v = eval_poly(exact_core().alpha_prime_poly(k), sw + (static_cast<long>(k) - 1)) /
                  MPReal(factorial(k), wp);
    return (k & 1) ? -v : v;
}

MPReal partial_a_identity_check(const MPComplex& s, const MPComplex& a, const PrecisionContext& ctx) {
    if (!(a.real() > 0)) throw DomainError("partial_a_identity_check: requires Re a > 0");
    if (s.is_real() && (s.real() == 1 || s.real() == 0)) throw DomainError("partial_a_identity_check: s != 0, 1");

    const double sr = s.real().to_double();
    const double si = s.imag().to_double();
    double needed = static_cast<double>(ctx.working()) + 16.0 + 4.7 * std::fabs(si);
    detail::ShiftPlan plan = detail::plan_shift(needed, a.real().to_double(), ctx.max_terms);
    mpfr_prec_t wp = ctx.working() + detail::extra_working_bits(sr, si, plan.a_target);
    PrecisionContext ictx = inner_ctx(wp, ctx);

    MPComplex sw = s.rounded_to(wp);
    MPComplex aw = a.rounded_to(wp);
    MPComplex as = aw + plan.shift;

    // D(s,a') = psi(a') zeta(s,a') - S_psi(s,a')
    CoreResult plain = hurwitz_core(sw, as, plan.k_budget, wp, ctx, false);
    CoreResult withp = hurwitz_core(sw, as, plan.k_budget, wp, ctx, true);
    MPComplex D = digamma(as, ictx).rounded_to(wp) * plain.value - withp.value;
    // unshift: D(s,a) = D(s,a+M) - s sum_j (a+j)^(-s-1)
    MPComplex corr(0L, wp);
    for (long j = 0; j < plan.shift; ++j) corr += exp(-(sw + 1L) * log(aw + j));
    D -= sw * corr;

    SeriesEvaluation z1 = hurwitz_zeta(sw + 1L, aw, ctx);
    MPComplex rhs = -sw * z1.value.rounded_to(wp);
    MPReal scale = max(max(abs(D), abs(rhs)), pow2(-static_cast<long>(ctx.working()) / 2, wp));
    return (abs(D - rhs) / scale).rounded_to(ctx.working());
}

}  // namespace norzeta
