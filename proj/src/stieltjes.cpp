#include "norzeta/stieltjes.hpp"

#include <cmath>
#include <vector>

#include "norzeta/em_oracle.hpp"
#include "norzeta/exact_core.hpp"
#include "norzeta/quadrature.hpp"
#include "norzeta/special.hpp"
#include "series_plan.hpp"
#include "stieltjes_series.hpp"
#include "tail_sum.hpp"

namespace norzeta {

namespace {

StieltjesResult make_result(int order, const MPReal& a, const MPReal& v, StieltjesMethod m,
                            const MPReal& tail, const PrecisionContext& ctx) {
    StieltjesResult r;
    r.order = order;
    r.a = a.rounded_to(ctx.working());
    r.value = v.rounded_to(ctx.working());
    r.method = m;
    r.tail_estimate = tail.rounded_to(ctx.working());
    return r;
}

}  // namespace

MPReal gamma0(const MPReal& a, const PrecisionContext& ctx) {
    if (!(a > 0)) throw DomainError("gamma0: requires a > 0");
    return -digamma(a, ctx);
}

StieltjesResult gamma1(const MPReal& a, const PrecisionContext& ctx) {
    SeriesEvaluation e = detail::gamma1_series_c(MPComplex(a), ctx);
    return make_result(1, a, e.value.real(), StieltjesMethod::series, e.tail_estimate, ctx);
}

StieltjesResult gamma2(const MPReal& a, const PrecisionContext& ctx) {
    SeriesEvaluation e = detail::gamma2_series_c(MPComplex(a), ctx);
    return make_result(2, a, e.value.real(), StieltjesMethod::series, e.tail_estimate, ctx);
}

StieltjesResult gamma1_binomial(const MPReal& a, const PrecisionContext& ctx) {
    if (!(a > 0)) throw DomainError("gamma1_binomial: requires a > 0");
    const long n_cap = 60;
    // the inner difference loses ~n bits and the reachable accuracy saturates
    // at -log2 Beta(n_cap, A); shift only as far as the target asks
    double needed = std::min<double>(static_cast<double>(ctx.target_precision) + 12.0, 104.0);
    double A = std::max(1.0, a.to_double());
    while (detail::neg_log2_beta(static_cast<double>(n_cap), A) < needed) A += 1.0;
    long M = a.to_double() < A ? static_cast<long>(std::ceil(A - a.to_double())) : 0;
    long loss = n_cap + static_cast<long>(A * std::log2(static_cast<double>(n_cap)) / 2.0) + 64;
    mpfr_prec_t wp = ctx.working() + loss;

    MPReal as = a.rounded_to(wp) + M;
    // f_j = ln(a'+j)/(a'+j)
    std::vector<MPReal> f;
    f.reserve(n_cap);
    for (long j = 0; j < n_cap; ++j) {
        MPReal aj = as + j;
        f.push_back(log(aj) / aj);
    }
    ExactCore& core = exact_core();
    MPReal total(0L, wp);
    MPReal last(0L, wp);
    for (long n = 1; n <= n_cap; ++n) {
        MPReal inner(0L, wp);
        for (long k = 0; k < n; ++k) {
            MPReal t = MPReal(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k)), wp) * f[k];
            if (k & 1)
                inner -= t;
            else
                inner += t;
        }
        MPReal coef = (n == 1) ? MPReal(BigRational(1, 2), wp)
                               : MPReal(core.p_constant(static_cast<std::size_t>(n) + 1), wp);
        last = coef * inner;
        total += last;
    }
    MPReal lg = log(as);
    MPReal val = total - lg * lg / 2L;
    MPReal a0 = a.rounded_to(wp);
    for (long j = M - 1; j >= 0; --j) {
        MPReal aj = a0 + j;
        val += log(aj) / aj;
    }
    MPReal tail = abs(last) * n_cap + abs(val) * pow2(-static_cast<long>(needed) + 4, wp);
    return make_result(1, a, val, StieltjesMethod::binomial_series, tail, ctx);
}

namespace {

// F(v) = sum_{j>=0} (v+1)_j / ((j+1)^2 (a+1)_j), the 4F3 series at unit
// argument, with the polynomial tail resummed through zeta tails.
MPReal hyp_sum(const MPReal& v, const MPReal& a, long J, const PrecisionContext& octx) {
    mpfr_prec_t wp = v.prec();
    MPReal s(0L, wp);
    MPReal r(1L, wp);  // (v+1)_j/(a+1)_j
    MPReal tJm1(0L, wp), tJ(0L, wp);
    for (long j = 0; j < J; ++j) {
        MPReal t = r / ((j + 1) * (j + 1));
        s += t;
        if (j == J - 2) tJm1 = t;
        if (j == J - 1) tJ = t;
        r *= (v + (j + 1)) / (a + (j + 1));
    }
    s += detail::zeta_tail_two_point(tJm1, tJ, J, a + 2L - v, octx);
    return s;
}

}  // namespace

StieltjesResult gamma1_hyp(const MPReal& a, const PrecisionContext& ctx) {
    if (!(a > 0)) throw DomainError("gamma1_hyp: requires a > 0");
    mpfr_prec_t wp = ctx.working() + 32;
    PrecisionContext ictx(std::max<mpfr_prec_t>(24, wp - 64), 64, ctx.max_terms, ctx.tail_confirm);
    MPReal aw = a.rounded_to(wp);
    long J = std::max<long>(1200, ctx.target_precision * 4);
    int nodes = std::max<int>(32, static_cast<int>(ctx.target_precision / 3));

    MPReal I = gauss_legendre_01(
        [&](const MPReal& v) { return v * hyp_sum(v.rounded_to(wp), aw, J, ictx); }, nodes, wp);

    MPReal psi = digamma(aw, ictx).rounded_to(wp);
    MPReal psi1 = polygamma(1, aw, ictx).rounded_to(wp);
    MPReal val = (psi1 - psi * psi) / 2L - I / aw;
    // tail fit residual ~ J^-(a+3) per node; quadrature error negligible for
    // the analytic integrand
    MPReal tail = pow(MPReal(J, wp), -(aw + 2L)) * 16L;
    return make_result(1, a, val, StieltjesMethod::quadrature, tail, ctx);
}

StieltjesResult gamma1_quadrature(Gamma1Integral variant, const PrecisionContext& ctx) {
    PrecisionContext ictx = ctx.with_extra_bits(96);
    mpfr_prec_t wp = ictx.working();
    MPReal euler = const_euler(wp);
    MPReal zeta2 = zeta_mpfr_ui(2, wp);

    // both integrands evaluated through psi(x+1), psi'(x+1); the 1/x pieces
    // cancel analytically and stay mild numerically
    Integrand f;
    if (variant == Gamma1Integral::psi_combination) {
        f = [&](const MPReal& x) {
            MPReal P = digamma(x + 1L, ictx);
            MPReal T = polygamma(1, x + 1L, ictx);
            return P * P / 2L + euler * P - T / 2L - (P + euler) / x;
        };
    } else {
        f = [&](const MPReal& x) {
            MPReal P = digamma(x + 1L, ictx);
            MPReal T = polygamma(1, x + 1L, ictx);
            return (T - P * P + (P + euler) / x * 2L) * MPReal(BigRational(-1, 2), wp);
        };
    }
    MPReal eps = pow2(-static_cast<long>(ctx.target_precision / 2) - 6, wp);
    QuadratureResult q = integrate_01(f, ictx, eps);
    MPReal val = zeta2 + q.value;
    return make_result(1, MPReal(1L, wp), val, StieltjesMethod::quadrature, q.error_estimate + eps, ctx);
}

StieltjesResult stieltjes_laurent_fit(int order, const MPReal& a, const PrecisionContext& ctx) {
    if (order < 0 || order > 2) throw DomainError("stieltjes_laurent_fit: order must be 0..2");
    if (!(a > 0)) throw DomainError("stieltjes_laurent_fit: requires a > 0");
    PrecisionContext octx = ctx.with_extra_bits(64);
    mpfr_prec_t wp = octx.working();
    MPReal aw = a.rounded_to(wp);

    // g(h) = zeta(1+h, a) - 1/h at h = +-2^-8, +-2^-9, +-2^-10
    auto g = [&](long e, int sign) {
        MPReal h = pow2(e, wp);
        if (sign < 0) h = -h;
        MPComplex z = hurwitz_zeta_oracle(MPComplex(MPReal(1L, wp) + h), aw, octx);
        return z.real() - 1L / h;
    };
    MPReal E[3], D[3];
    for (int i = 0; i < 3; ++i) {
        long e = -8 - i;
        MPReal gp = g(e, +1), gm = g(e, -1);
        E[i] = (gp + gm) / 2L;
        D[i] = -(gp - gm) / (pow2(e, wp) * 2L);
    }
    MPReal value(0L, wp), err(0L, wp);
    if (order == 0) {
        MPReal r1 = (4L * E[1] - E[0]) / 3L;
        MPReal r2 = (4L * E[2] - E[1]) / 3L;
        value = (16L * r2 - r1) / 15L;
        err = abs(r2 - r1);
    } else if (order == 1) {
        MPReal r1 = (4L * D[1] - D[0]) / 3L;
        MPReal r2 = (4L * D[2] - D[1]) / 3L;
        value = (16L * r2 - r1) / 15L;
        err = abs(r2 - r1);
    } else {
        // F(h) = 8(E(h) - E(h/2))/(3 h^2) = gamma_2 + O(h^2)
        MPReal h0 = pow2(-8, wp), h1 = pow2(-9, wp);
        MPReal F0 = (E[0] - E[1]) * 8L / (3L * h0 * h0);
        MPReal F1 = (E[1] - E[2]) * 8L / (3L * h1 * h1);
        value = (4L * F1 - F0) / 3L;
        err = abs(F1 - F0) / 3L;
    }
    return make_result(order, a, value, StieltjesMethod::laurent_fit, err, ctx);
}

Corollary3Report corollary3_check(const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working() + 32;
    Corollary3Report rep;

    // zeta(k) - 1 decays like 2^-k; table to negligibility
    long Kz = static_cast<long>(wp) + 16;
    std::vector<MPReal> zk(static_cast<std::size_t>(Kz) + 1, MPReal(0L, wp));
    for (long k = 2; k <= Kz; ++k) zk[static_cast<std::size_t>(k)] = zeta_mpfr_ui(static_cast<unsigned long>(k), wp) - 1L;
    // suffix sums T[m] = sum_{k>m} (zeta(k)-1)
    std::vector<MPReal> T(static_cast<std::size_t>(Kz) + 2, MPReal(0L, wp));
    for (long k = Kz; k >= 2; --k) T[static_cast<std::size_t>(k)] = T[static_cast<std::size_t>(k) + 1] + zk[static_cast<std::size_t>(k)];

    MPReal ln2 = const_log2(wp);
    MPReal euler = const_euler(wp);

    MPReal S1(0L, wp);  // sum (-1)^k (zeta(k)-1)/(k-1)
    for (long k = 2; k <= Kz; ++k) {
        MPReal t = zk[static_cast<std::size_t>(k)] / (k - 1);
        if (k & 1)
            S1 -= t;
        else
            S1 += t;
    }

    // delta_m = 2 sum_{k>m-2}(zeta(k)-1) - sum_{k=2}^{m-2}(zeta(k)-1)(zeta(m-k)-1)
    MPReal S2(0L, wp);
    for (long m = 4; m <= Kz; ++m) {
        MPReal prod(0L, wp);
        for (long k = 2; k <= m - 2; ++k) prod += zk[static_cast<std::size_t>(k)] * zk[static_cast<std::size_t>(m - k)];
        MPReal delta = 2L * T[static_cast<std::size_t>(m - 2)] - prod;
        if (m & 1)
            S2 -= delta / (m - 1);
        else
            S2 += delta / (m - 1);
    }
    // Abel resolution: sum_{m>=4} (-1)^m/(m-1) * inner = 1/2 - S2
    MPReal double_sum = MPReal(BigRational(1, 2), wp) - S2;

    StieltjesResult g1 = gamma1(MPReal(1L, wp), ctx);
    rep.lhs = (zeta_mpfr_ui(2, wp) - g1.value.rounded_to(wp)) * 2L;
    rep.rhs = euler * euler + 1L + 2L * (ln2 + S1) - double_sum;
    rep.residual = abs(rep.lhs - rep.rhs);

    // sum_{k>=2} (-1)^k zeta(k)/k = (1 - ln 2) + sum (-1)^k (zeta(k)-1)/k -> gamma
    MPReal aux = 1L - ln2;
    for (long k = 2; k <= Kz; ++k) {
        MPReal t = zk[static_cast<std::size_t>(k)] / k;
        if (k & 1)
            aux -= t;
        else
            aux += t;
    }
    rep.auxiliary_sum = aux;

    // lim_{x->1^-} sum_{k>=1} (-1)^(k+1) zeta(k+1) x^k = 1/2 + sum_{j>=2} (-1)^j (zeta(j)-1)
    MPReal abel = MPReal(BigRational(1, 2), wp);
    for (long j = 2; j <= Kz; ++j) {
        if (j & 1)
            abel -= zk[static_cast<std::size_t>(j)];
        else
            abel += zk[static_cast<std::size_t>(j)];
    }
    rep.abel_limit = abel;

    rep.lhs = rep.lhs.rounded_to(ctx.working());
    rep.rhs = rep.rhs.rounded_to(ctx.working());
    rep.residual = rep.residual.rounded_to(ctx.working());
    rep.auxiliary_sum = rep.auxiliary_sum.rounded_to(ctx.working());
    rep.abel_limit = rep.abel_limit.rounded_to(ctx.working());
    return rep;
}

MPReal log_sum_constant(LogSumRepr repr, const PrecisionContext& ctx) {
    PrecisionContext ictx = ctx.with_extra_bits(64);
    mpfr_prec_t wp = ictx.working();
    switch (repr) {
        case LogSumRepr::zeta_sum: {
            // ln 2 + sum_{k>=1} (-1)^(k+1) (zeta(k+1)-1)/k
            long Kz = static_cast<long>(wp) + 16;
            MPReal s = const_log2(wp);
            for (long k = 1; k <= Kz; ++k) {
                MPReal t = (zeta_mpfr_ui(static_cast<unsigned long>(k + 1), wp) - 1L) / k;
                if (k & 1)
                    s += t;
                else
                    s -= t;
            }
            return s.rounded_to(ctx.working());
        }
        case LogSumRepr::log_series: {
            // sum_j (1/j) ln(1+1/j); tail via (1/j)ln(1+1/j) = sum_m (-1)^(m+1)/(m j^(m+1))
            const long J = 48;
            MPReal s(0L, wp);
            for (long j = 1; j <= J; ++j) s += log1p(MPReal(1L, wp) / j) / j;
            MPReal aJ(J + 1, wp);
            for (long m = 1;; ++m) {
                MPComplex z = hurwitz_zeta_oracle(MPComplex(MPReal(m + 1, wp)), aJ, ictx);
                MPReal t = z.real() / m;
                if (m & 1)
                    s += t;
                else
                    s -= t;
                if (t < pow2(-static_cast<long>(wp), wp)) break;
                if (m > 200) throw NonConvergenceError("log_sum_constant: tail resummation stalled");
            }
            return s.rounded_to(ctx.working());
        }
        case LogSumRepr::digamma_integral: {
            MPReal euler = const_euler(wp);
            // integrand ~ zeta(2) e^-t; zero beyond the point where it is
            // negligible against the quadrature tolerance
            MPReal t_cut(0.694 * (static_cast<double>(ctx.target_precision) / 2 + 24), wp);
            Integrand f = [&, t_cut](const MPReal& t) {
                if (t > t_cut) return MPReal(0L, wp);
                return euler + digamma(exp(-t) + 1L, ictx);
            };
            MPReal eps = pow2(-static_cast<long>(ctx.target_precision / 2) - 6, wp);
            return integrate_semi_inf(f, ictx, eps).value.rounded_to(ctx.working());
        }
        case LogSumRepr::digamma_integral_alt: {
            MPReal euler = const_euler(wp);
            // psi(e^-t) + e^t cancels to ~zeta(2) e^-t through values of size
            // e^t; the cutoff keeps e^t 2^-wp below the tolerance as well
            MPReal t_cut(0.694 * (static_cast<double>(ctx.target_precision) / 2 + 24), wp);
            Integrand f = [&, t_cut](const MPReal& t) {
                if (t > t_cut) return MPReal(0L, wp);
                MPReal x = exp(-t);
                return euler + digamma(x, ictx) + 1L / x;
            };
            MPReal eps = pow2(-static_cast<long>(ctx.target_precision / 2) - 6, wp);
            return integrate_semi_inf(f, ictx, eps).value.rounded_to(ctx.working());
        }
    }
    throw DomainError("log_sum_constant: unknown representation");
}

MPReal eta1(const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working();
    MPReal euler = const_euler(wp);
    StieltjesResult g1 = gamma1(MPReal(1L, wp), ctx);
    return euler * euler + 2L * g1.value;
}

}  // namespace norzeta
