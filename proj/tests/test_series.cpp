#include <doctest.h>

#include <cmath>

#include "norzeta/em_oracle.hpp"
#include "norzeta/exact_core.hpp"
#include "norzeta/series.hpp"
#include "norzeta/special.hpp"

using namespace norzeta;

namespace {
const PrecisionContext ctx128(128);
double rel(const MPComplex& got, const MPComplex& want) {
    MPReal m = abs(want);
    if (m.is_zero()) return abs(got).to_double();
    return (abs(got - want) / m).to_double();
}
}  // namespace

TEST_CASE("hurwitz series special values") {
    mpfr_prec_t wp = ctx128.working();
    SUBCASE("zeta(0, 3/4) = -1/4") {
        SeriesEvaluation z = hurwitz_zeta(MPComplex(0L, wp), MPComplex(MPReal(rat(3, 4), wp)), ctx128);
        CHECK(z.converged);
        CHECK(abs(z.value - MPComplex(MPReal(rat(-1, 4), wp))).to_double() <= 1e-36);
    }
    SUBCASE("zeta(1-m, a) = -B_m(a)/m") {
        for (unsigned m = 1; m <= 8; ++m) {
            BigRational av = rat(7, 2);
            SeriesEvaluation z =
                hurwitz_zeta(MPComplex(1L - static_cast<long>(m), wp), MPComplex(MPReal(av, wp)), ctx128);
            BigRational want = -exact_core().bernoulli_poly(m, av) / BigRational(static_cast<long>(m));
            CHECK(z.converged);
            CHECK(rel(z.value, MPComplex(MPReal(want, wp))) <= std::pow(2.0, -120));
        }
    }
    SUBCASE("oracle point (2.5, 1.25)") {
        SeriesEvaluation z = hurwitz_zeta(MPComplex(2.5, 0.0, wp), MPComplex(1.25, 0.0, wp), ctx128);
        MPComplex ref = hurwitz_zeta_oracle(MPComplex(2.5, 0.0, wp), MPReal(1.25, wp), ctx128);
        CHECK(z.converged);
        CHECK(rel(z.value, ref) <= std::pow(2.0, -120));
    }
    SUBCASE("pole and domain errors") {
        CHECK_THROWS_AS(hurwitz_zeta(MPComplex(1L, wp), MPComplex(2L, wp), ctx128), PoleError);
        CHECK_THROWS_AS(hurwitz_zeta(MPComplex(2L, wp), MPComplex(-1L, wp), ctx128), DomainError);
    }
    SUBCASE("near-pole laurent fallback") {
        MPComplex s(MPReal(1L, wp) + pow2(-12, wp));
        SeriesEvaluation z = hurwitz_zeta(s, MPComplex(1L, wp), ctx128);
        // 1/(s-1) + gamma + O(h)
        MPComplex crude = MPComplex(pow2(12, wp)) + MPComplex(const_euler(wp));
        CHECK((abs(z.value - crude) / abs(z.value)).to_double() <= 1e-3);
    }
}

TEST_CASE("riemann zeta through the series") {
    mpfr_prec_t wp = ctx128.working();
    SeriesEvaluation z2 = riemann_zeta(MPComplex(2L, wp), ctx128);
    MPReal pi = const_pi(wp);
    CHECK(rel(z2.value, MPComplex(pi * pi / 6L)) <= std::pow(2.0, -120));
    for (long n = 1; n <= 5; ++n) {
        SeriesEvaluation z = riemann_zeta(MPComplex(-2 * n, wp), ctx128);
        CHECK(abs(z.value).to_double() <= std::pow(2.0, -120));
    }
    SeriesEvaluation zm1 = riemann_zeta(MPComplex(-1L, wp), ctx128);
    CHECK(abs(zm1.value - MPComplex(MPReal(rat(-1, 12), wp))).to_double() <= std::pow(2.0, -120));
}

TEST_CASE("terms and tail bookkeeping") {
    mpfr_prec_t wp = ctx128.working();
    SeriesEvaluation z = hurwitz_zeta(MPComplex(3.5, 0.0, wp), MPComplex(0.75, 0.0, wp), ctx128);
    CHECK(z.converged);
    CHECK(z.terms_used >= 2);
    CHECK(z.terms_used <= ctx128.max_terms);
    CHECK(z.tail_estimate >= 0);
    CHECK((z.tail_estimate <= ctx128.eps_target() * abs(z.value)));
    SUBCASE("value_or_throw on a non-converged evaluation") {
        PrecisionContext tiny(128, 64, 4, 3);
        SeriesEvaluation bad = hurwitz_zeta(MPComplex(2.5, 0.0, tiny.working()),
                                            MPComplex(0.75, 0.0, tiny.working()), tiny);
        CHECK(!bad.converged);
        CHECK_THROWS_AS(bad.value_or_throw(), NonConvergenceError);
    }
}

TEST_CASE("bracket series (the alternative representation)") {
    mpfr_prec_t wp = ctx128.working();
    SUBCASE("against composed reference at (1.5, 2)") {
        MPComplex s(1.5, 0.0, wp);
        SeriesEvaluation got = hurwitz_zeta_alt(s, MPComplex(2L, wp), ctx128);
        MPComplex z = hurwitz_zeta_oracle(s + 1L, MPReal(2L, wp), ctx128);
        MPComplex want = gamma(s, ctx128) * (s * z - exp(-s * MPComplex(log(MPReal(2L, wp)))));
        CHECK(rel(got.value, want) <= std::pow(2.0, -118));
    }
    SUBCASE("s = 1, a = 1 gives pi^2/6 - 1") {
        SeriesEvaluation got = hurwitz_zeta_alt(MPComplex(1L, wp), MPComplex(1L, wp), ctx128);
        MPReal pi = const_pi(wp);
        CHECK(rel(got.value, MPComplex(pi * pi / 6L - 1L)) <= std::pow(2.0, -118));
    }
    CHECK_THROWS_AS(hurwitz_zeta_alt(MPComplex(2L, wp), MPComplex(-2L, wp), ctx128), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta_alt(MPComplex(0L, wp), MPComplex(1L, wp), ctx128), PoleError);
}

TEST_CASE("polygamma through the series") {
    mpfr_prec_t wp = ctx128.working();
    SeriesEvaluation t1 = polygamma_series(1, MPComplex(1L, wp), ctx128);
    MPReal pi = const_pi(wp);
    CHECK(rel(t1.value, MPComplex(pi * pi / 6L)) <= std::pow(2.0, -118));

    // term-for-term match with the inverse-factorial trigamma series
    PrecisionContext low(64);
    mpfr_prec_t lw = low.working();
    MPReal x(1.3, lw);
    MPReal direct(0L, lw);
    for (long k = 0; k < 400; ++k) {
        direct += exp(lngamma_mpfr(MPReal(k + 1, lw)) + lngamma_mpfr(x) - lngamma_mpfr(x + k + 1)) / (k + 1);
    }
    SeriesEvaluation got = polygamma_series(1, MPComplex(x), low);
    CHECK((abs(got.value - MPComplex(direct)) / abs(got.value)).to_double() <= 1e-9);
}

TEST_CASE("digamma series") {
    mpfr_prec_t wp = ctx128.working();
    SeriesEvaluation d1 = digamma_series(MPComplex(1L, wp), ctx128);
    CHECK(rel(d1.value, MPComplex(-const_euler(wp))) <= std::pow(2.0, -118));
    SeriesEvaluation dq = digamma_series(MPComplex(0.25, 0.0, wp), ctx128);
    MPReal want = digamma_mpfr(MPReal(0.25, wp)) - log(MPReal(0.25, wp));
    CHECK(rel(dq.value, MPComplex(want)) <= std::pow(2.0, -118));
    CHECK_THROWS_AS(digamma_series(MPComplex(-1L, wp), ctx128), DomainError);
}

TEST_CASE("power gamma series") {
    PrecisionContext low(48);
    mpfr_prec_t lw = low.working();
    SeriesEvaluation p1 = power_gamma_series(MPComplex(1L, lw), MPComplex(1L, lw), low);
    CHECK(p1.converged);
    CHECK(rel(p1.value, MPComplex(1L, lw)) <= 1e-12);
    SeriesEvaluation p2 = power_gamma_series(MPComplex(2L, lw), MPComplex(3L, lw), low);
    CHECK(rel(p2.value, MPComplex(MPReal(rat(1, 9), lw))) <= 1e-10);
}

TEST_CASE("log-gamma and log-ratio series converge to the right targets") {
    PrecisionContext low(32, 64, 3000, 3);
    mpfr_prec_t lw = low.working();
    SeriesEvaluation l0 = log_gamma_series(MPComplex(0L, lw), low);
    CHECK(l0.converged);
    CHECK(abs(l0.value).to_double() == 0.0);
    SeriesEvaluation lh = log_gamma_series(MPComplex(MPReal(0.5, lw)), low);
    MPReal want = lngamma_mpfr(MPReal(1.5, lw));
    CHECK(abs(lh.value - MPComplex(want)).to_double() <= 1e-5);
    CHECK(abs(lh.value - MPComplex(want)) <= lh.tail_estimate * 10L);

    SeriesEvaluation r1 = log_ratio_series(MPComplex(1L, lw), low, LogRatioVariant::inverse_factorial);
    CHECK(abs(r1.value - MPComplex(const_log2(lw))) <= r1.tail_estimate * 10L);
    SeriesEvaluation r2 = log_ratio_series(MPComplex(3L, lw), low, LogRatioVariant::p_constant);
    MPReal l43 = log(MPReal(rat(4, 3), lw));
    CHECK(abs(r2.value - MPComplex(l43)) <= r2.tail_estimate * 10L);
}

TEST_CASE("euler sums") {
    PrecisionContext ctx(96);
    EulerSumResult e1 = euler_sum_zeta3(1, ctx);
    CHECK(abs(e1.value - MPReal(rat(1, 4), ctx.working())).to_double() == 0.0);
    // reindexing identity: 1/4 + sum_{k=1}^{N-1} H_{k+1}/(k+2)^2 equals the partial sum
    mpfr_prec_t wp = ctx.working();
    const long N = 57;
    MPReal alt(rat(1, 4), wp);
    MPReal H(1L, wp);
    for (long k = 1; k < N; ++k) {
        H += MPReal(1L, wp) / (k + 1);
        alt += H / ((k + 2) * (k + 2));
    }
    EulerSumResult eN = euler_sum_zeta3(N, ctx);
    CHECK(abs(alt - eN.value).to_double() <= 1e-25);
    SUBCASE("monotone in N") {
        CHECK(euler_sum_zeta3(10, ctx).value < euler_sum_zeta3(11, ctx).value);
        CHECK(euler_sum_zeta4(10, ctx).value < euler_sum_zeta4(11, ctx).value);
    }
}

TEST_CASE("rubinstein coefficients at complex arguments") {
    mpfr_prec_t wp = ctx128.working();
    // alpha_0(s) = 1, alpha_1(s) = (s-1)/2 ... check against the generating function numerically:
    // (-ln(1-t)/t)^(s-1) ~ sum alpha_k t^k at small t
    MPComplex s(1.8, 0.7, wp);
    MPReal t(0.125, wp);
    MPComplex acc(0L, wp);
    MPReal tp(1L, wp);
    for (std::size_t k = 0; k <= 48; ++k) {
        acc += alpha_coeff(k, s, ctx128) * tp;
        tp *= t;
    }
    MPComplex base(-log(1L - t) / t);
    MPComplex ref = exp((s - 1L) * log(base));
    CHECK((abs(acc - ref)).to_double() <= std::pow(0.125, 47));

    // derivative matches a central difference in s
    MPReal h = pow2(-40, wp);
    for (std::size_t k : {1ul, 3ul, 7ul}) {
        MPComplex fp = alpha_coeff(k, s + MPComplex(h), ctx128);
        MPComplex fm = alpha_coeff(k, s - MPComplex(h), ctx128);
        MPComplex fd = (fp - fm) / (h * 2L);
        MPComplex ex = alpha_coeff_prime(k, s, ctx128);
        CHECK((abs(fd - ex)).to_double() <= 1e-20);
    }
}

TEST_CASE("partial-a derivative identity residual") {
    mpfr_prec_t wp = ctx128.working();
    CHECK(partial_a_identity_check(MPComplex(2L, wp), MPComplex(1L, wp), ctx128).to_double() <=
          std::pow(2.0, -120));
    CHECK(partial_a_identity_check(MPComplex(1.5, 0.0, wp), MPComplex(0.5, 0.0, wp), ctx128).to_double() <=
          std::pow(2.0, -120));
    CHECK(partial_a_identity_check(MPComplex(3L, wp), MPComplex(2L, wp), ctx128).to_double() <=
          std::pow(2.0, -120));
    CHECK_THROWS_AS(partial_a_identity_check(MPComplex(0L, wp), MPComplex(1L, wp), ctx128), DomainError);
}
