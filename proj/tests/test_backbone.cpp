#include <doctest.h>

#include <cmath>

#include "norzeta/em_oracle.hpp"
#include "norzeta/quadrature.hpp"
#include "norzeta/special.hpp"

using namespace norzeta;

namespace {
const PrecisionContext ctx128(128);
double ulp_err(const MPReal& got, const MPReal& want) {
    if (want.is_zero()) return abs(got).to_double();
    return (abs(got - want) / abs(want)).to_double();
}
double tol(int target_minus = 0) { return std::pow(2.0, -128 + target_minus); }
}  // namespace

TEST_CASE("gamma on the real line and the complex plane") {
    mpfr_prec_t wp = ctx128.working();
    CHECK(ulp_err(gamma(MPReal(1L, wp), ctx128), MPReal(1L, wp)) <= tol(4));
    CHECK(ulp_err(gamma(MPReal(5L, wp), ctx128), MPReal(24L, wp)) <= tol(4));
    CHECK(ulp_err(gamma(MPReal(BigRational(1, 2), wp), ctx128), sqrt(const_pi(wp))) <= tol(4));
    CHECK_THROWS_AS(gamma(MPReal(-3L, wp), ctx128), PoleError);

    MPComplex z(2.5, 1.5, wp);
    // recurrence Gamma(z+1) = z Gamma(z)
    MPComplex g1 = gamma(z + 1L, ctx128);
    MPComplex g0 = gamma(z, ctx128);
    CHECK((abs(g1 - z * g0) / abs(g1)).to_double() <= tol(6));

    // reflection sanity in the left half-plane
    MPComplex zneg(-1.5, 0.5, wp);
    MPComplex prod = gamma(zneg, ctx128) * gamma(MPComplex(1L, wp) - zneg, ctx128);
    MPComplex want = MPComplex(const_pi(wp)) / sin_pi(zneg, wp);
    CHECK((abs(prod - want) / abs(want)).to_double() <= tol(8));
}

TEST_CASE("log gamma agrees with mpfr on the positive axis") {
    mpfr_prec_t wp = ctx128.working();
    for (double x : {0.25, 1.0, 3.75, 10.5}) {
        MPComplex lg = log_gamma(MPComplex(x, 0.0, wp), ctx128);
        MPReal ref = lngamma_mpfr(MPReal(x, wp));
        CHECK(abs(lg.real() - ref).to_double() <= tol(8) * (1 + std::fabs(ref.to_double())));
        CHECK(abs(lg.imag()).to_double() <= tol(8));
    }
    CHECK_THROWS_AS(log_gamma(MPComplex(-1.0, 2.0, ctx128.working()), ctx128), DomainError);
}

TEST_CASE("digamma and polygamma") {
    mpfr_prec_t wp = ctx128.working();
    CHECK(ulp_err(digamma(MPReal(1L, wp), ctx128), -const_euler(wp)) <= tol(4));
    // psi(n+1) = H_n - gamma
    MPReal h4 = MPReal(1L, wp) + MPReal(BigRational(1, 2), wp) + MPReal(BigRational(1, 3), wp) +
                MPReal(BigRational(1, 4), wp);
    CHECK(ulp_err(digamma(MPReal(5L, wp), ctx128), h4 - const_euler(wp)) <= tol(4));

    MPReal pi = const_pi(wp);
    CHECK(ulp_err(polygamma(1, MPReal(1L, wp), ctx128), pi * pi / 6L) <= tol(6));
    // psi''(1) = -2 zeta(3)
    CHECK(ulp_err(polygamma(2, MPReal(1L, wp), ctx128), -2L * zeta_mpfr_ui(3, wp)) <= tol(6));
    // psi'''(1) = 6 zeta(4) = pi^4/15
    CHECK(ulp_err(polygamma(3, MPReal(1L, wp), ctx128), pow(pi, 4) / 15L) <= tol(6));

    SUBCASE("functional equations on random reals") {
        for (double x : {0.37, 1.91, 4.03, 7.77, 9.99}) {
            MPReal xr(x, wp);
            MPReal lhs = digamma(xr + 1L, ctx128);
            MPReal rhs = digamma(xr, ctx128) + 1L / xr;
            CHECK(abs(lhs - rhs).to_double() <= tol(8) * (1 + std::fabs(lhs.to_double())));
            MPReal l1 = polygamma(1, xr + 1L, ctx128);
            MPReal r1 = polygamma(1, xr, ctx128) - 1L / (xr * xr);
            CHECK(abs(l1 - r1).to_double() <= tol(8) * (1 + std::fabs(l1.to_double())));
        }
    }
    SUBCASE("complex polygamma against the recurrence") {
        MPComplex z(1.2, 2.3, wp);
        for (int m = 1; m <= 4; ++m) {
            MPComplex lhs = polygamma(m, z + 1L, ctx128);
            MPComplex corr = MPComplex(MPReal(factorial(static_cast<unsigned long>(m)), wp)) /
                             pow(z, static_cast<long>(m + 1));
            if (m % 2 == 1) corr = -corr;
            MPComplex rhs = polygamma(m, z, ctx128) + corr;
            CHECK((abs(lhs - rhs) / abs(lhs)).to_double() <= tol(10));
        }
    }
}

TEST_CASE("euler-maclaurin oracle") {
    mpfr_prec_t wp = ctx128.working();
    SUBCASE("zeta(2,1) against direct summation with an integral tail bound") {
        PrecisionContext low(24);
        MPComplex z = hurwitz_zeta_oracle(MPComplex(2L, low.working()), MPReal(1L, low.working()), low);
        // direct sum: sum_{n<N} (n+1)^-2 + tail in [1/(N+1), 1/N]
        mpfr_prec_t lw = low.working();
        MPReal s(0L, lw);
        const long N = 4000;
        for (long n = 0; n < N; ++n) s += MPReal(1L, lw) / ((n + 1) * (n + 1));
        CHECK(z.real() > s + 1L / MPReal(N + 1, lw));
        CHECK(z.real() < s + 1L / MPReal(N, lw) + pow2(-20, lw));
    }
    SUBCASE("known values") {
        MPReal pi = const_pi(wp);
        MPComplex z2 = hurwitz_zeta_oracle(MPComplex(2L, wp), MPReal(1L, wp), ctx128);
        CHECK((abs(z2 - MPComplex(pi * pi / 6L)) / abs(z2)).to_double() <= tol(4));
        MPComplex z0 = hurwitz_zeta_oracle(MPComplex(0L, wp), MPReal(BigRational(3, 4), wp), ctx128);
        CHECK(abs(z0 - MPComplex(MPReal(BigRational(-1, 4), wp))).to_double() <= tol(4));
        MPComplex zm2 = hurwitz_zeta_oracle(MPComplex(-2L, wp), MPReal(1L, wp), ctx128);
        CHECK(abs(zm2).to_double() <= tol(4));
        // real-argument agreement with mpfr's zeta
        for (double s : {3.5, 7.25, -3.5, 0.25}) {
            MPComplex z = hurwitz_zeta_oracle(MPComplex(s, 0.0, wp), MPReal(1L, wp), ctx128);
            MPReal ref = zeta_mpfr(MPReal(s, wp));
            CHECK((abs(z.real() - ref) / abs(ref)).to_double() <= tol(6));
        }
    }
    SUBCASE("half-argument relation") {
        MPComplex s(1.7, 2.2, wp);
        MPComplex lhs = hurwitz_zeta_oracle(s, MPReal(BigRational(1, 2), wp), ctx128);
        MPComplex zs = hurwitz_zeta_oracle(s, MPReal(1L, wp), ctx128);
        MPComplex rhs = (exp(s * const_log2(wp)) - 1L) * zs;
        CHECK((abs(lhs - rhs) / abs(lhs)).to_double() <= tol(8));
    }
    SUBCASE("precision escalation is consistent") {
        PrecisionContext hi(192);
        MPComplex s(3.3, -1.1, 192 + 64);
        MPComplex a128 = hurwitz_zeta_oracle(s.rounded_to(ctx128.working()), MPReal(2.25, ctx128.working()), ctx128);
        MPComplex a192 = hurwitz_zeta_oracle(s, MPReal(2.25, hi.working()), hi);
        CHECK((abs(a128 - a192) / abs(a192)).to_double() <= std::pow(2.0, -126));
    }
    CHECK_THROWS_AS(hurwitz_zeta_oracle(MPComplex(1L, wp), MPReal(1L, wp), ctx128), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta_oracle(MPComplex(2L, wp), MPReal(-1L, wp), ctx128), DomainError);
}

TEST_CASE("quadrature") {
    SUBCASE("polynomial and constant integrands") {
        PrecisionContext ctx(96);
        mpfr_prec_t wp = ctx.working();
        QuadratureResult one = integrate_01([&](const MPReal&) { return MPReal(1L, wp); }, ctx);
        CHECK(abs(one.value - 1L).to_double() <= 1e-14);
        QuadratureResult lin = integrate_01([&](const MPReal& t) { return t; }, ctx);
        CHECK(abs(lin.value - MPReal(BigRational(1, 2), wp)).to_double() <= 1e-14);
    }
    SUBCASE("digamma integrand with endpoint blowup integrates to zero") {
        PrecisionContext ctx(96);
        mpfr_prec_t wp = ctx.working();
        QuadratureResult q = integrate_01([&](const MPReal& x) { return digamma(x + 1L, ctx); }, ctx);
        CHECK(abs(q.value).to_double() <= 1e-13);
        (void)wp;
    }
    SUBCASE("endpoint singularity x^(-1/2)") {
        PrecisionContext ctx(96);
        mpfr_prec_t wp = ctx.working();
        QuadratureResult q = integrate_01([&](const MPReal& x) { return 1L / sqrt(x); }, ctx);
        CHECK(abs(q.value - 2L).to_double() <= 1e-13);
        (void)wp;
    }
    SUBCASE("gauss-legendre on an analytic integrand") {
        mpfr_prec_t wp = 192;
        MPReal v = gauss_legendre_01([&](const MPReal& x) { return exp(x); }, 48, wp);
        MPReal want = exp(MPReal(1L, wp)) - 1L;
        CHECK((abs(v - want) / want).to_double() <= 1e-40);
    }
    SUBCASE("semi-infinite exponential decay") {
        PrecisionContext ctx(96);
        mpfr_prec_t wp = ctx.working();
        MPReal eps = pow2(-60, wp);
        QuadratureResult q = integrate_semi_inf([&](const MPReal& t) { return exp(-t); }, ctx, eps);
        CHECK(abs(q.value - 1L).to_double() <= 1e-14);
    }
}

TEST_CASE("precision context validation") {
    CHECK_THROWS_AS(PrecisionContext(16), std::invalid_argument);
    CHECK_THROWS_AS(PrecisionContext(128, 8), std::invalid_argument);
    PrecisionContext c(128);
    CHECK(c.working() == 192);
}

TEST_CASE("mpreal string round trip") {
    mpfr_prec_t wp = 160;
    MPReal x = const_pi(wp) / 7L;
    std::string s = x.str();
    MPReal y(s, wp);
    CHECK(abs(x - y).to_double() <= std::pow(2.0, -150));
}
