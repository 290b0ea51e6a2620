#include <doctest.h>

#include <cmath>

#include "norzeta/special.hpp"
#include "norzeta/stieltjes.hpp"

using namespace norzeta;

namespace {
const PrecisionContext ctx128(128);
}

TEST_CASE("gamma0 closed forms") {
    mpfr_prec_t wp = ctx128.working();
    MPReal euler = const_euler(wp);
    CHECK(abs(gamma0(MPReal(1L, wp), ctx128) - euler).to_double() <= 1e-36);
    CHECK(abs(gamma0(MPReal(2L, wp), ctx128) - (euler - 1L)).to_double() <= 1e-36);
    CHECK(abs(gamma0(MPReal(BigRational(1, 2), wp), ctx128) - (euler + 2L * const_log2(wp))).to_double() <= 1e-36);
    CHECK_THROWS_AS(gamma0(MPReal(-1L, wp), ctx128), DomainError);
}

TEST_CASE("gamma1 series against the frozen reference digits") {
    mpfr_prec_t wp = ctx128.working();
    StieltjesResult g = gamma1(MPReal(1L, wp), ctx128);
    CHECK(abs(g.value - MPReal("-0.0728158454836767248605863758749", wp)).to_double() <= 1e-28);
    CHECK(g.method == StieltjesMethod::series);
    // gamma_1(2) = gamma_1(1): the shift correction ln(1)/1 vanishes
    StieltjesResult g2 = gamma1(MPReal(2L, wp), ctx128);
    CHECK(abs(g2.value - g.value).to_double() <= 1e-30);
}

TEST_CASE("laurent fit matches the series methods") {
    mpfr_prec_t wp = ctx128.working();
    StieltjesResult fit0 = stieltjes_laurent_fit(0, MPReal(2L, wp), ctx128);
    CHECK(abs(fit0.value - gamma0(MPReal(2L, wp), ctx128)).to_double() <= 1e-18);
    StieltjesResult fit1 = stieltjes_laurent_fit(1, MPReal(1L, wp), ctx128);
    StieltjesResult ser1 = gamma1(MPReal(1L, wp), ctx128);
    CHECK(abs(fit1.value - ser1.value).to_double() <= 1e-15);
    StieltjesResult fit2 = stieltjes_laurent_fit(2, MPReal(1L, wp), ctx128);
    CHECK(abs(fit2.value - MPReal("-0.00969036319287231848", wp)).to_double() <= 1e-13);
    CHECK_THROWS_AS(stieltjes_laurent_fit(3, MPReal(1L, wp), ctx128), DomainError);
}

TEST_CASE("gamma1 binomial series") {
    mpfr_prec_t wp = ctx128.working();
    StieltjesResult ser = gamma1(MPReal(1L, wp), ctx128);
    StieltjesResult bin = gamma1_binomial(MPReal(1L, wp), ctx128);
    CHECK(abs(bin.value - ser.value).to_double() <= 1e-15);
    StieltjesResult bin3 = gamma1_binomial(MPReal(3L, wp), ctx128);
    StieltjesResult ser3 = gamma1(MPReal(3L, wp), ctx128);
    CHECK(abs(bin3.value - ser3.value).to_double() <= 1e-15);
    CHECK(bin.method == StieltjesMethod::binomial_series);
}

TEST_CASE("gamma1 integral representations") {
    StieltjesResult ser = gamma1(MPReal(1L, ctx128.working()), ctx128);
    SUBCASE("hypergeometric route at a = 1 and a = 2") {
        StieltjesResult h1 = gamma1_hyp(MPReal(1L, ctx128.working()), ctx128);
        CHECK(abs(h1.value - ser.value).to_double() <= 1e-8);
        StieltjesResult h2 = gamma1_hyp(MPReal(2L, ctx128.working()), ctx128);
        StieltjesResult s2 = gamma1(MPReal(2L, ctx128.working()), ctx128);
        CHECK(abs(h2.value - s2.value).to_double() <= 1e-8);
    }
    SUBCASE("digamma quadratures at a = 1") {
        StieltjesResult qa = gamma1_quadrature(Gamma1Integral::psi_combination, ctx128);
        StieltjesResult qb = gamma1_quadrature(Gamma1Integral::half_bracket, ctx128);
        CHECK(abs(qa.value - ser.value).to_double() <= 1e-8);
        CHECK(abs(qb.value - ser.value).to_double() <= 1e-8);
        CHECK(abs(qa.value - qb.value).to_double() <= 1e-8);
    }
}

TEST_CASE("gamma2 series") {
    mpfr_prec_t wp = ctx128.working();
    StieltjesResult g = gamma2(MPReal(1L, wp), ctx128);
    CHECK(abs(g.value - MPReal("-0.00969036319287231848453038603521", wp)).to_double() <= 1e-25);
    StieltjesResult fit = stieltjes_laurent_fit(2, MPReal(2L, wp), ctx128);
    StieltjesResult ser = gamma2(MPReal(2L, wp), ctx128);
    CHECK(abs(fit.value - ser.value).to_double() <= 1e-10);
}

TEST_CASE("corollary-3 double zeta identity") {
    Corollary3Report rep = corollary3_check(ctx128);
    CHECK(rep.residual.to_double() <= std::pow(2.0, -64));
    CHECK(abs(rep.auxiliary_sum - const_euler(ctx128.working())).to_double() <= 1e-30);
    CHECK(abs(rep.abel_limit - 1L).to_double() <= 1e-30);
}

TEST_CASE("log-sum constant representations") {
    MPReal c1 = log_sum_constant(LogSumRepr::zeta_sum, ctx128);
    MPReal c2 = log_sum_constant(LogSumRepr::log_series, ctx128);
    MPReal c3 = log_sum_constant(LogSumRepr::digamma_integral, ctx128);
    MPReal c4 = log_sum_constant(LogSumRepr::digamma_integral_alt, ctx128);
    MPReal ref("1.25774688694", ctx128.working());
    CHECK(abs(c1 - ref).to_double() <= 1e-10);
    CHECK(abs(c2 - ref).to_double() <= 1e-10);
    CHECK(abs(c3 - ref).to_double() <= 1e-10);
    CHECK(abs(c4 - ref).to_double() <= 1e-10);
    CHECK(abs(c1 - c2).to_double() <= 1e-9);
    CHECK(abs(c1 - c3).to_double() <= 1e-9);
    CHECK(abs(c1 - c4).to_double() <= 1e-9);
}

TEST_CASE("eta1") {
    mpfr_prec_t wp = ctx128.working();
    MPReal e = eta1(ctx128);
    MPReal euler = const_euler(wp);
    MPReal want = euler * euler + 2L * MPReal("-0.07281584548367672486", wp);
    CHECK(abs(e - want).to_double() <= 1e-18);
    CHECK(e > 0);
}
