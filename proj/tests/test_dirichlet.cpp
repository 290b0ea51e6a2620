#include <doctest.h>

#include <cmath>

#include "norzeta/dirichlet.hpp"
#include "norzeta/em_oracle.hpp"

using namespace norzeta;

namespace {
const PrecisionContext ctx128(128);
}

TEST_CASE("beta special values") {
    mpfr_prec_t wp = ctx128.working();
    MPReal pi = const_pi(wp);
    SeriesEvaluation b1 = dirichlet_beta(MPComplex(1L, wp), ctx128);
    CHECK(abs(b1.value - MPComplex(pi / 4L)).to_double() <= 1e-30);
    SeriesEvaluation b2 = dirichlet_beta(MPComplex(2L, wp), ctx128);
    CHECK(abs(b2.value - MPComplex(const_catalan(wp))).to_double() <= 1e-30);
    SeriesEvaluation b3 = dirichlet_beta(MPComplex(3L, wp), ctx128);
    CHECK(abs(b3.value - MPComplex(pi * pi * pi / 32L)).to_double() <= 1e-30);
}

TEST_CASE("closed-form odd beta values") {
    mpfr_prec_t wp = ctx128.working();
    MPReal pi = const_pi(wp);
    CHECK(abs(beta_odd_value(0, ctx128) - pi / 4L).to_double() <= 1e-36);
    CHECK(abs(beta_odd_value(1, ctx128) - pi * pi * pi / 32L).to_double() <= 1e-36);
    // beta(5) = 5 pi^5 / 1536
    CHECK(abs(beta_odd_value(2, ctx128) - 5L * pow(pi, 5) / 1536L).to_double() <= 1e-34);
    for (unsigned m = 0; m <= 4; ++m) {
        SeriesEvaluation ser = dirichlet_beta(MPComplex(2L * m + 1L, wp), ctx128);
        CHECK((abs(ser.value - MPComplex(beta_odd_value(m, ctx128))) / abs(ser.value)).to_double() <=
              std::pow(2.0, -118));
    }
}

TEST_CASE("general characters") {
    mpfr_prec_t wp = ctx128.working();
    SUBCASE("principal character mod 3: L(s) = (1 - 3^-s) zeta(s)") {
        DirichletCharacter chi = DirichletCharacter::principal_mod(3, ctx128);
        MPComplex s(2.5, 0.0, wp);
        SeriesEvaluation L = dirichlet_L(s, chi, ctx128);
        MPComplex zs = riemann_zeta_oracle(s, ctx128);
        MPComplex want = (MPComplex(1L, wp) - exp(-s * log(MPComplex(3L, wp)))) * zs;
        CHECK((abs(L.value - want) / abs(want)).to_double() <= std::pow(2.0, -118));
        CHECK_THROWS_AS(dirichlet_L(MPComplex(1L, wp), chi, ctx128), PoleError);
    }
    SUBCASE("legendre-symbol character mod 3 at s = 1: L(1) = pi/(3 sqrt 3)") {
        DirichletCharacter chi;
        chi.modulus = 3;
        chi.values = {MPComplex(1L, wp), MPComplex(-1L, wp), MPComplex(0L, wp)};
        SeriesEvaluation L = dirichlet_L(MPComplex(1L, wp), chi, ctx128);
        MPReal want = const_pi(wp) / (3L * sqrt(MPReal(3L, wp)));
        CHECK(abs(L.value - MPComplex(want)).to_double() <= 1e-30);
    }
    SUBCASE("invalid tables rejected") {
        DirichletCharacter bad;
        bad.modulus = 4;
        bad.values = {MPComplex(1L, wp), MPComplex(1L, wp), MPComplex(-1L, wp), MPComplex(0L, wp)};
        CHECK_THROWS_AS(bad.validate(ctx128), DomainError);
        DirichletCharacter wrongflag = DirichletCharacter::mod4_odd(ctx128);
        wrongflag.principal = true;
        CHECK_THROWS_AS(wrongflag.validate(ctx128), DomainError);
    }
}
