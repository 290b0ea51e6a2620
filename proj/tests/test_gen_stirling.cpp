#include <doctest.h>

#include <cmath>

#include "norzeta/exact_core.hpp"
#include "norzeta/gen_stirling.hpp"
#include "norzeta/special.hpp"

using namespace norzeta;

namespace {
const PrecisionContext ctx128(128);
}

TEST_CASE("complex stirling matches exact integers") {
    mpfr_prec_t wp = ctx128.working();
    ExactCore& core = exact_core();
    for (long lam = 2; lam <= 10; ++lam)
        for (int k = 1; k <= 4 && k <= lam; ++k) {
            MPComplex got = stirling1_complex(MPComplex(lam, wp), k, ctx128);
            MPReal want(BigRational(core.stirling1(static_cast<std::size_t>(lam), static_cast<std::size_t>(k))), wp);
            CHECK((abs(got - MPComplex(want)) / max(abs(want), MPReal(1L, wp))).to_double() <=
                  std::pow(2.0, -120));
        }
    CHECK(abs(stirling1_complex(MPComplex(5L, wp), 2, ctx128) - MPComplex(-50L, wp)).to_double() <= 1e-30);
    CHECK(abs(stirling1_complex(MPComplex(1L, wp), 1, ctx128) - MPComplex(1L, wp)).to_double() <= 1e-33);
    CHECK(abs(stirling1_complex(MPComplex(3L, wp), 5, ctx128)).to_double() == 0.0);
    CHECK_THROWS_AS(stirling1_complex(MPComplex(0L, wp), 2, ctx128), PoleError);
    CHECK_THROWS_AS(stirling1_complex(MPComplex(2L, wp), 6, ctx128), DomainError);
}

TEST_CASE("closed form s(lambda,2) at lambda = 6") {
    mpfr_prec_t wp = ctx128.working();
    // (-1)^lambda (lambda-1)! H_{lambda-1} with lambda = 6: +120 * 137/60 = 274... sign (-1)^6 = 1
    MPComplex got = stirling1_complex(MPComplex(6L, wp), 2, ctx128);
    MPReal want = MPReal(BigRational(137, 60), wp) * 120L;
    CHECK(abs(got - MPComplex(want)).to_double() <= 1e-30);
}

TEST_CASE("recursion residual at complex and half-integer points") {
    mpfr_prec_t wp = ctx128.working();
    CHECK(stirling1_recursion_residual(MPComplex(4.5, 0.0, wp), 2, ctx128).to_double() <=
          std::pow(2.0, -120));
    CHECK(stirling1_recursion_residual(MPComplex(5L, wp), 3, ctx128).to_double() <= std::pow(2.0, -120));
    CHECK(stirling1_recursion_residual(MPComplex(2.0, 1.0, wp), 2, ctx128).to_double() <=
          std::pow(2.0, -120));
}

TEST_CASE("appendix A suite residuals") {
    AppendixASuite r1 = appendixA_suite(MPReal(1L, ctx128.working()), 4, ctx128);
    CHECK(r1.beta_vs_pochhammer.to_double() <= 1e-30);
    CHECK(r1.trigamma_series.to_double() <= 1e-12);
    CHECK(r1.harmonic_series.to_double() <= 1e-10);
    CHECK(r1.beta_derivative.to_double() <= 1e-30);
    AppendixASuite r2 = appendixA_suite(MPReal(2L, ctx128.working()), 3, ctx128);
    CHECK(r2.harmonic_series.to_double() <= 1e-10);  // the 1/8 target
    CHECK_THROWS_AS(appendixA_suite(MPReal(-1L, ctx128.working()), 2, ctx128), DomainError);
}
