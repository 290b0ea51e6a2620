#ifndef NORZETA_GEN_STIRLING_HPP
#define NORZETA_GEN_STIRLING_HPP

#include "norzeta/precision.hpp"

namespace norzeta {

// Stirling numbers of the first kind continued to complex first argument:
//   s(lambda,k) = (-1)^(lambda+k)/(k-1)! (d/ds)^(k-1) (s)_{lambda-1} |_{s=1},
// evaluated through Bell polynomials in H_{lambda-1}^(r), themselves polygamma
// differences. The phase (-1)^lambda is the principal branch e^{i pi lambda}
// (exact parity sign when lambda is an integer). k is 1..5.
MPComplex stirling1_complex(const MPComplex& lambda, int k, const PrecisionContext& ctx);

// |s(lambda,k) - s(lambda-1,k-1) + (lambda-1) s(lambda-1,k)|
MPReal stirling1_recursion_residual(const MPComplex& lambda, int k, const PrecisionContext& ctx);

// Beta-function identity suite at real x > 0, integer n >= 0: residuals of
//   B(x,n+1) = n!/(x)_{n+1}
//   sum_k k!/((k+1)(x)_{k+1}) = psi'(x)
//   sum_k k! H_k/(x)_{k+2} = 1/x^3
//   d/dx B(x,n+1) = n!/(x)_{n+1} [psi(x)-psi(x+n+1)] = -sum_l (-1)^l C(n,l)/(x+l)^2
struct AppendixASuite {
    MPReal beta_vs_pochhammer;
    MPReal trigamma_series;
    MPReal harmonic_series;
    MPReal beta_derivative;
    AppendixASuite()
        : beta_vs_pochhammer(0L, 64), trigamma_series(0L, 64), harmonic_series(0L, 64),
          beta_derivative(0L, 64) {}
};
AppendixASuite appendixA_suite(const MPReal& x, unsigned n, const PrecisionContext& ctx);

}  // namespace norzeta

#endif
