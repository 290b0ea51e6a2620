#ifndef NORZETA_STIELTJES_HPP
#define NORZETA_STIELTJES_HPP

#include "norzeta/series.hpp"

namespace norzeta {

enum class StieltjesMethod { series, binomial_series, quadrature, laurent_fit };

struct StieltjesResult {
    int order = 0;
    MPReal a;
    MPReal value;
    StieltjesMethod method = StieltjesMethod::series;
    MPReal tail_estimate;

    StieltjesResult() : a(0L, 64), value(0L, 64), tail_estimate(0L, 64) {}
};

// gamma_0(a) = -psi(a)
MPReal gamma0(const MPReal& a, const PrecisionContext& ctx);

// gamma_1(a) by the Norlund-number series.
StieltjesResult gamma1(const MPReal& a, const PrecisionContext& ctx);

// gamma_1(a) by the finite-difference (alternating binomial) series. The
// inner sum sheds ~n bits, so the working precision is raised accordingly and
// the outer sum is capped; accuracy saturates near 2^-110.
StieltjesResult gamma1_binomial(const MPReal& a, const PrecisionContext& ctx);

// gamma_1(a) from the 4F3 integral representation.
StieltjesResult gamma1_hyp(const MPReal& a, const PrecisionContext& ctx);

enum class Gamma1Integral { psi_combination, half_bracket };  // the two integral forms at a = 1

// gamma_1 via adaptive quadrature of either digamma integrand (a = 1 only).
StieltjesResult gamma1_quadrature(Gamma1Integral variant, const PrecisionContext& ctx);

// gamma_2(a) by the derivative-coefficient series.
StieltjesResult gamma2(const MPReal& a, const PrecisionContext& ctx);

// Oracle-based reference: Richardson-extrapolated central differences of the
// Euler-Maclaurin zeta at s = 1 +- h, h in {2^-8, 2^-9, 2^-10}. order <= 2.
StieltjesResult stieltjes_laurent_fit(int order, const MPReal& a, const PrecisionContext& ctx);

// |LHS - RHS| of the double-zeta identity for 2[zeta(2) - gamma_1], with the
// divergent (-1)^m part Abel-resolved to 1/2 as in its derivation. Also
// exposes the auxiliary sums.
struct Corollary3Report {
    MPReal lhs;
    MPReal rhs;
    MPReal residual;
    MPReal auxiliary_sum;   // sum_{k>=2} (-1)^k zeta(k)/k  (-> Euler's constant)
    MPReal abel_limit;      // lim_{x->1^-} sum (-1)^(k+1) zeta(k+1) x^k  (-> 1)
    Corollary3Report() : lhs(0L, 64), rhs(0L, 64), residual(0L, 64), auxiliary_sum(0L, 64), abel_limit(0L, 64) {}
};
Corollary3Report corollary3_check(const PrecisionContext& ctx);

// sum_{k>=1} (-1)^(k+1) zeta(k+1)/k by four representations.
enum class LogSumRepr : int { zeta_sum = 1, log_series = 2, digamma_integral = 3, digamma_integral_alt = 4 };
MPReal log_sum_constant(LogSumRepr repr, const PrecisionContext& ctx);

// eta_1 = gamma^2 + 2 gamma_1
MPReal eta1(const PrecisionContext& ctx);

}  // namespace norzeta

#endif
