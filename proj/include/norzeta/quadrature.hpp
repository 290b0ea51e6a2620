#ifndef NORZETA_QUADRATURE_HPP
#define NORZETA_QUADRATURE_HPP

#include <functional>

#include "norzeta/precision.hpp"

namespace norzeta {

struct QuadratureResult {
    MPReal value;
    MPReal error_estimate;
    long evaluations = 0;
};

using Integrand = std::function<MPReal(const MPReal&)>;

// tanh-sinh rule on (0,1); integrable endpoint singularities are absorbed by
// the double-exponential substitution. Absolute error target eps_abs
// (defaults to 2^-(target/2) per the context contract).
QuadratureResult integrate_01(const Integrand& f, const PrecisionContext& ctx);
QuadratureResult integrate_01(const Integrand& f, const PrecisionContext& ctx, const MPReal& eps_abs);

// exp-sinh rule on (0, inf) for integrands decaying at least exponentially.
QuadratureResult integrate_semi_inf(const Integrand& f, const PrecisionContext& ctx,
                                    const MPReal& eps_abs);

// Gauss-Legendre on [0,1] for analytic integrands (node count fixed by caller).
MPReal gauss_legendre_01(const Integrand& f, int nodes, mpfr_prec_t prec);

}  // namespace norzeta

#endif
