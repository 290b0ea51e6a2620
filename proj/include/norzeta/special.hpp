#ifndef NORZETA_SPECIAL_HPP
#define NORZETA_SPECIAL_HPP

#include "norzeta/mp_complex.hpp"
#include "norzeta/precision.hpp"

namespace norzeta {

// Gamma-family kernels. Arguments are shifted right until a Stirling-type
// asymptotic series reaches the working precision, then the series is summed
// with exact Bernoulli coefficients. Relative error <= 2^-target_precision.

// Principal log-Gamma; requires Re z > 0.
MPComplex log_gamma(const MPComplex& z, const PrecisionContext& ctx);
// Gamma on the cut plane; reflection for Re z <= 0; pole error at 0, -1, -2, ...
MPComplex gamma(const MPComplex& z, const PrecisionContext& ctx);
// psi = Gamma'/Gamma; pole error at nonpositive integers.
MPComplex digamma(const MPComplex& z, const PrecisionContext& ctx);
// psi^(m) for m in 1..4.
MPComplex polygamma(int m, const MPComplex& z, const PrecisionContext& ctx);

MPReal log_gamma(const MPReal& x, const PrecisionContext& ctx);
MPReal gamma(const MPReal& x, const PrecisionContext& ctx);
MPReal digamma(const MPReal& x, const PrecisionContext& ctx);
MPReal polygamma(int m, const MPReal& x, const PrecisionContext& ctx);

}  // namespace norzeta

#endif
