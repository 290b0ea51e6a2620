#ifndef NORZETA_SRC_STIELTJES_SERIES_HPP
#define NORZETA_SRC_STIELTJES_SERIES_HPP

#include "norzeta/series.hpp"

namespace norzeta {
namespace detail {

// Stieltjes constants through the Norlund-number series, valid for complex a
// with Re a > 0. The public stieltjes module wraps the real-argument case;
// the Hurwitz near-pole path uses these directly.

// gamma_0(a) = -psi(a)
MPComplex gamma0_c(const MPComplex& a, const PrecisionContext& ctx);

// -gamma_1(a) = 1/2[psi^2(a) - psi'(a)] + Gamma(a) sum_k (-1)^k B_k^(k) / (k^2 Gamma(k+a))
SeriesEvaluation gamma1_series_c(const MPComplex& a, const PrecisionContext& ctx);

// gamma_2(a) = 1/3[-psi^3 + 3 psi psi' - psi''](a)
//   + 2 Gamma(a) sum_k (-1)^k/k^2 [dB_k^(s+k-1)/ds]_{s=1} / Gamma(k+a)
//   + 2 Gamma(a) sum_k (-1)^k/k^3 B_k^(k) [-1 + gamma k + k psi(k) - k psi(k+a)] / Gamma(k+a)
SeriesEvaluation gamma2_series_c(const MPComplex& a, const PrecisionContext& ctx);

}  // namespace detail
}  // namespace norzeta

#endif
