#ifndef NORZETA_EM_ORACLE_HPP
#define NORZETA_EM_ORACLE_HPP

#include "norzeta/precision.hpp"

namespace norzeta {

// Independent Euler-Maclaurin evaluation of zeta(s, a), used as ground truth
// for every floating comparison: direct power sum to N plus correction terms,
// with N and the correction order chosen from the rigorous tail bound
//   |R_K| <= 4 |(s)_{2K+1}| (2 pi)^{-(2K+1)} (a+N)^{-(sigma+2K)} / (sigma+2K).
MPComplex hurwitz_zeta_oracle(const MPComplex& s, const MPReal& a, const PrecisionContext& ctx);

inline MPComplex riemann_zeta_oracle(const MPComplex& s, const PrecisionContext& ctx) {
    return hurwitz_zeta_oracle(s, MPReal(1L, ctx.working()), ctx);
}

}  // namespace norzeta

#endif
