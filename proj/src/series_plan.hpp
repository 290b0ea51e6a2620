#ifndef NORZETA_SRC_SERIES_PLAN_HPP
#define NORZETA_SRC_SERIES_PLAN_HPP

#include <algorithm>
#include <cmath>

namespace norzeta {
namespace detail {

// Terms of the Norlund-coefficient series behave like Beta(k, a): geometric
// decay ~1/a per term while k < a, then polynomial k^-(1+a). The shift target
// solves -log2 Beta(K, a) >= needed bits for the planned truncation budget.
inline double neg_log2_beta(double k, double a) {
    return (std::lgamma(k + a) - std::lgamma(k) - std::lgamma(a)) / 0.6931471805599453;
}

struct ShiftPlan {
    long shift = 0;      // integer M added to Re a
    double a_target = 0; // shifted real part
    long k_budget = 0;   // truncation bound the plan was solved for
};

inline ShiftPlan plan_shift(double needed_bits, double re_a, long max_terms) {
    ShiftPlan p;
    p.k_budget = std::clamp<long>(static_cast<long>(needed_bits), 64, std::min<long>(max_terms, 1024));
    double a = std::max(1.0, re_a);
    for (int i = 0; i < 4096 && neg_log2_beta(static_cast<double>(p.k_budget), a) < needed_bits; ++i)
        a += std::max(1.0, a / 8.0);
    p.a_target = a;
    p.shift = re_a < a ? static_cast<long>(std::ceil(a - re_a)) : 0;
    return p;
}

// Extra working bits: shift-sum cancellation at negative sigma plus the
// 1/Gamma(s-1)-type prefactor growth e^{pi |Im s|}.
inline long extra_working_bits(double sr, double si, double a_target) {
    double extra = 16.0;
    if (sr < 0) extra += -sr * std::log2(a_target + std::fabs(sr) + 2.0);
    extra += 4.7 * std::fabs(si);
    return static_cast<long>(std::ceil(extra));
}

}  // namespace detail
}  // namespace norzeta

#endif
