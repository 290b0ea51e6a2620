#ifndef NORZETA_SRC_FLOAT_COEFFS_HPP
#define NORZETA_SRC_FLOAT_COEFFS_HPP

#include <memory>
#include <vector>

#include "norzeta/mp_real.hpp"

namespace norzeta {
namespace detail {

// b_n = B_n^(n)/n! at working precision, from the generating-function
// recurrence b_{n} = -sum_{m=2}^{n+1} (-1)^m b_{n+1-m}/(m(m-1)). The slow
// series need thousands of these; exact rationals are reserved for the
// low-index tables.
std::shared_ptr<const std::vector<MPReal>> norlund_b_float(std::size_t upto, mpfr_prec_t prec);

// p_{k+1} = (-1)^(k-1) (b_k + b_{k-1}), k >= 1.
inline MPReal p_float(const std::vector<MPReal>& b, std::size_t k) {
    MPReal v = b[k] + b[k - 1];
    return (k % 2 == 0) ? -v : v;
}

}  // namespace detail
}  // namespace norzeta

#endif
