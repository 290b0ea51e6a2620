#include "float_coeffs.hpp"

#include <map>
#include <mutex>

namespace norzeta {
namespace detail {

namespace {
std::mutex b_mutex;
std::map<mpfr_prec_t, std::shared_ptr<const std::vector<MPReal>>> b_cache;
}  // namespace

std::shared_ptr<const std::vector<MPReal>> norlund_b_float(std::size_t upto, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lk(b_mutex);
    auto& slot = b_cache[prec];
    if (slot && slot->size() > upto) return slot;

    auto next = std::make_shared<std::vector<MPReal>>();
    std::size_t want = std::max<std::size_t>(upto + 1, slot ? slot->size() * 2 : 64);
    next->reserve(want);
    if (slot) *next = *slot;
    if (next->empty()) next->push_back(MPReal(1L, prec));
    while (next->size() < want) {
        std::size_t n = next->size();
        MPReal s(0L, prec);
        for (std::size_t m = 2; m <= n + 1; ++m) {
            MPReal t = (*next)[n + 1 - m] / static_cast<long>(m * (m - 1));
            if (m % 2 == 0)
                s += t;
            else
                s -= t;
        }
        next->push_back(-s);
    }
    slot = next;
    return slot;
}

}  // namespace detail
}  // namespace norzeta
