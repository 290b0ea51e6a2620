#ifndef NORZETA_VERIFY_HPP
#define NORZETA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "norzeta/precision.hpp"

namespace norzeta {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;   // 0 for exact checks that hold identically
    double tolerance = 0.0;  // 0 means "must be exact"
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

// Exact-arithmetic identity suite; every check must hold with zero residual.
CheckList verify_exact();

// Floating series suite against the Euler-Maclaurin oracle.
CheckList verify_series(const PrecisionContext& ctx, std::uint64_t seed);

// Stieltjes-constant cross-method suite.
CheckList verify_stieltjes(const PrecisionContext& ctx);

// Beta-function identity suite (Appendix A).
CheckList verify_appendixA(const PrecisionContext& ctx);

// Generalized Stirling suite (Appendix B).
CheckList verify_appendixB(const PrecisionContext& ctx, std::uint64_t seed);

CheckList verify_all(const PrecisionContext& ctx, std::uint64_t seed);

inline bool all_pass(const CheckList& list) {
    for (const auto& c : list)
        if (!c.pass) return false;
    return true;
}

}  // namespace norzeta

#endif
