#include "norzeta/mp_real.hpp"

#include <cmath>
#include <cstring>
#include <vector>

namespace norzeta {

std::string MPReal::str(std::size_t digits) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() < 0 ? "-inf" : "inf";
    if (digits == 0) {
        // round-trip digit count for this precision
        digits = static_cast<std::size_t>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
    }
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    // mant is digits with implied decimal point before the first digit: 0.<body> * 10^e
    std::string out = neg ? "-" : "";
    if (mpfr_zero_p(v_)) return "0";
    out += body.substr(0, 1) + "." + body.substr(1);
    long ee = static_cast<long>(e) - 1;
    out += "e" + std::to_string(ee);
    return out;
}

}  // namespace norzeta
