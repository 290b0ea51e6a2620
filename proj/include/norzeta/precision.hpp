#ifndef NORZETA_PRECISION_HPP
#define NORZETA_PRECISION_HPP

#include <stdexcept>

#include "norzeta/errors.hpp"
#include "norzeta/mp_complex.hpp"
#include "norzeta/mp_real.hpp"

namespace norzeta {

// Target precision, guard digits and truncation policy for floating
// evaluation. Working precision = target + guard; truncation accepts only
// after tail_confirm consecutive negligible terms.
struct PrecisionContext {
    mpfr_prec_t target_precision = 128;
    mpfr_prec_t guard_bits = 64;
    long max_terms = 10000;
    int tail_confirm = 3;

    PrecisionContext() = default;
    explicit PrecisionContext(mpfr_prec_t target, mpfr_prec_t guard = 64, long terms = 10000,
                              int confirm = 3)
        : target_precision(target), guard_bits(guard), max_terms(terms), tail_confirm(confirm) {
        validate();
    }

    void validate() const {
        if (target_precision < 24) throw std::invalid_argument("PrecisionContext: target_precision >= 24");
        if (guard_bits < 16) throw std::invalid_argument("PrecisionContext: guard_bits >= 16");
        if (max_terms < 1) throw std::invalid_argument("PrecisionContext: max_terms >= 1");
        if (tail_confirm < 1) throw std::invalid_argument("PrecisionContext: tail_confirm >= 1");
    }

    mpfr_prec_t working() const { return target_precision + guard_bits; }

    MPReal real(long v = 0) const { return MPReal(v, working()); }
    MPReal real(double v) const { return MPReal(v, working()); }
    MPReal real(const BigRational& v) const { return MPReal(v, working()); }
    MPReal real(const std::string& v) const { return MPReal(v, working()); }
    MPComplex complex(long re = 0, long im = 0) const {
        return {MPReal(re, working()), MPReal(im, working())};
    }

    MPReal eps_target() const { return pow2(-static_cast<long>(target_precision), working()); }
    MPReal eps_working() const { return pow2(-static_cast<long>(working()), working()); }

    PrecisionContext with_extra_bits(mpfr_prec_t extra) const {
        PrecisionContext c = *this;
        c.guard_bits += extra;
        return c;
    }
};

}  // namespace norzeta

#endif
