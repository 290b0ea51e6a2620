#ifndef NORZETA_MP_COMPLEX_HPP
#define NORZETA_MP_COMPLEX_HPP

#include <algorithm>
#include <string>
#include <utility>

#include "norzeta/mp_real.hpp"

namespace norzeta {

// Rectangular complex value over MPReal. Principal branches throughout.
class MPComplex {
  public:
    explicit MPComplex(mpfr_prec_t prec = 64) : re_(0L, prec), im_(0L, prec) {}
    MPComplex(MPReal re, MPReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit MPComplex(MPReal re) : re_(std::move(re)), im_(0L, re_.prec()) {}
    MPComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}
    MPComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    const MPReal& real() const { return re_; }
    const MPReal& imag() const { return im_; }
    MPReal& real() { return re_; }
    MPReal& imag() { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_nan() const { return re_.is_nan() || im_.is_nan(); }

    MPComplex rounded_to(mpfr_prec_t p) const { return {re_.rounded_to(p), im_.rounded_to(p)}; }

    friend MPComplex operator+(const MPComplex& a, const MPComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend MPComplex operator-(const MPComplex& a, const MPComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend MPComplex operator*(const MPComplex& a, const MPComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend MPComplex operator/(const MPComplex& a, const MPComplex& b) {
        MPReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    friend MPComplex operator+(const MPComplex& a, const MPReal& b) { return {a.re_ + b, a.im_}; }
    friend MPComplex operator-(const MPComplex& a, const MPReal& b) { return {a.re_ - b, a.im_}; }
    friend MPComplex operator*(const MPComplex& a, const MPReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend MPComplex operator/(const MPComplex& a, const MPReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend MPComplex operator*(const MPReal& a, const MPComplex& b) { return b * a; }
    friend MPComplex operator+(const MPReal& a, const MPComplex& b) { return {a + b.re_, b.im_}; }
    friend MPComplex operator-(const MPReal& a, const MPComplex& b) { return {a - b.re_, -b.im_}; }
    friend MPComplex operator/(const MPReal& a, const MPComplex& b) {
        MPReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {a * b.re_ / d, -(a * b.im_) / d};
    }
    friend MPComplex operator+(const MPComplex& a, long b) { return {a.re_ + b, a.im_}; }
    friend MPComplex operator-(const MPComplex& a, long b) { return {a.re_ - b, a.im_}; }
    friend MPComplex operator*(const MPComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend MPComplex operator/(const MPComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
    friend MPComplex operator*(long a, const MPComplex& b) { return b * a; }
    friend MPComplex operator+(long a, const MPComplex& b) { return b + a; }
    friend MPComplex operator-(long a, const MPComplex& b) { return {a - b.re_, -b.im_}; }
    friend MPComplex operator/(long a, const MPComplex& b) {
        MPReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {a * b.re_ / d, -(a * b.im_) / d};
    }
    MPComplex operator-() const { return {-re_, -im_}; }
    MPComplex& operator+=(const MPComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    MPComplex& operator-=(const MPComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    MPComplex& operator*=(const MPComplex& o) {
        *this = *this * o;
        return *this;
    }
    MPComplex& operator/=(const MPComplex& o) {
        *this = *this / o;
        return *this;
    }

    friend bool operator==(const MPComplex& a, const MPComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const MPComplex& a, const MPComplex& b) { return !(a == b); }

    std::string str(std::size_t digits = 0) const {
        if (im_.is_zero()) return re_.str(digits);
        std::string im = im_.str(digits);
        if (!im.empty() && im[0] != '-') im = "+" + im;
        return re_.str(digits) + im + "i";
    }

  private:
    MPReal re_;
    MPReal im_;
};

inline MPComplex conj(const MPComplex& z) { return {z.real(), -z.imag()}; }
inline MPReal abs(const MPComplex& z) { return hypot(z.real(), z.imag()); }
inline MPReal norm_sq(const MPComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline MPReal arg(const MPComplex& z) { return atan2(z.imag(), z.real()); }

inline MPComplex exp(const MPComplex& z) {
    MPReal m = exp(z.real());
    return {m * cos(z.imag()), m * sin(z.imag())};
}
// principal logarithm
inline MPComplex log(const MPComplex& z) { return {log(abs(z)), arg(z)}; }

inline MPComplex pow(const MPComplex& b, const MPComplex& e) {
    if (b.is_real() && b.real() > 0 && e.is_real()) return MPComplex(pow(b.real(), e.real()));
    return exp(e * log(b));
}
inline MPComplex pow(const MPComplex& b, long e);
inline MPComplex sqrt(const MPComplex& z) {
    if (z.is_real() && z.real() >= 0) return MPComplex(sqrt(z.real()));
    return exp(log(z) / 2L);
}

inline MPComplex pow(const MPComplex& b, long e) {
    if (e == 0) return MPComplex(1L, b.prec());
    MPComplex acc(1L, b.prec());
    MPComplex base = b;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return e < 0 ? (1L / acc) : acc;
}

// sin(pi z) without forming pi*z (keeps accuracy for large real parts)
inline MPComplex sin_pi(const MPComplex& z, mpfr_prec_t prec) {
    MPReal pi = const_pi(prec);
    MPReal x = z.real().rounded_to(prec), y = z.imag().rounded_to(prec);
    // reduce x modulo 2 to keep sin/cos arguments small
    MPReal n = floor(x / 2L);
    MPReal xr = x - n * 2L;
    MPReal px = pi * xr, py = pi * y;
    return {sin(px) * cosh(py), cos(px) * sinh(py)};
}

}  // namespace norzeta

#endif
