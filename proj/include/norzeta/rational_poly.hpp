#ifndef NORZETA_RATIONAL_POLY_HPP
#define NORZETA_RATIONAL_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "norzeta/errors.hpp"
#include "norzeta/rational.hpp"

namespace norzeta {

// Dense univariate polynomial over BigRational in the order variable alpha,
// coefficients ascending by degree. The zero polynomial has an empty
// coefficient vector; otherwise the leading coefficient is nonzero.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(BigRational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit RationalPolynomial(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) {
        normalize();
    }

    static RationalPolynomial monomial(const BigRational& c, std::size_t degree) {
        if (c == 0) return {};
        std::vector<BigRational> v(degree + 1, BigRational(0));
        v[degree] = c;
        return RationalPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    BigRational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    RationalPolynomial& operator-=(const RationalPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    RationalPolynomial& operator*=(const BigRational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        a += b;
        return a;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        a -= b;
        return a;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& c) {
        a *= c;
        return a;
    }
    friend RationalPolynomial operator*(const BigRational& c, RationalPolynomial a) {
        a *= c;
        return a;
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RationalPolynomial(std::move(out));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) { return !(a == b); }

    // Horner, exact.
    BigRational eval(const BigRational& x) const {
        BigRational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    RationalPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<BigRational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
        return RationalPolynomial(std::move(out));
    }

    // Antiderivative with zero constant term.
    RationalPolynomial antiderivative() const {
        if (is_zero()) return {};
        std::vector<BigRational> out(coeffs_.size() + 1, BigRational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / BigRational(static_cast<long>(i + 1));
        return RationalPolynomial(std::move(out));
    }

    // Exact division by alpha; requires a vanishing constant term.
    RationalPolynomial divided_by_alpha() const {
        if (is_zero()) return {};
        if (coeffs_[0] != 0) throw DomainError("divided_by_alpha: nonzero constant term");
        std::vector<BigRational> out(coeffs_.begin() + 1, coeffs_.end());
        return RationalPolynomial(std::move(out));
    }

    // Ascending "p/q" coefficient list.
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += to_string(coeffs_[i]);
        }
        return s;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

}  // namespace norzeta

#endif
