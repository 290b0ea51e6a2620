#ifndef NORZETA_EXACT_CORE_HPP
#define NORZETA_EXACT_CORE_HPP

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "norzeta/errors.hpp"
#include "norzeta/rational.hpp"
#include "norzeta/rational_poly.hpp"

namespace norzeta {

// Memoized exact combinatorics and the Norlund polynomial engine. All tables
// grow on demand; entries are immutable once published, so readers may hold
// references across calls. Reads take a shared lock, growth an exclusive one.
class ExactCore {
  public:
    static constexpr std::size_t kDefaultTableLimit = 256;

    explicit ExactCore(std::size_t table_limit = kDefaultTableLimit) : table_limit_(table_limit) {}

    std::size_t table_limit() const { return table_limit_; }

    // Stirling numbers of the second kind, S(n,k) = 0 for k > n.
    BigInt stirling2(std::size_t n, std::size_t k);
    // Signed Stirling numbers of the first kind via s(n+1,k) = s(n,k-1) - n s(n,k).
    BigInt stirling1(std::size_t n, std::size_t k);

    // Ordinary Bernoulli numbers, B_1 = -1/2.
    BigRational bernoulli_number(std::size_t n);
    // Bernoulli polynomial B_n(x).
    BigRational bernoulli_poly(std::size_t n, const BigRational& x);

    // Norlund polynomial B_n^(alpha): degree n, leading coefficient (-1/2)^n,
    // zero constant term for n >= 1.
    const RationalPolynomial& norlund_poly(std::size_t n);
    // d/dalpha B_n^(alpha) by the derivative recursion.
    const RationalPolynomial& norlund_poly_dalpha(std::size_t n);
    // B_n^(alpha)/alpha for n >= 1 (constant term of B_n^(alpha) vanishes).
    const RationalPolynomial& norlund_poly_over_alpha(std::size_t n);

    // Independent construction from the explicit double sum with binomial
    // polynomials; O(n^3) per polynomial, used as a cross-check.
    RationalPolynomial norlund_poly_direct(std::size_t n) const;

    // Generalized Bernoulli polynomial B_n^(alpha)(x) as a polynomial in alpha.
    RationalPolynomial gen_bernoulli_poly(std::size_t n, const BigRational& x);

    // Norlund number B_n^(n).
    BigRational norlund_number(std::size_t n);

    BigRational harmonic(std::size_t n);
    BigRational harmonic_gen(std::size_t n, unsigned r);

    // p_n for n >= 2, from (n-1)! p_n = (-1)^n [B_{n-1}^(n-1) + (n-1) B_{n-2}^(n-2)].
    BigRational p_constant(std::size_t n);

    // Expansion coefficients of (-ln(1-t)/t)^(s-1):
    //   alpha_k(s) = (s-1) (-1)^k B_k^(s+k-1) / (k! (s+k-1)), rational for rational s.
    BigRational alpha_coeff(std::size_t k, const BigRational& s);
    // d/ds alpha_k(s), as the exact polynomial described by alpha_prime_poly below.
    BigRational alpha_coeff_prime(std::size_t k, const BigRational& s);

    // alpha_k'(s) = (-1)^k/k! * A_k(s+k-1) where
    //   A_k = [ k B_k^(alpha)/alpha + (alpha-k) dB_k/dalpha ] / alpha,
    // an exact polynomial (the 1/alpha poles cancel).
    const RationalPolynomial& alpha_prime_poly(std::size_t k);

  private:
    static RationalPolynomial binomial_poly_shifted(long shift, std::size_t k);

    void grow_stirling2(std::size_t n);
    void grow_stirling1(std::size_t n);
    void grow_bernoulli(std::size_t n);
    void grow_norlund(std::size_t n);
    void grow_harmonic(std::size_t n);
    void grow_alpha_prime(std::size_t n);
    void check_limit(std::size_t n) const;

    std::size_t table_limit_;

    mutable std::shared_mutex mtx_;
    std::deque<std::vector<BigInt>> s2_rows_;
    std::deque<std::vector<BigInt>> s1_rows_;
    std::deque<BigRational> bernoulli_;
    std::deque<RationalPolynomial> norlund_;
    std::deque<RationalPolynomial> norlund_dalpha_;
    std::deque<RationalPolynomial> norlund_over_alpha_;
    std::deque<RationalPolynomial> alpha_prime_;
    std::deque<BigRational> harmonic_;
};

// Shared process-wide instance (the series modules reuse lower indices heavily).
ExactCore& exact_core();

}  // namespace norzeta

#endif
