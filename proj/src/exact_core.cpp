#include "norzeta/exact_core.hpp"

#include <mutex>
#include <stdexcept>

namespace norzeta {

ExactCore& exact_core() {
    static ExactCore core;
    return core;
}

void ExactCore::check_limit(std::size_t n) const {
    // The limit guards table commands; series callers stay well below it.
    if (n > table_limit_ && n > 4096) throw DomainError("exact_core: index beyond table limit");
}

BigInt ExactCore::stirling2(std::size_t n, std::size_t k) {
    if (k > n) return BigInt(0);
    {
        std::shared_lock lk(mtx_);
        if (n < s2_rows_.size()) return s2_rows_[n][k];
    }
    std::unique_lock lk(mtx_);
    grow_stirling2(n);
    return s2_rows_[n][k];
}

void ExactCore::grow_stirling2(std::size_t n) {
    check_limit(n);
    if (s2_rows_.empty()) s2_rows_.push_back({BigInt(1)});
    while (s2_rows_.size() <= n) {
        std::size_t m = s2_rows_.size();
        const auto& prev = s2_rows_[m - 1];
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (std::size_t k = 1; k < m; ++k) row[k] = BigInt(static_cast<unsigned long>(k)) * prev[k] + prev[k - 1];
        s2_rows_.push_back(std::move(row));
    }
}

BigInt ExactCore::stirling1(std::size_t n, std::size_t k) {
    if (k > n) return BigInt(0);
    {
        std::shared_lock lk(mtx_);
        if (n < s1_rows_.size()) return s1_rows_[n][k];
    }
    std::unique_lock lk(mtx_);
    grow_stirling1(n);
    return s1_rows_[n][k];
}

void ExactCore::grow_stirling1(std::size_t n) {
    check_limit(n);
    if (s1_rows_.empty()) s1_rows_.push_back({BigInt(1)});
    while (s1_rows_.size() <= n) {
        std::size_t m = s1_rows_.size();  // building row m from row m-1
        const auto& prev = s1_rows_[m - 1];
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        BigInt nm1(static_cast<unsigned long>(m - 1));
        for (std::size_t k = 1; k < m; ++k) row[k] = prev[k - 1] - nm1 * prev[k];
        s1_rows_.push_back(std::move(row));
    }
}

BigRational ExactCore::bernoulli_number(std::size_t n) {
    {
        std::shared_lock lk(mtx_);
        if (n < bernoulli_.size()) return bernoulli_[n];
    }
    std::unique_lock lk(mtx_);
    grow_bernoulli(n);
    return bernoulli_[n];
}

void ExactCore::grow_bernoulli(std::size_t n) {
    check_limit(n);
    if (bernoulli_.empty()) bernoulli_.push_back(BigRational(1));
    while (bernoulli_.size() <= n) {
        std::size_t m = bernoulli_.size();
        if (m > 1 && (m & 1)) {
            bernoulli_.push_back(BigRational(0));
            continue;
        }
        // sum_{j<m} C(m+1,j) B_j = 0
        BigRational acc(0);
        for (std::size_t j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * bernoulli_[j];
        bernoulli_.push_back(-acc / BigRational(binomial(m + 1, m)));
    }
}

BigRational ExactCore::bernoulli_poly(std::size_t n, const BigRational& x) {
    bernoulli_number(n);
    std::shared_lock lk(mtx_);
    // B_n(x) = sum_k C(n,k) B_k x^(n-k); Horner, k ascending pairs with descending powers
    BigRational acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc = acc * x + BigRational(binomial(n, k)) * bernoulli_[k];
    return acc;
}

const RationalPolynomial& ExactCore::norlund_poly(std::size_t n) {
    {
        std::shared_lock lk(mtx_);
        if (n < norlund_.size()) return norlund_[n];
    }
    std::unique_lock lk(mtx_);
    grow_norlund(n);
    return norlund_[n];
}

const RationalPolynomial& ExactCore::norlund_poly_dalpha(std::size_t n) {
    {
        std::shared_lock lk(mtx_);
        if (n < norlund_dalpha_.size()) return norlund_dalpha_[n];
    }
    std::unique_lock lk(mtx_);
    grow_norlund(n);
    return norlund_dalpha_[n];
}

const RationalPolynomial& ExactCore::norlund_poly_over_alpha(std::size_t n) {
    if (n == 0) throw DomainError("norlund_poly_over_alpha: needs n >= 1");
    {
        std::shared_lock lk(mtx_);
        if (n < norlund_over_alpha_.size()) return norlund_over_alpha_[n];
    }
    std::unique_lock lk(mtx_);
    grow_norlund(n);
    return norlund_over_alpha_[n];
}

void ExactCore::grow_norlund(std::size_t n) {
    check_limit(n);
    if (norlund_.empty()) {
        norlund_.push_back(RationalPolynomial(BigRational(1)));
        norlund_dalpha_.push_back(RationalPolynomial{});
        norlund_over_alpha_.push_back(RationalPolynomial{});  // placeholder, index 0 unused
    }
    if (bernoulli_.size() <= n) grow_bernoulli(n);
    while (norlund_.size() <= n) {
        std::size_t m = norlund_.size();
        // dB_m = -(m/2) B_{m-1} - sum_{j=0}^{m-2} C(m,j) [B_{m-j}/(m-j)] B_j
        RationalPolynomial d = norlund_[m - 1] * rat(-static_cast<long>(m), 2);
        for (std::size_t j = 0; j + 2 <= m; ++j) {
            BigRational c = BigRational(binomial(m, j)) * bernoulli_[m - j] / BigRational(static_cast<long>(m - j));
            if (c == 0) continue;
            d -= norlund_[j] * c;
        }
        // B_m^(alpha) has zero constant term for m >= 1
        norlund_.push_back(d.antiderivative());
        norlund_dalpha_.push_back(std::move(d));
        norlund_over_alpha_.push_back(norlund_.back().divided_by_alpha());
    }
}

RationalPolynomial ExactCore::binomial_poly_shifted(long shift, std::size_t k) {
    // C(alpha + shift, k) = prod_{i=0}^{k-1} (alpha + shift - i) / k!
    RationalPolynomial p(BigRational(1));
    for (std::size_t i = 0; i < k; ++i) {
        RationalPolynomial lin(std::vector<BigRational>{BigRational(shift - static_cast<long>(i)), BigRational(1)});
        p = p * lin;
    }
    p *= rat(1) / BigRational(factorial(k));
    return p;
}

RationalPolynomial ExactCore::norlund_poly_direct(std::size_t n) const {
    RationalPolynomial total;
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt inner(0);  // sum_j (-1)^j C(k,j) j^(n+k)
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt t;
            mpz_ui_pow_ui(t.get_mpz_t(), j, n + k);
            t *= binomial(k, j);
            if (j & 1)
                inner -= t;
            else
                inner += t;
        }
        if (inner == 0 && k > 0) continue;
        RationalPolynomial c1 = binomial_poly_shifted(static_cast<long>(n), n - k);
        RationalPolynomial c2 = binomial_poly_shifted(static_cast<long>(k) - 1, k);
        BigRational scale = rat(factorial(n), factorial(n + k)) * BigRational(inner);
        total += (c1 * c2) * scale;
    }
    return total;
}

RationalPolynomial ExactCore::gen_bernoulli_poly(std::size_t n, const BigRational& x) {
    norlund_poly(n);
    std::shared_lock lk(mtx_);
    RationalPolynomial total;
    BigRational xp(1);
    for (std::size_t k = n + 1; k-- > 0;) {
        // term k: C(n,k) B_k^(alpha) x^(n-k), accumulated from k = n downward
        total += norlund_[k] * (BigRational(binomial(n, k)) * xp);
        xp *= x;
        if (k == 0) break;
    }
    return total;
}

BigRational ExactCore::norlund_number(std::size_t n) {
    const RationalPolynomial& p = norlund_poly(n);
    return p.eval(BigRational(static_cast<long>(n)));
}

BigRational ExactCore::harmonic(std::size_t n) {
    {
        std::shared_lock lk(mtx_);
        if (n < harmonic_.size()) return harmonic_[n];
    }
    std::unique_lock lk(mtx_);
    grow_harmonic(n);
    return harmonic_[n];
}

void ExactCore::grow_harmonic(std::size_t n) {
    if (harmonic_.empty()) harmonic_.push_back(BigRational(0));
    while (harmonic_.size() <= n)
        harmonic_.push_back(harmonic_.back() + rat(1, static_cast<long>(harmonic_.size())));
}

BigRational ExactCore::harmonic_gen(std::size_t n, unsigned r) {
    if (r == 0) throw DomainError("harmonic_gen: r must be positive");
    if (r == 1) return harmonic(n);
    BigRational acc(0);
    for (std::size_t j = 1; j <= n; ++j) {
        BigInt d;
        mpz_ui_pow_ui(d.get_mpz_t(), j, r);
        acc += rat(BigInt(1), d);
    }
    return acc;
}

BigRational ExactCore::p_constant(std::size_t n) {
    if (n < 2) throw DomainError("p_constant: defined for n >= 2");
    std::size_t k = n - 1;  // (k)! p_{k+1} = (-1)^(k-1) [B_k^(k) + k B_{k-1}^(k-1)]
    BigRational b = norlund_number(k) + BigRational(static_cast<long>(k)) * norlund_number(k - 1);
    BigRational p = b / BigRational(factorial(k));
    return (k % 2 == 0) ? -p : p;
}

const RationalPolynomial& ExactCore::alpha_prime_poly(std::size_t k) {
    if (k == 0) throw DomainError("alpha_prime_poly: needs k >= 1");
    {
        std::shared_lock lk(mtx_);
        if (k < alpha_prime_.size()) return alpha_prime_[k];
    }
    std::unique_lock lk(mtx_);
    grow_alpha_prime(k);
    return alpha_prime_[k];
}

void ExactCore::grow_alpha_prime(std::size_t n) {
    grow_norlund(n);
    if (alpha_prime_.empty()) alpha_prime_.push_back(RationalPolynomial{});
    while (alpha_prime_.size() <= n) {
        std::size_t k = alpha_prime_.size();
        // [k B_k/alpha + (alpha - k) dB_k] / alpha
        RationalPolynomial num = norlund_over_alpha_[k] * BigRational(static_cast<long>(k));
        RationalPolynomial lin(std::vector<BigRational>{BigRational(-static_cast<long>(k)), BigRational(1)});
        num += lin * norlund_dalpha_[k];
        alpha_prime_.push_back(num.divided_by_alpha());
    }
}

BigRational ExactCore::alpha_coeff(std::size_t k, const BigRational& s) {
    if (k == 0) return BigRational(1);
    BigRational q = norlund_poly_over_alpha(k).eval(s + BigRational(static_cast<long>(k) - 1));
    BigRational v = (s - 1) * q / BigRational(factorial(k));
    return (k & 1) ? -v : v;
}

BigRational ExactCore::alpha_coeff_prime(std::size_t k, const BigRational& s) {
    if (k == 0) return BigRational(0);
    BigRational a = alpha_prime_poly(k).eval(s + BigRational(static_cast<long>(k) - 1));
    BigRational v = a / BigRational(factorial(k));
    return (k & 1) ? -v : v;
}

}  // namespace norzeta
