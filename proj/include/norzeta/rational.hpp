#ifndef NORZETA_RATIONAL_HPP
#define NORZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace norzeta {

// Exact arithmetic lives on GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator), which is exactly the BigRational contract.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// Serialization: "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigRational rational_from_string(const std::string& s) {
    BigRational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

// C(n, k) for integer n >= 0.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigRational pow_rat(const BigRational& base, unsigned long e) {
    BigRational r(1);
    BigRational b = base;
    unsigned long n = e;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace norzeta

#endif
