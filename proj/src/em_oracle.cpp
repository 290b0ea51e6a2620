#include "norzeta/em_oracle.hpp"

#include <cmath>

#include "norzeta/exact_core.hpp"

namespace norzeta {
namespace {

// log2 |(s)_m| in doubles, adequate for parameter planning
double log2_pochhammer_mag(double sr, double si, long m) {
    double acc = 0;
    for (long j = 0; j < m; ++j) {
        double xr = sr + static_cast<double>(j);
        acc += 0.5 * std::log2(xr * xr + si * si + 1e-300);
    }
    return acc;
}

double log2_tail_bound(double sr, double si, double a, long N, long K) {
    if (sr + 2.0 * K <= 0.5) return 1e9;
    double b = 2.0;  // log2 4
    b += log2_pochhammer_mag(sr, si, 2 * K + 1);
    b -= (2.0 * K + 1.0) * std::log2(8.0 * std::atan(1.0));  // (2K+1) log2(2 pi)
    b -= (sr + 2.0 * K) * std::log2(a + static_cast<double>(N));
    b -= std::log2(sr + 2.0 * K);
    return b;
}

void plan(double sr, double si, double ad, mpfr_prec_t wp, long& N, long& K) {
    double scale_log2 = -sr * std::log2(ad);  // magnitude of the leading term a^-s
    double goal = -static_cast<double>(wp) - 8.0 + scale_log2;
    K = std::max<long>(8, static_cast<long>(0.14 * static_cast<double>(wp)) + 4);
    while (sr + 2.0 * static_cast<double>(K) < 2.0) K += 4;
    N = std::max<long>({K, static_cast<long>(0.30 * static_cast<double>(wp)),
                        static_cast<long>(std::ceil(std::fabs(si) * 0.2)), 4});
    for (int iter = 0; iter < 200; ++iter) {
        if (log2_tail_bound(sr, si, ad, N, K) <= goal) return;
        if (iter % 2 == 0)
            N += N / 2 + 8;
        else
            K += K / 4 + 2;
    }
    throw NonConvergenceError("hurwitz_zeta_oracle: tail bound not attainable");
}

}  // namespace

MPComplex hurwitz_zeta_oracle(const MPComplex& s, const MPReal& a, const PrecisionContext& ctx) {
    if (!(a > 0)) throw DomainError("hurwitz_zeta_oracle: requires a > 0");
    if (s.is_real() && s.real() == 1) throw PoleError("hurwitz_zeta_oracle: pole at s = 1");

    const double sr = s.real().to_double();
    const double si = s.imag().to_double();
    const double ad = a.to_double();

    long N = 0, K = 0;
    plan(sr, si, ad, ctx.working() + 24, N, K);
    // the alternating-sign power sum cancels down from (a+N)^|sigma| when sigma < 0
    long extra = 16;
    if (sr < 0) extra += static_cast<long>(std::ceil(-sr * std::log2(ad + static_cast<double>(N) + 1.0)));
    const mpfr_prec_t wp = ctx.working() + 24 + extra;
    plan(sr, si, ad, wp, N, K);

    MPComplex sw = s.rounded_to(wp);
    MPReal aw = a.rounded_to(wp);
    MPComplex minus_s = -sw;

    MPComplex sum(0L, wp);
    for (long n = 0; n < N; ++n) sum += exp(minus_s * MPComplex(log(aw + n)));

    MPReal base = aw + N;
    MPComplex pw = exp(minus_s * MPComplex(log(base)));  // (a+N)^{-s}
    MPComplex tail = pw * MPComplex(base) / (sw - 1L) + pw / 2L;

    // corrections: sum_{k=1}^K B_2k/(2k)! (s)_{2k-1} (a+N)^{-s-2k+1}
    MPComplex poch = sw;            // (s)_{2k-1}
    MPComplex power = pw / base;    // (a+N)^{-s-2k+1}
    MPReal inv2 = 1L / (base * base);
    for (long k = 1; k <= K; ++k) {
        BigRational c = exact_core().bernoulli_number(2 * static_cast<std::size_t>(k)) /
                        BigRational(factorial(2 * static_cast<std::size_t>(k)));
        tail += MPReal(c, wp) * poch * power;
        if (k < K) {
            poch = poch * (sw + (2 * k - 1)) * (sw + 2 * k);
            power = power * inv2;
        }
    }
    return (sum + tail).rounded_to(ctx.working());
}

}  // namespace norzeta
