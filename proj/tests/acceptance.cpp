// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run through ctest or directly; prints PASS/FAIL with the measured residuals.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "norzeta/dirichlet.hpp"
#include "norzeta/em_oracle.hpp"
#include "norzeta/exact_core.hpp"
#include "norzeta/gen_stirling.hpp"
#include "norzeta/series.hpp"
#include "norzeta/special.hpp"
#include "norzeta/stieltjes.hpp"
#include "norzeta/verify.hpp"

using namespace norzeta;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Independent re-evaluation of the gamma_2 series: derivative coefficients
// through the digamma-difference formula instead of the recursion polynomials,
// its own shift, reversed summation order, elevated precision.
MPReal gamma2_reimplementation(const PrecisionContext& base) {
    mpfr_prec_t wp = base.working() + 96;
    PrecisionContext ictx(wp - 64, 64, base.max_terms, base.tail_confirm);
    ExactCore& core = exact_core();
    const long M = 48;           // shift target
    const long K = 180;          // fixed truncation, tail far below needs
    MPReal as(1L + M, wp);

    auto dB_alt = [&](std::size_t n) {
        // [psi(n+alpha+1) - psi(alpha)] B_n^(alpha) - double sum, at alpha = n
        BigRational alpha(static_cast<long>(n));
        BigRational v1(0);
        for (std::size_t r = 0; r <= n; ++r) v1 += BigRational(1) / (alpha + BigRational(static_cast<long>(r)));
        v1 *= core.norlund_poly(n).eval(alpha);
        BigRational v2(0);
        for (std::size_t k = 0; k <= n; ++k) {
            BigRational c1(1), c2(1);
            for (std::size_t i = 0; i < n - k; ++i) c1 *= (alpha + BigRational(static_cast<long>(n - i)));
            c1 /= BigRational(factorial(n - k));
            for (std::size_t i = 0; i < k; ++i) c2 *= (alpha + BigRational(static_cast<long>(k) - 1 - static_cast<long>(i)));
            c2 /= BigRational(factorial(k));
            BigInt inner(0);
            for (std::size_t j = 0; j <= k; ++j) {
                BigInt t;
                mpz_ui_pow_ui(t.get_mpz_t(), j, n + k);
                t *= binomial(k, j);
                inner += (j % 2 == 0) ? t : -t;
            }
            v2 += c1 * c2 / (alpha + BigRational(static_cast<long>(k))) * rat(factorial(n), factorial(n + k)) *
                  BigRational(inner);
        }
        return v1 - v2;
    };

    // collect terms, then sum smallest-first
    std::vector<MPReal> terms;
    MPReal lg_as = lngamma_mpfr(as);
    for (long k = 1; k <= K; ++k) {
        MPReal g = exp(lg_as - lngamma_mpfr(as + k));  // Gamma(a)/Gamma(k+a)
        MPReal bkk(core.norlund_number(static_cast<std::size_t>(k)), wp);
        MPReal dbk(dB_alt(static_cast<std::size_t>(k)), wp);
        MPReal Hkm1(0L, wp);
        for (long j = 1; j < k; ++j) Hkm1 += MPReal(1L, wp) / j;
        MPReal psi_ka = digamma_mpfr(as + k);
        MPReal br = Hkm1 * k - 1L - psi_ka * k;
        MPReal t = (dbk / (k * k) + bkk * br / (static_cast<long>(k) * k * k)) * g;
        if (k & 1) t = -t;
        terms.push_back(t * 2L);
    }
    MPReal s1(0L, wp);
    for (std::size_t i = terms.size(); i-- > 0;) s1 += terms[i];

    MPReal psi = digamma_mpfr(as);
    MPReal psi1 = polygamma(1, as, ictx);
    MPReal psi2 = polygamma(2, as, ictx);
    MPReal val = (-(psi * psi * psi) + 3L * psi * psi1 - psi2) / 3L + s1;
    for (long j = M - 1; j >= 1; --j) {  // j = 0 contributes ln^2(1)/1 = 0
        MPReal aj(1L + j, wp);
        MPReal lg = log(aj);
        val += lg * lg / aj;
    }
    return val;
}

}  // namespace

int main() {
    const PrecisionContext ctx(128);
    const mpfr_prec_t wp = ctx.working();
    std::mt19937_64 rng(0x5eed5eedULL);

    // 1 -- exact identity suite
    {
        auto t0 = std::chrono::steady_clock::now();
        CheckList checks = verify_exact();
        double dt = seconds_since(t0);
        bool ok = all_pass(checks) && dt < 10.0;
        std::string bad;
        for (const auto& c : checks)
            if (!c.pass) bad += c.name + "; ";
        report(1, "exact identity suite (zero residual)", ok,
               bad.empty() ? fmt(dt) + " s" : bad + fmt(dt) + " s");
    }

    // 2 -- zeta(0,a) and zeta(1-m,a) against exact Bernoulli values
    {
        double worst = 0;
        for (BigRational av : {rat(1, 4), rat(1, 3), rat(1, 1), rat(7, 2)}) {
            MPComplex a(MPReal(av, wp));
            SeriesEvaluation z0 = hurwitz_zeta(MPComplex(0L, wp), a, ctx);
            MPReal want0(rat(1, 2) - av, wp);
            worst = std::max(worst, (abs(z0.value - MPComplex(want0)) / abs(want0)).to_double());
            for (unsigned m = 1; m <= 8; ++m) {
                SeriesEvaluation z = hurwitz_zeta(MPComplex(1L - static_cast<long>(m), wp), a, ctx);
                BigRational wantq = -exact_core().bernoulli_poly(m, av) / BigRational(static_cast<long>(m));
                MPReal want(wantq, wp);
                MPReal scale = want.is_zero() ? MPReal(1L, wp) : abs(want);
                worst = std::max(worst, (abs(z.value - MPComplex(want)) / scale).to_double());
            }
        }
        report(2, "zeta(1-m,a) = -B_m(a)/m through the series", worst <= std::pow(2.0, -120),
               "worst rel err " + fmt(worst));
    }

    // 3 -- trivial zeros
    {
        double worst = 0;
        for (long n = 1; n <= 5; ++n)
            worst = std::max(worst, abs(riemann_zeta(MPComplex(-2 * n, wp), ctx).value).to_double());
        report(3, "trivial zeros |zeta(-2n)|, n = 1..5", worst <= std::pow(2.0, -120),
               "worst " + fmt(worst));
    }

    // 4 -- 200 random points against the Euler-Maclaurin oracle
    {
        auto t0 = std::chrono::steady_clock::now();
        double worst = 0;
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            double sr, si, ar;
            do {
                sr = uniform(rng, -10, 10);
                si = uniform(rng, -10, 10);
            } while (sr * sr + si * si > 100.0 || std::hypot(sr - 1.0, si) < 0.1);
            ar = uniform(rng, 0.02, 5.0);
            SeriesEvaluation z = hurwitz_zeta(MPComplex(sr, si, wp), MPComplex(ar, 0.0, wp), ctx);
            MPComplex ref = hurwitz_zeta_oracle(MPComplex(sr, si, wp), MPReal(ar, wp), ctx);
            double d = (abs(z.value - ref) / abs(ref)).to_double();
            worst = std::max(worst, d);
            if (!z.converged || d > std::pow(2.0, -120)) ++bad;
        }
        double dt = seconds_since(t0);
        report(4, "series vs oracle on 200 random (s,a)", bad == 0 && dt < 60.0,
               "worst rel err " + fmt(worst) + ", " + fmt(dt) + " s");
    }

    // 5 -- Dirichlet beta values
    {
        MPReal pi = const_pi(wp);
        BigRational b1 = exact_core().bernoulli_poly(1, rat(1, 4));
        BigRational b3 = exact_core().bernoulli_poly(3, rat(1, 4));
        bool exact_ok = (b1 == rat(-1, 4)) && (b3 == rat(3, 64));
        double e1 = abs(beta_odd_value(0, ctx) - pi / 4L).to_double();
        double e3 = abs(beta_odd_value(1, ctx) - pi * pi * pi / 32L).to_double();
        SeriesEvaluation b2 = dirichlet_beta(MPComplex(2L, wp), ctx);
        double e2_catalan = abs(b2.value - MPComplex(const_catalan(wp))).to_double();
        // the paper's printed digits
        double e2_digits = abs(b2.value - MPComplex(MPReal("0.91596559", wp))).to_double();
        bool ok = exact_ok && e1 < 1e-35 && e3 < 1e-34 && e2_catalan <= 1e-12 && e2_digits < 5e-9;
        report(5, "L(1) = pi/4, L(3) = pi^3/32 exactly; L(2) = Catalan", ok,
               "errs " + fmt(e1) + ", " + fmt(e3) + ", " + fmt(e2_catalan));
    }

    // 6 -- the log-sum constant, four representations
    {
        MPReal ref("1.25774688694", wp);
        double worst = 0;
        for (auto r : {LogSumRepr::zeta_sum, LogSumRepr::log_series, LogSumRepr::digamma_integral,
                       LogSumRepr::digamma_integral_alt})
            worst = std::max(worst, abs(log_sum_constant(r, ctx) - ref).to_double());
        report(6, "log-sum constant 1.25774688694 by four representations", worst <= 1e-10,
               "worst " + fmt(worst));
    }

    // 7 -- gamma_1 four ways against the oracle Laurent fit
    {
        MPReal one(1L, wp);
        StieltjesResult fit = stieltjes_laurent_fit(1, one, ctx);
        double eref = abs(fit.value - MPReal("-0.0728158454836767", wp)).to_double();
        double e_series = abs(gamma1(one, ctx).value - fit.value).to_double();
        double e_binom = abs(gamma1_binomial(one, ctx).value - fit.value).to_double();
        double e_hyp = abs(gamma1_hyp(one, ctx).value - fit.value).to_double();
        double e_quadA = abs(gamma1_quadrature(Gamma1Integral::psi_combination, ctx).value - fit.value).to_double();
        double e_quadB = abs(gamma1_quadrature(Gamma1Integral::half_bracket, ctx).value - fit.value).to_double();
        bool ok = eref < 1e-15 && e_series <= 1e-15 && e_binom <= 1e-15 && e_hyp <= 1e-8 &&
                  e_quadA <= 1e-8 && e_quadB <= 1e-8;
        report(7, "gamma_1 by series/binomial (1e-15) and integral routes (1e-8)", ok,
               "series " + fmt(e_series) + ", binomial " + fmt(e_binom) + ", hyp " + fmt(e_hyp) +
                   ", quad " + fmt(std::max(e_quadA, e_quadB)));
    }

    // 8 -- gamma_2 series against the oracle fit, with the independent
    //      reimplementation as the documented fallback route
    {
        MPReal one(1L, wp);
        StieltjesResult fit = stieltjes_laurent_fit(2, one, ctx);
        StieltjesResult ser = gamma2(one, ctx);
        double err = abs(ser.value - fit.value).to_double();
        if (err <= 1e-10) {
            report(8, "gamma_2(1) series vs oracle Laurent fit", true, "err " + fmt(err));
        } else {
            MPReal re = gamma2_reimplementation(ctx);
            double err2 = abs(re - fit.value).to_double();
            double agree = abs(re - ser.value).to_double();
            // the discrepancy counts as reproduced only if both routes land on
            // the same value away from the oracle
            bool reproduced = agree <= 1e-12 && err2 > 1e-10;
            report(8, "gamma_2(1) discrepancy quantified and reproduced", reproduced,
                   "series-fit " + fmt(err) + ", reimpl-fit " + fmt(err2) + ", series-reimpl " + fmt(agree));
        }
    }

    // 9 -- Euler sums at N = 1e5
    {
        EulerSumResult e3 = euler_sum_zeta3(100000, ctx);
        EulerSumResult e4 = euler_sum_zeta4(100000, ctx);
        MPReal z3 = riemann_zeta_oracle(MPComplex(3L, wp), ctx).real();
        MPReal z4 = riemann_zeta_oracle(MPComplex(4L, wp), ctx).real();
        double r3 = abs(e3.value - z3).to_double(), t3 = e3.tail_estimate.to_double();
        double r4 = abs(e4.value - z4).to_double(), t4 = e4.tail_estimate.to_double();
        bool ok = r3 <= 10 * t3 && r4 <= 10 * t4;
        report(9, "Euler sums at N = 1e5 within 10x of the tail estimate", ok,
               "zeta3 resid " + fmt(r3) + " est " + fmt(t3) + "; zeta4 resid " + fmt(r4) + " est " + fmt(t4));
    }

    // 10 -- Rubinstein coefficient identities, exact
    {
        ExactCore& core = exact_core();
        bool ok = true;
        for (std::size_t k = 0; k <= 20; ++k) {
            BigRational want = BigRational(1) / BigRational(factorial(k));
            if (k % 2 == 1) want = -want;
            if (core.alpha_coeff(k, BigRational(-static_cast<long>(k))) != want) ok = false;
        }
        for (std::size_t k = 1; k <= 20; ++k) {
            BigRational want = core.norlund_number(k) / (BigRational(static_cast<long>(k)) * BigRational(factorial(k)));
            if (k % 2 == 1) want = -want;
            if (core.alpha_coeff_prime(k, BigRational(1)) != want) ok = false;
        }
        for (unsigned m = 0; m <= 5; ++m) {
            std::size_t k = 2 * m + 2;
            BigRational bern = core.bernoulli_number(k) / BigRational(factorial(k));
            if (core.alpha_coeff(k, BigRational(-(2L * m + 1))) != bern) ok = false;
            if (core.alpha_coeff(k, BigRational(-(2L * m))) != -BigRational(2L * m + 1) * bern) ok = false;
        }
        report(10, "alpha_k special values and derivative at 1, all exact", ok, "");
    }

    // 11 -- generalized Stirling numbers
    {
        double worst_int = 0;
        for (long lam = 2; lam <= 10; ++lam)
            for (int k = 1; k <= 4 && k <= lam; ++k) {
                MPComplex got = stirling1_complex(MPComplex(lam, wp), k, ctx);
                MPReal want(BigRational(exact_core().stirling1(static_cast<std::size_t>(lam),
                                                               static_cast<std::size_t>(k))), wp);
                MPReal scale = want.is_zero() ? MPReal(1L, wp) : abs(want);
                worst_int = std::max(worst_int, (abs(got - MPComplex(want)) / scale).to_double());
            }
        double worst_rec = 0;
        for (int i = 0; i < 50; ++i) {
            double lr = uniform(rng, 1.5, 9.0);
            double li = uniform(rng, -4.0, 4.0);
            int k = 2 + static_cast<int>(rng() % 3);
            worst_rec = std::max(worst_rec,
                                 stirling1_recursion_residual(MPComplex(lr, li, wp), k, ctx).to_double());
        }
        bool ok = worst_int <= std::pow(2.0, -120) && worst_rec <= std::pow(2.0, -120);
        report(11, "complex Stirling: integer match and recursion residuals", ok,
               "int " + fmt(worst_int) + ", rec " + fmt(worst_rec));
    }

    // 12 -- half-argument and derivative identities on random points
    {
        double worst_half = 0;
        for (int i = 0; i < 50; ++i) {
            double sr, si;
            do {
                sr = uniform(rng, -8, 8);
                si = uniform(rng, -8, 8);
            } while (std::hypot(sr - 1.0, si) < 0.2);
            MPComplex s(sr, si, wp);
            SeriesEvaluation lhs = hurwitz_zeta(s, MPComplex(MPReal(rat(1, 2), wp)), ctx);
            SeriesEvaluation zs = riemann_zeta(s, ctx);
            MPComplex rhs = (exp(s.rounded_to(wp) * const_log2(wp)) - 1L) * zs.value;
            worst_half = std::max(worst_half, (abs(lhs.value - rhs) / abs(lhs.value)).to_double());
        }
        double worst_da = 0;
        for (int i = 0; i < 50; ++i) {
            double sr, si, ar;
            do {
                sr = uniform(rng, -6, 6);
                si = uniform(rng, -6, 6);
            } while (std::hypot(sr - 1.0, si) < 0.2 || std::hypot(sr, si) < 0.2);
            ar = uniform(rng, 0.1, 5.0);
            worst_da = std::max(worst_da,
                                partial_a_identity_check(MPComplex(sr, si, wp), MPComplex(ar, 0.0, wp), ctx)
                                    .to_double());
        }
        bool ok = worst_half <= std::pow(2.0, -120) && worst_da <= std::pow(2.0, -120);
        report(12, "half-argument and derivative identities, 50 random points each", ok,
               "half " + fmt(worst_half) + ", da " + fmt(worst_da));
    }

    std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAIL" : "OK", g_failures);
    return g_failures ? 1 : 0;
}
