#include "norzeta/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace norzeta {
namespace {

struct Node {
    MPReal x;       // abscissa in (0,1) (tanh-sinh) or (0,inf) (exp-sinh)
    MPReal weight;  // dx/dt at the node
};

// x(t) = 1/2 (1 + tanh((pi/2) sinh t)), w(t) = (pi/4) cosh t / cosh^2((pi/2) sinh t)
Node tanh_sinh_node(const MPReal& t, const MPReal& pi_half) {
    MPReal u = pi_half * sinh(t);
    MPReal th = tanh(u);
    MPReal sech2 = (1L - th * th);
    MPReal x = (1L + th) / 2L;
    MPReal w = pi_half / 2L * cosh(t) * sech2;
    return {x, w};
}

// x(t) = exp((pi/2) sinh t), w = (pi/2) cosh t * x
Node exp_sinh_node(const MPReal& t, const MPReal& pi_half) {
    MPReal x = exp(pi_half * sinh(t));
    MPReal w = pi_half * cosh(t) * x;
    return {x, w};
}

template <typename NodeFn>
QuadratureResult de_integrate(const Integrand& f, const PrecisionContext& ctx, const MPReal& eps_abs,
                              NodeFn&& make_node, double t_span) {
    const mpfr_prec_t wp = ctx.working();
    const MPReal pi_half = const_pi(wp) / 2L;
    const MPReal tiny = ldexp2(eps_abs, -10);

    long evals = 0;
    // contribution at abscissa t; false once the weighted term is negligible
    auto add_point = [&](const MPReal& t, MPReal& acc) {
        Node n = make_node(t, pi_half);
        MPReal c = n.weight * f(n.x);
        ++evals;
        acc += c;
        return !(abs(c) < tiny);
    };

    const int max_level = 10;
    MPReal prev(0L, wp);
    for (int level = 2; level <= max_level; ++level) {
        long steps = 1L << level;
        MPReal h = pow2(-level, wp);
        MPReal acc(0L, wp);
        MPReal t0(0L, wp);
        add_point(t0, acc);
        for (int dir = -1; dir <= 1; dir += 2) {
            int misses = 0;
            long jmax = static_cast<long>(t_span * static_cast<double>(steps)) + 1;
            for (long j = 1; j <= jmax; ++j) {
                MPReal tj = MPReal(dir * j, wp) * h;
                if (!add_point(tj, acc)) {
                    if (++misses >= 3) break;
                } else
                    misses = 0;
            }
        }
        MPReal current = acc * h;
        if (level > 2) {
            MPReal diff = abs(current - prev);
            if (diff <= eps_abs / 2L) return {current, diff, evals};
            if (level == max_level) throw NonConvergenceError("quadrature: max subdivision depth reached");
        }
        prev = current;
    }
    throw NonConvergenceError("quadrature: max subdivision depth reached");
}

}  // namespace

QuadratureResult integrate_01(const Integrand& f, const PrecisionContext& ctx, const MPReal& eps_abs) {
    return de_integrate(f, ctx, eps_abs, tanh_sinh_node, 6.6);
}

QuadratureResult integrate_01(const Integrand& f, const PrecisionContext& ctx) {
    MPReal eps = pow2(-static_cast<long>(ctx.target_precision / 2) - 4, ctx.working());
    return integrate_01(f, ctx, eps);
}

QuadratureResult integrate_semi_inf(const Integrand& f, const PrecisionContext& ctx,
                                    const MPReal& eps_abs) {
    return de_integrate(f, ctx, eps_abs, exp_sinh_node, 6.6);
}

// ---- Gauss-Legendre --------------------------------------------------------

namespace {

struct GLRule {
    std::vector<MPReal> x;  // nodes on [0,1]
    std::vector<MPReal> w;
};

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre(int n, const MPReal& x, MPReal& p, MPReal& dp) {
    mpfr_prec_t prec = x.prec();
    MPReal p0(1L, prec), p1 = x;
    for (int k = 2; k <= n; ++k) {
        MPReal pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1L);
}

GLRule build_rule(int n, mpfr_prec_t prec) {
    GLRule rule;
    rule.x.reserve(n);
    rule.w.reserve(n);
    MPReal pi = const_pi(prec);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton
        MPReal theta = pi * MPReal(4 * i + 3, prec) / MPReal(4 * n + 2, prec);
        MPReal x = cos(theta);
        MPReal p(prec), dp(prec);
        for (int it = 0; it < 64; ++it) {
            legendre(n, x, p, dp);
            MPReal dx = p / dp;
            x -= dx;
            if (dx.is_zero() || abs(dx).exp2() < -static_cast<long>(prec) + 4) break;
        }
        legendre(n, x, p, dp);
        MPReal w = 2L / ((1L - x * x) * dp * dp);
        // map [-1,1] -> [0,1]
        rule.x.push_back((x + 1L) / 2L);
        rule.w.push_back(w / 2L);
    }
    return rule;
}

std::map<std::pair<int, mpfr_prec_t>, GLRule>& rule_cache() {
    static std::map<std::pair<int, mpfr_prec_t>, GLRule> cache;
    return cache;
}
std::mutex& rule_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

MPReal gauss_legendre_01(const Integrand& f, int nodes, mpfr_prec_t prec) {
    GLRule rule;
    {
        std::lock_guard<std::mutex> lk(rule_mutex());
        auto key = std::make_pair(nodes, prec);
        auto it = rule_cache().find(key);
        if (it == rule_cache().end()) it = rule_cache().emplace(key, build_rule(nodes, prec)).first;
        rule = it->second;
    }
    MPReal acc(0L, prec);
    for (int i = 0; i < nodes; ++i) acc += rule.w[i] * f(rule.x[i]);
    return acc;
}

}  // namespace norzeta
