#include "norzeta/dirichlet.hpp"

#include <numeric>

#include "norzeta/exact_core.hpp"
#include "norzeta/special.hpp"

namespace norzeta {

void DirichletCharacter::validate(const PrecisionContext& ctx) const {
    if (modulus == 0) throw DomainError("DirichletCharacter: modulus must be positive");
    if (values.size() != modulus) throw DomainError("DirichletCharacter: needs chi(1..m)");
    MPReal tol = pow2(-static_cast<long>(ctx.target_precision) + 8, ctx.working());
    for (unsigned long k = 1; k <= modulus; ++k) {
        const MPComplex& v = values[k - 1];
        bool unit = std::gcd(k, modulus) == 1;
        if (!unit) {
            if (!(abs(v) <= tol)) throw DomainError("DirichletCharacter: chi(k) != 0 off the units");
        } else if (!(abs(abs(v) - MPReal(1L, ctx.working())) <= tol)) {
            throw DomainError("DirichletCharacter: |chi(k)| != 1 on a unit");
        }
    }
    // spot multiplicativity on the full unit table
    for (unsigned long j = 1; j <= modulus; ++j) {
        if (std::gcd(j, modulus) != 1) continue;
        for (unsigned long k = j; k <= modulus; ++k) {
            if (std::gcd(k, modulus) != 1) continue;
            unsigned long jk = (j * k) % modulus;
            if (jk == 0) jk = modulus;
            if (!(abs(values[j - 1] * values[k - 1] - values[jk - 1]) <= tol * 4L))
                throw DomainError("DirichletCharacter: multiplicativity violated");
        }
    }
    if (principal) {
        for (unsigned long k = 1; k <= modulus; ++k)
            if (std::gcd(k, modulus) == 1 && !(abs(values[k - 1] - MPComplex(1L, ctx.working())) <= tol))
                throw DomainError("DirichletCharacter: principal flag with nonprincipal values");
    }
}

DirichletCharacter DirichletCharacter::principal_mod(unsigned long m, const PrecisionContext& ctx) {
    DirichletCharacter chi;
    chi.modulus = m;
    chi.principal = true;
    for (unsigned long k = 1; k <= m; ++k)
        chi.values.push_back(MPComplex(std::gcd(k, m) == 1 ? 1L : 0L, ctx.working()));
    return chi;
}

DirichletCharacter DirichletCharacter::mod4_odd(const PrecisionContext& ctx) {
    DirichletCharacter chi;
    chi.modulus = 4;
    chi.principal = false;
    chi.values = {MPComplex(1L, ctx.working()), MPComplex(0L, ctx.working()),
                  MPComplex(-1L, ctx.working()), MPComplex(0L, ctx.working())};
    return chi;
}

SeriesEvaluation dirichlet_L(const MPComplex& s, const DirichletCharacter& chi,
                             const PrecisionContext& ctx) {
    chi.validate(ctx);
    mpfr_prec_t wp = ctx.working();
    bool at_one = s.is_real() && s.real() == 1;
    if (at_one && chi.principal) throw PoleError("dirichlet_L: pole at s = 1 for principal chi");

    long m = static_cast<long>(chi.modulus);
    if (at_one) {
        // sum_k chi(k) = 0 for nonprincipal chi, so only the Laurent constant
        // -psi(k/m) survives the k-sum
        MPComplex acc(0L, wp);
        PrecisionContext ictx = ctx;
        for (long k = 1; k <= m; ++k) {
            if (chi.values[k - 1].is_zero()) continue;
            MPComplex psi = digamma(MPComplex(MPReal(rat(k, m), wp)), ictx);
            acc += chi.values[k - 1] * (-psi);
        }
        return {acc / m, 1, ctx.eps_working(), true};
    }

    MPComplex acc(0L, wp);
    MPReal tail(0L, wp);
    long terms = 0;
    bool converged = true;
    for (long k = 1; k <= m; ++k) {
        if (chi.values[k - 1].is_zero()) continue;
        SeriesEvaluation z = hurwitz_zeta(s, MPComplex(MPReal(rat(k, m), wp)), ctx);
        acc += chi.values[k - 1] * z.value;
        tail += z.tail_estimate;
        terms = std::max(terms, z.terms_used);
        converged = converged && z.converged;
    }
    MPComplex mfac = exp(-s.rounded_to(wp) * log(MPComplex(MPReal(m, wp))));
    return {mfac * acc, terms, tail * abs(mfac), converged};
}

SeriesEvaluation dirichlet_beta(const MPComplex& s, const PrecisionContext& ctx) {
    return dirichlet_L(s, DirichletCharacter::mod4_odd(ctx), ctx);
}

MPReal beta_odd_value(unsigned m, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working();
    BigRational b = exact_core().bernoulli_poly(2 * m + 1, rat(1, 4));
    MPReal pi_pow = pow(const_pi(wp), static_cast<long>(2 * m + 1));
    MPReal v = pow2(2 * static_cast<long>(m), wp) * pi_pow * MPReal(b, wp) /
               MPReal(factorial(2 * m + 1), wp);
    return (m % 2 == 0) ? -v : v;
}

}  // namespace norzeta
