#ifndef NORZETA_DIRICHLET_HPP
#define NORZETA_DIRICHLET_HPP

#include <vector>

#include "norzeta/series.hpp"

namespace norzeta {

// A Dirichlet character as its value table chi(1..m). No group theory here:
// the L-series combination needs only the values.
struct DirichletCharacter {
    unsigned long modulus = 1;
    std::vector<MPComplex> values;  // values[k-1] = chi(k), k = 1..m
    bool principal = false;

    // invariant checks: chi(k) = 0 iff gcd(k,m) > 1, |chi(k)| = 1 on units,
    // chi(j)chi(k) = chi(jk mod m); throws DomainError on violation
    void validate(const PrecisionContext& ctx) const;

    static DirichletCharacter principal_mod(unsigned long m, const PrecisionContext& ctx);
    // the odd quadratic character mod 4 (the Dirichlet beta character)
    static DirichletCharacter mod4_odd(const PrecisionContext& ctx);
};

// L(s, chi) = m^-s sum_k chi(k) zeta(s, k/m). For nonprincipal chi the value
// at s = 1 is taken through the Laurent constant: -(1/m) sum_k chi(k) psi(k/m).
SeriesEvaluation dirichlet_L(const MPComplex& s, const DirichletCharacter& chi,
                             const PrecisionContext& ctx);

// beta(s) = 4^-s [zeta(s,1/4) - zeta(s,3/4)]
SeriesEvaluation dirichlet_beta(const MPComplex& s, const PrecisionContext& ctx);

// L(2m+1) = (-1)^(m+1) 2^(2m) pi^(2m+1) B_{2m+1}(1/4) / (2m+1)!, with the
// Bernoulli polynomial value exact.
MPReal beta_odd_value(unsigned m, const PrecisionContext& ctx);

}  // namespace norzeta

#endif
