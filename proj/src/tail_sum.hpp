#ifndef NORZETA_SRC_TAIL_SUM_HPP
#define NORZETA_SRC_TAIL_SUM_HPP

#include "norzeta/em_oracle.hpp"
#include "norzeta/precision.hpp"

namespace norzeta {
namespace detail {

// Resummation of polynomial tails through Hurwitz-zeta tails from the
// Euler-Maclaurin oracle. The inverse-factorial sums in this artifact have
// terms t_j ~ C j^-p (1 + c1/j) (optionally with a ln j factor); fitting the
// last computed terms and integrating the fit against zeta(p, J) turns slow
// polynomial tails into a handful of oracle calls.

// Fit on t_{J-2}, t_{J-1}; returns sum_{j >= J} of the fitted tail.
inline MPReal zeta_tail_two_point(const MPReal& t_prev, const MPReal& t_last, long J, const MPReal& p,
                                  const PrecisionContext& octx) {
    mpfr_prec_t wp = t_last.prec();
    MPReal Jr(J - 1, wp), Jm1r(J - 2, wp);
    MPReal uJ = t_last * pow(Jr, p);
    MPReal uJm1 = t_prev * pow(Jm1r, p);
    if (uJ.is_zero()) return MPReal(0L, wp);
    MPReal c1 = (uJm1 - uJ) * Jr * Jm1r / (uJ * (Jr - Jm1r));
    MPReal C = uJ / (1L + c1 / Jr);
    MPReal zp = hurwitz_zeta_oracle(MPComplex(p), MPReal(J, wp), octx).real();
    MPReal zp1 = hurwitz_zeta_oracle(MPComplex(p + 1L), MPReal(J, wp), octx).real();
    return C * (zp + c1 * zp1);
}

// Fit u_j = t_j j^p = C ln j + D + (E ln j + F)/j on the last four terms
// (j = J-4..J-1); tail needs the log moment sum_{j>=J} ln j / j^q, taken as a
// central difference of the zeta tail in its first argument.
inline MPReal zeta_tail_log_four_point(const MPReal t4[4], long J, const MPReal& p,
                                       const PrecisionContext& octx) {
    mpfr_prec_t wp = t4[3].prec();
    MPReal A[4][5];
    for (int i = 0; i < 4; ++i) {
        long j = J - 4 + i;
        MPReal jr(j, wp);
        MPReal lj = log(jr);
        A[i][0] = lj;
        A[i][1] = MPReal(1L, wp);
        A[i][2] = lj / jr;
        A[i][3] = 1L / jr;
        A[i][4] = t4[i] * pow(jr, p);
    }
    // Gaussian elimination, partial pivot
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        if (piv != col)
            for (int c = col; c < 5; ++c) std::swap(A[piv][c], A[col][c]);
        for (int r = col + 1; r < 4; ++r) {
            MPReal f = A[r][col] / A[col][col];
            for (int c = col; c < 5; ++c) A[r][c] -= f * A[col][c];
        }
    }
    MPReal x[4] = {MPReal(0L, wp), MPReal(0L, wp), MPReal(0L, wp), MPReal(0L, wp)};
    for (int r = 3; r >= 0; --r) {
        MPReal acc = A[r][4];
        for (int c = r + 1; c < 4; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    auto Z = [&](const MPReal& q) { return hurwitz_zeta_oracle(MPComplex(q), MPReal(J, wp), octx).real(); };
    auto L = [&](const MPReal& q) {
        MPReal h = pow2(-static_cast<long>(wp) / 3, wp);
        return -(Z(q + h) - Z(q - h)) / (2L * h);
    };
    return x[0] * L(p) + x[1] * Z(p) + x[2] * L(p + 1L) + x[3] * Z(p + 1L);
}

}  // namespace detail
}  // namespace norzeta

#endif
