#pragma once

#include "symtau/kernel.hpp"

namespace symtau {

// Coefficient data of the annihilating operator in the conjugated rational
// form: sum_j (a d^2_j + bF d_j + cF) + m d d_zeta + e applied to Delta*T.
// The dual build carries the K = 1/(F sqrt a) conjugation instead; only the
// logarithmic derivatives change and e stays the same.
struct OmegaCoeffs {
    KIndex idx;
    bool dual = false;

    XPoly a;     // quartic, vanishing at the four xi_l
    XPoly b;     // bidegree (3,3) polynomial
    XPoly c0;    // k-independent part of c
    XRat W;      // k-dependent part of c (denominator kept factored internally)
    RatFun d;    // 2 zeta (zeta-1)(zeta+1)(zeta+2)(2 zeta+1)
    RatFun logf; // f'/f
    RatFun e;    // m * d * f'/f

    XRat logF_x, logF_zeta; // logarithmic derivatives of the conjugator
    XRat bF, cF;            // conjugated first/zeroth order coefficients

    RatFun bF_at(const RatFun& x) const { return bF.eval_reg(x); }
    RatFun cF_at(const RatFun& x) const { return cF.eval_reg(x); }
};

OmegaCoeffs build_coeffs(const KIndex& k);
OmegaCoeffs build_coeffs_dual(const KIndex& k);

// Applies the operator to Delta*T_n^{(k)} (resp. Delta*U_n^{(k)}) with all
// denominators cleared and returns the cleared residual polynomial. The
// contract is a residual that is identically zero; a nonzero residual is
// returned for diagnosis rather than thrown.
MPoly apply_omega(const KIndex& k);
MPoly apply_omega_dual(const KIndex& k);

// Taylor data of base_T(n) against the closed forms (alpha, beta, gamma, delta).
bool taylor_check(int n);

// Brute-force constant-term lemma with fully symbolic jets, both the second-
// and first-order statements, for a given variable count m.
bool ct_lemma_check(int m);

// sum_j x_j^k d^k/dx_j^k Delta = k! C(m,k+1) Delta, checked exactly.
bool dd_identity_check(int m, int kmax);

// The coefficient recursion at x = xi_dir between (k, m) and (k - e_dir, m+1),
// plus the companion first-order (beta) combination.
bool recursion_check_eer(const KIndex& k, int dir);

struct PdeRecord {
    std::array<int, 4> k;
    int m = 0;
    bool dual = false;
    bool residual_zero = false;
    double seconds = 0.0;
};

// Runs apply_omega and apply_omega_dual over every index with
// sum|k_j| <= window, 1 <= m <= mmax (and |k|+m even).
std::vector<PdeRecord> pde_window_verify(int window, int mmax, int jobs);

} // namespace symtau
