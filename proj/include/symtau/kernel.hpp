#pragma once

#include <array>
#include <string>
#include <vector>

#include "symtau/xpoly.hpp"

namespace symtau {

// Lattice index k in Z^4 together with the free-variable count m.
// 2n = |k| + m throughout (n may be negative); n_tot = n + |k^-| is the
// half-size of the block function backing T_n^{(k)}.
struct KIndex {
    std::array<int, 4> k{};
    int m = 0;

    KIndex() = default;
    KIndex(std::array<int, 4> kk, int mm);

    int ksum() const { return k[0] + k[1] + k[2] + k[3]; }
    int abs_sum() const;
    int two_n() const { return ksum() + m; }
    std::array<int, 4> kplus() const;
    std::array<int, 4> kminus() const;
    int kplus_sum() const;
    int kminus_sum() const;
    int n_tot() const { return (m + abs_sum()) / 2; }
    std::string str() const;
};

// 2 * sum_j |k_j + 1/2|; the induction norm of the tau lattice (kept doubled
// so it stays integral). Invariant under permutations and k -> -k-1.
int n_norm2(const std::array<int, 4>& k);

// Half-period values xi_j = x(gamma_j) and eta_j = x(gamma_j + 1/3) as exact
// rational functions of zeta. eta_1 is the point at infinity; it is stored
// projectively and no arithmetic path consumes it.
struct XiTable {
    std::array<RatFun, 4> xi;
    std::array<bool, 4> eta_finite;
    std::array<RatFun, 4> eta; // eta[1] unused
    static const XiTable& get();
};

MPoly g_kernel();              // G(x,y) as a 2-variable polynomial
MPoly g_pair(int i, int j, int nvars); // G(x_i, x_j) inside an nvars ring
XPoly g_at_xi(int l);          // G(x, xi_l), univariate in x
RatFun g_scalar(int i, int j); // G(xi_i, xi_j)
XPoly quartic_a();             // a(x) = (zeta+2)^2 prod_l (x - xi_l)
RatFun dcoef();                // d = 2 zeta (zeta-1)(zeta+1)(zeta+2)(2 zeta+1)

// T_n^{(0,0,0,0)} in 2n variables: row-cleared Cauchy-type determinant,
// fraction-free Bareiss, then exact division by both Vandermonde blocks.
const MPoly& base_T(int n);

// The operator sigma-hat_n on polynomials of degree <= 3n-2, reconstructed by
// exact interpolation from its defining identity on the spanning family
// (x-a) prod_j (x-b_j) G(x,b_j).
class SigmaOp {
public:
    static const SigmaOp& get(int n);

    int n() const { return n_; }
    int domain_degree() const { return 3 * n_ - 2; }
    const XPoly& image(int t) const { return img_[t]; }

    XPoly apply(const XPoly& p) const;
    // apply coefficientwise along one variable of a multivariate polynomial
    MPoly apply_var(const MPoly& p, int var) const;
    // exact check of the defining identity on one (a, b_1..b_{n-1}) tuple
    bool check_sample(const Rat& a, const std::vector<Rat>& b) const;

private:
    explicit SigmaOp(int n);
    int n_;
    std::vector<XPoly> img_;
};

// Disk cache for the heavyweight intermediates, keyed by (kind, n, k, split).
// Empty dir disables persistence (in-memory memoization stays on).
void set_cache_dir(const std::string& dir);
const std::string& cache_dir();
std::vector<std::string> cache_list();
size_t cache_clear();
// drops the in-memory memos (base/block/tau); disk entries stay
void memo_clear();

// The block function T(x_1..x_split ; x_{split+1}..x_{2n}) of the paper's
// two-block construction; a polynomial in 2n variables. Cached.
const MPoly& block_poly(int n, int split);
inline MPoly block_T(int n, int split) { return block_poly(n, split); }

// T_n^{(k)} (or its dual U_n^{(k)}) as num / prod_j den1(x_j). All scalar
// normalization factors are folded into num; den1 == 1 iff the function is a
// polynomial (always the case for k in Z^4_{>=0}).
struct TFun {
    KIndex idx;
    bool dual = false;
    MPoly num;
    XPoly den1;

    bool is_poly() const { return den1.is_one(); }
    MPoly den_expanded() const;
    MRat as_mrat() const;
    template <class T>
    T eval_as(const std::vector<T>& x, const T& z) const {
        T v = num.eval_as(x, z);
        if (is_poly()) return v;
        T d(1);
        for (const T& xi : x) d *= den1.eval_as(xi, z);
        return v / d;
    }
};

TFun general_T(const KIndex& k);
TFun general_U(const KIndex& k);

// t^{(k)} = T_{|k|/2}^{(k)}, the m = 0 scalar. |k| must be even.
RatFun tau(const std::array<int, 4>& k);

} // namespace symtau
