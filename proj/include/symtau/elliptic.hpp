#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>

#include "symtau/kernel.hpp"

namespace symtau::num {

// Arithmetic runs at a fixed 100 decimal digits; the context's `prec` sets
// series truncation and the tolerances derived from it (so prec <= ~85 keeps
// honest headroom; the CLI enforces prec >= 30).
using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

Real to_real(const Rat& q);

} // namespace symtau::num

namespace symtau {
template <>
struct RatCast<num::Complex> {
    static num::Complex cast(const Rat& q) { return num::Complex(num::to_real(q)); }
};
} // namespace symtau

namespace symtau::num {

struct EllipticCtx {
    Complex tau;
    Complex p;     // exp(i pi tau)
    Complex omega; // exp(2 pi i / 3)
    int prec;
    int trunc;
    std::array<Complex, 4> gamma; // 0, tau/2, tau/2 + 1/2, 1/2

    explicit EllipticCtx(const Complex& tau_, int prec_ = 50);

    Complex qpoch(const Complex& x, const Complex& q) const; // (x;q)_trunc
    Complex theta(const Complex& x, const Complex& q) const; // (x;q)(q/x;q)
    Complex psi(const Complex& z) const;
    Complex x_of(const Complex& z) const;
    Complex zeta() const; // cached after first call
    Complex chi() const;
    Complex phi(const Complex& z) const;
    Complex M_n(const Complex& z, int n) const;
    // one z-factor of the Phi prefactor
    Complex Phi1(const Complex& z, const std::array<int, 4>& k) const;
    Complex E_of(const Complex& x, int m) const;
    Complex F_of(const Complex& x, const std::array<int, 4>& k) const;
    // modified potential: sum_l k_l(k_l+1)/phi(z-gamma_l)^2
    Complex V_of(const Complex& z, const std::array<int, 4>& k) const;

    // numeric xi_l = value of the exact xi at zeta(tau)
    Complex xi_num(int l) const;

    Real lattice_distance(const Complex& z) const; // to (1/6)Z + (tau/2)Z
    void require_margin(const Complex& z, const Real& margin) const;

private:
    mutable std::optional<Complex> zeta_cache_;
};

struct IdentityResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool finite_difference = false;
    bool pass = false;
};

// The full catalogue at one tau; grid is the number of sample points.
std::vector<IdentityResult> verify_identities(const Complex& tau, int prec, int grid);

struct SchroedingerResult {
    std::array<int, 4> k{};
    int m = 0;
    bool zero_potential = false;
    double spread_over_mean = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string c_mean; // the eigenvalue-like constant, for the report
};

SchroedingerResult verify_schroedinger(const KIndex& k, const Complex& tau, int prec, int grid,
                                       bool zero_potential = false);

} // namespace symtau::num
