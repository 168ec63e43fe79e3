#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtau/elliptic.hpp"

using namespace symtau;
using namespace symtau::num;

namespace {

Complex tau_a() { return Complex(0, Real("1.2")); }

double dd(const Real& r) { return r.convert_to<double>(); }

} // namespace

TEST_CASE("theta basics") {
    EllipticCtx c(tau_a(), 40);
    Complex q(Real("0.05"));
    // theta(1;q) = 0 (the j = 0 factor vanishes)
    CHECK(dd(abs(c.theta(Complex(1), q))) < 1e-35);
    // theta(q/x;q) = theta(x;q)
    Complex x(Real("0.3"), Real("0.1"));
    CHECK(dd(abs(c.theta(q / x, q) - c.theta(x, q))) < 1e-35);
    // theta(1/x;q) = -x^{-1} theta(x;q)
    Complex lhs = c.theta(Complex(1) / x, q);
    Complex rhs = -c.theta(x, q) / x;
    CHECK(dd(abs(lhs - rhs) / abs(rhs)) < 1e-35);
}

TEST_CASE("psi oddness and three-term relation at sample points") {
    EllipticCtx c(tau_a(), 40);
    Complex z(Real("0.11"), Real("0.07"));
    CHECK(dd(abs(c.psi(z + Complex(1)) + c.psi(z)) / abs(c.psi(z))) < 1e-34);
    Complex third(Real(1) / 3);
    Complex res = c.psi(z) - c.psi(z + third) - c.psi(z - third);
    CHECK(dd(abs(res) / abs(c.psi(z))) < 1e-34);
}

TEST_CASE("x at distinguished points") {
    EllipticCtx c(tau_a(), 40);
    // x(1/3) = eta_0 = 0 and x(1/2) = xi_3 = 1
    CHECK(dd(abs(c.x_of(Complex(Real(1) / 3)))) < 1e-34);
    CHECK(dd(abs(c.x_of(Complex(Real(1) / 2)) - Complex(1))) < 1e-34);
}

TEST_CASE("zeta value cross-checked through an independent product identity") {
    EllipticCtx c(tau_a(), 40);
    Complex z = c.zeta();
    Complex p2 = c.p * c.p;
    Complex tmpw = c.theta(-c.p * c.omega, p2), tw = c.theta(c.omega, p2),
            tmw = c.theta(-c.omega, p2), tpw = c.theta(c.p * c.omega, p2);
    Complex two_z_plus_1 = tmpw * tmpw * tw * tw / (tmw * tmw * tpw * tpw);
    CHECK(dd(abs(Complex(2) * z + Complex(1) - two_z_plus_1) / abs(two_z_plus_1)) < 1e-34);
}

TEST_CASE("numeric xi agree with the exact table at zeta(tau)") {
    EllipticCtx c(tau_a(), 40);
    for (int l = 0; l < 4; ++l) {
        Complex got = c.x_of(c.gamma[l]);
        Complex want = c.xi_num(l);
        CHECK(dd(abs(got - want) / abs(want)) < 1e-34);
    }
}

TEST_CASE("identity battery passes at both spec tau values") {
    for (Complex tau : {tau_a(), Complex(Real("0.3"), Real("1.1"))}) {
        auto results = verify_identities(tau, 50, 16);
        CHECK(results.size() >= 16);
        for (const auto& r : results) {
            INFO(r.name, " residual ", r.max_residual, " tol ", r.tolerance);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("Schroedinger constancy for the simplest nontrivial index") {
    SchroedingerResult r = verify_schroedinger(KIndex({1, 0, 0, 0}, 1), tau_a(), 50, 12);
    INFO("spread ", r.spread_over_mean);
    CHECK(r.pass);
    // negative control: dropping the potential destroys constancy
    SchroedingerResult bad = verify_schroedinger(KIndex({1, 0, 0, 0}, 1), tau_a(), 50, 12, true);
    CHECK_FALSE(bad.pass);
    CHECK(bad.spread_over_mean > 1e-2);
}