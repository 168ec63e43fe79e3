#include "symtau/elliptic.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <functional>
#include <sstream>

#include "symtau/pde.hpp"

namespace symtau::num {

namespace {

const Real& pi_r() {
    static const Real v = boost::math::constants::pi<Real>();
    return v;
}

Complex I() { return Complex(0, 1); }
Complex two_pi_i() { return Complex(0, 2 * pi_r()); }

Complex ipow(Complex base, long e) {
    if (e == 0) return Complex(1);
    if (e < 0) {
        base = Complex(1) / base;
        e = -e;
    }
    Complex acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// principal-branch power with a half-integer exponent given as k/2
Complex half_pow(const Complex& base, long k) {
    if (k % 2 == 0) return ipow(base, k / 2);
    return pow(base, Complex(Real(k) / 2));
}

double to_d(const Real& r) { return r.convert_to<double>(); }

double rel_residual(const Complex& lhs, const Complex& rhs) {
    Real scale = std::max(abs(lhs), abs(rhs));
    if (scale < Real("1e-80")) return 0.0;
    return to_d(abs(lhs - rhs) / scale);
}

using CFun = std::function<Complex(const Complex&)>;

// central difference with one Richardson step: O(h^4)
Complex d1(const CFun& f, const Complex& z, const Real& h) {
    auto D = [&](const Real& s) { return (f(z + s) - f(z - s)) / (2 * s); };
    Complex a = D(h), b = D(h / 2);
    return (Complex(4) * b - a) / Complex(3);
}

Complex d2(const CFun& f, const Complex& z, const Real& h) {
    Complex f0 = f(z);
    auto D = [&](const Real& s) { return (f(z + s) - 2 * f0 + f(z - s)) / (s * s); };
    Complex a = D(h), b = D(h / 2);
    return (Complex(4) * b - a) / Complex(3);
}

} // namespace

Real to_real(const Rat& q) {
    Real n(q.get_num().get_str());
    if (q.get_den() == 1) return n;
    return n / Real(q.get_den().get_str());
}

EllipticCtx::EllipticCtx(const Complex& tau_, int prec_) : tau(tau_), prec(prec_) {
    if (tau.imag() <= 0) throw UsageError("tau must lie in the upper half-plane");
    if (prec < 30) throw UsageError("prec must be at least 30");
    p = exp(I() * pi_r() * tau);
    Real s3 = sqrt(Real(3));
    omega = Complex(Real(-1) / 2, s3 / 2);
    // |p|^(2 trunc) < 10^-(prec+12)
    Real lg = -log10(abs(p));
    trunc = std::max(24, static_cast<int>(to_d((Real(prec) + 12) / (2 * lg))) + 2);
    gamma = {Complex(0), tau / 2, tau / 2 + Complex(Real(1) / 2), Complex(Real(1) / 2)};
}

Complex EllipticCtx::qpoch(const Complex& x, const Complex& q) const {
    Complex acc(1), qe(1);
    for (int j = 0; j < trunc; ++j) {
        acc *= Complex(1) - x * qe;
        qe *= q;
    }
    return acc;
}

Complex EllipticCtx::theta(const Complex& x, const Complex& q) const {
    return qpoch(x, q) * qpoch(q / x, q);
}

Complex EllipticCtx::psi(const Complex& z) const {
    Complex p2 = p * p;
    Complex e2z = exp(two_pi_i() * z);
    Complex pref = exp(I() * pi_r() * tau / 12) * qpoch(p2, p2) * exp(-I() * pi_r() * z);
    return pref * theta(e2z, p2) * theta(p * e2z, p2) * theta(-p * e2z, p2);
}

Complex EllipticCtx::x_of(const Complex& z) const {
    Complex p2 = p * p;
    Complex e2z = exp(two_pi_i() * z);
    Complex num = theta(-p * omega, p2);
    num *= num;
    num *= theta(omega * e2z, p2) * theta(omega / e2z, p2);
    Complex den = theta(-omega, p2);
    den *= den;
    den *= theta(p * omega * e2z, p2) * theta(p * omega / e2z, p2);
    return num / den;
}

Complex EllipticCtx::zeta() const {
    if (!zeta_cache_) {
        Complex p2 = p * p;
        zeta_cache_ = omega * omega * theta(Complex(-1), p2) * theta(-p * omega, p2) /
                      (theta(-p, p2) * theta(-omega, p2));
    }
    return *zeta_cache_;
}

Complex EllipticCtx::chi() const {
    Complex p2 = p * p;
    Complex q4 = qpoch(p2, p2);
    q4 = q4 * q4;
    q4 = q4 * q4;
    Complex t3 = theta(-omega, p2);
    return Complex(4) * pi_r() * pi_r() * p * q4 * theta(Complex(-1), p2) * t3 * t3 * t3;
}

Complex EllipticCtx::phi(const Complex& z) const {
    Complex p6 = ipow(p, 6);
    Complex e6z = exp(Complex(0, 6 * pi_r()) * z);
    Complex ratio = qpoch(-p6, p6) / qpoch(p6, p6);
    return I() / (3 * pi_r()) * ratio * ratio * theta(e6z, p6) / theta(-e6z, p6);
}

Complex EllipticCtx::M_n(const Complex& z, int n) const {
    Complex p2 = p * p;
    Complex e2z = exp(two_pi_i() * z);
    Complex core = theta(omega * p * e2z, p2) * theta(omega * p / e2z, p2);
    return exp(-two_pi_i() * z) * theta(e2z * e2z, p2) * ipow(core, 3 * n - 2);
}

Complex EllipticCtx::Phi1(const Complex& z, const std::array<int, 4>& k) const {
    Complex p6 = ipow(p, 6), p3 = ipow(p, 3);
    Complex e3z = exp(Complex(0, 3 * pi_r()) * z);
    Complex e6z = e3z * e3z;
    Complex f0 = theta(e6z, p6) / e3z;
    Complex f1 = theta(p3 * e6z, p6);
    Complex f2 = theta(-p3 * e6z, p6);
    Complex f3 = theta(-e6z, p6) / e3z;
    return ipow(f0, k[0]) * ipow(f1, k[1]) * ipow(f2, k[2]) * ipow(f3, k[3]);
}

Complex EllipticCtx::xi_num(int l) const { return XiTable::get().xi[l].eval_as<Complex>(zeta()); }

Complex EllipticCtx::E_of(const Complex& x, int m) const {
    Complex out(1);
    for (int l = 0; l < 3; ++l) out *= half_pow(x - xi_num(l), 1 - m);
    out *= half_pow(x - xi_num(3), 1);
    return out;
}

Complex EllipticCtx::F_of(const Complex& x, const std::array<int, 4>& k) const {
    Complex z = zeta();
    Complex out(1);
    for (int l = 0; l < 4; ++l) {
        if (k[l] == 0) continue;
        Complex g = g_at_xi(l).eval_as<Complex>(x, z);
        out *= half_pow((x - xi_num(l)) / g, k[l]);
    }
    return out;
}

Complex EllipticCtx::V_of(const Complex& z, const std::array<int, 4>& k) const {
    Complex out(0);
    for (int l = 0; l < 4; ++l) {
        long w = static_cast<long>(k[l]) * (k[l] + 1);
        if (w == 0) continue;
        Complex ph = phi(z - gamma[l]);
        out += Complex(w) / (ph * ph);
    }
    return out;
}

Real EllipticCtx::lattice_distance(const Complex& z) const {
    Complex half_tau = tau / 2;
    Real b = half_tau.imag();
    long n0 = std::lround(to_d(z.imag() / b));
    Real best("1e10");
    for (long n = n0 - 1; n <= n0 + 1; ++n) {
        Complex rem = z - Complex(n) * half_tau;
        long m0 = std::lround(to_d(rem.real() * 6));
        for (long m = m0 - 1; m <= m0 + 1; ++m) {
            Real d = abs(rem - Complex(Real(m) / 6));
            best = std::min(best, d);
        }
    }
    return best;
}

void EllipticCtx::require_margin(const Complex& z, const Real& margin) const {
    if (lattice_distance(z) < margin)
        throw NearSingularity("grid point too close to the (1/6)Z + (tau/2)Z lattice");
}

// ---------------------------------------------------------------------------
// identity battery

namespace {

struct Battery {
    Complex tau;
    int prec;
    int grid;
    EllipticCtx c;
    std::vector<Complex> zs;
    double tol_alg, tol_fd;
    std::vector<IdentityResult> out;
    Real h; // FD step

    Battery(const Complex& t, int prec_, int grid_)
        : tau(t), prec(prec_), grid(grid_), c(t, prec_), h("1e-10") {
        tol_alg = std::pow(10.0, -(prec - 5));
        tol_fd = 1e-6;
        for (int i = 0; i < grid; ++i) {
            Complex z(Real("0.0731") + Real("0.00473") * i, Real("0.0389") + Real("0.00607") * i);
            c.require_margin(z, Real("0.02"));
            zs.push_back(z);
        }
    }

    void record(const std::string& name, double res, bool fd) {
        IdentityResult r;
        r.name = name;
        r.max_residual = res;
        r.finite_difference = fd;
        r.tolerance = fd ? tol_fd : tol_alg;
        r.pass = res < r.tolerance;
        out.push_back(std::move(r));
    }

    Complex psi_tau(const Complex& z) const {
        CFun f = [&](const Complex& t) { return EllipticCtx(t, prec).psi(z); };
        return d1(f, tau, h);
    }
    Complex x_tau(const Complex& z) const {
        CFun f = [&](const Complex& t) { return EllipticCtx(t, prec).x_of(z); };
        return d1(f, tau, h);
    }

    void run() {
        Complex p2 = c.p * c.p;
        Complex zeta = c.zeta();
        Complex chi = c.chi();
        const Complex one(1), two(2);

        // (pqp) quasi-periodicity of psi
        {
            double worst = 0;
            for (const Complex& z : zs) {
                Complex pz = c.psi(z);
                worst = std::max(worst, rel_residual(c.psi(z + one), -pz));
                worst = std::max(worst, rel_residual(c.psi(-z), -pz));
                Complex mult = exp(Complex(0, -3 * pi_r()) * (tau + two * z));
                worst = std::max(worst, rel_residual(c.psi(z + tau), mult * pz));
            }
            record("pqp", worst, false);
        }
        // (pss) three-term relation
        {
            double worst = 0;
            Complex third(Real(1) / 3);
            for (const Complex& z : zs)
                worst = std::max(worst,
                                 rel_residual(c.psi(z), c.psi(z + third) + c.psi(z - third)));
            record("pss", worst, false);
        }
        // (ops) heat equation 12 pi i psi_tau = psi_zz
        {
            double worst = 0;
            for (size_t i = 0; i < zs.size(); i += 3) {
                const Complex& z = zs[i];
                CFun f = [&](const Complex& w) { return c.psi(w); };
                Complex lhs = Complex(0, 12 * pi_r()) * psi_tau(z);
                Complex rhs = d2(f, z, h);
                worst = std::max(worst, rel_residual(lhs, rhs));
            }
            record("ops", worst, true);
        }
        // (xd) difference product formula
        {
            double worst = 0;
            for (size_t i = 0; i + 1 < zs.size(); i += 2) {
                Complex z = zs[i], w = zs[i + 1];
                Complex e2z = exp(two_pi_i() * z), e2w = exp(two_pi_i() * w);
                Complex lhs = c.x_of(z) - c.x_of(w);
                Complex pref = -c.omega * c.theta(c.p, p2) * c.theta(c.p * c.omega, p2) *
                               c.theta(-c.p * c.omega, p2) * c.theta(-c.p * c.omega, p2) /
                               (e2z * c.theta(-c.omega, p2) * c.theta(-c.omega, p2));
                Complex num = c.theta(e2z * e2w, p2) * c.theta(e2z / e2w, p2);
                Complex den = c.theta(c.p * c.omega * e2z, p2) * c.theta(c.p * c.omega / e2z, p2) *
                              c.theta(c.p * c.omega * e2w, p2) * c.theta(c.p * c.omega / e2w, p2);
                worst = std::max(worst, rel_residual(lhs, pref * num / den));
            }
            record("xd", worst, false);
        }
        // (xp) derivative product formula (x' by finite differences)
        {
            double worst = 0;
            Complex q2 = c.qpoch(p2, p2);
            for (size_t i = 0; i < zs.size(); i += 2) {
                const Complex& z = zs[i];
                Complex e2z = exp(two_pi_i() * z);
                CFun f = [&](const Complex& w) { return c.x_of(w); };
                Complex lhs = d1(f, z, h);
                Complex dpart = c.theta(c.p * c.omega * e2z, p2) * c.theta(c.p * c.omega / e2z, p2);
                Complex rhs = two_pi_i() * c.omega * q2 * q2 * c.theta(c.p, p2) *
                              c.theta(c.p * c.omega, p2) * c.theta(-c.p * c.omega, p2) *
                              c.theta(-c.p * c.omega, p2) /
                              (c.theta(-c.omega, p2) * c.theta(-c.omega, p2)) *
                              (c.theta(e2z * e2z, p2) / (e2z * dpart * dpart));
                worst = std::max(worst, rel_residual(lhs, rhs));
            }
            record("xp", worst, true);
        }
        // (xv) half-period values against the exact xi/eta table
        {
            double worst = 0;
            Complex third(Real(1) / 3);
            const auto& tab = XiTable::get();
            for (int l = 0; l < 4; ++l) {
                Complex want = tab.xi[l].eval_as<Complex>(zeta);
                worst = std::max(worst, rel_residual(c.x_of(c.gamma[l]), want));
            }
            for (int l = 0; l < 4; ++l) {
                if (!tab.eta_finite[l]) continue;
                Complex want = tab.eta[l].eval_as<Complex>(zeta);
                Complex got = c.x_of(c.gamma[l] + third);
                double res = l == 0 ? to_d(abs(got)) : rel_residual(got, want);
                worst = std::max(worst, res);
            }
            record("xv", worst, false);
        }
        // (zp) the four theta-product formulas for zeta shifts
        {
            double worst = 0;
            Complex tm1 = c.theta(Complex(-1), p2), tw = c.theta(c.omega, p2),
                    tmw = c.theta(-c.omega, p2), tp = c.theta(c.p, p2), tmp = c.theta(-c.p, p2),
                    tpw = c.theta(c.p * c.omega, p2), tmpw = c.theta(-c.p * c.omega, p2);
            worst = std::max(worst, rel_residual(zeta + one, -tp * tmpw / (tmp * tpw)));
            worst = std::max(worst,
                             rel_residual(zeta - one, tp * tpw * tw * tw / (tmp * tmpw * tmw * tmw)));
            worst = std::max(
                worst, rel_residual(zeta + two,
                                    c.p * tm1 * tmw * tw * tw / (tmp * tmpw * tpw * tpw)));
            worst = std::max(worst, rel_residual(two * zeta + one,
                                                 tmpw * tmpw * tw * tw / (tmw * tmw * tpw * tpw)));
            record("zp", worst, false);
        }
        // (phd) phi'(0) = 1
        {
            CFun f = [&](const Complex& w) { return c.phi(w); };
            record("phd", rel_residual(d1(f, Complex(0), h), one), true);
        }
        // (ld), (ld2), (pdn) specialized psi-derivative values
        {
            Complex q2 = c.qpoch(p2, p2);
            CFun f = [&](const Complex& w) { return c.psi(w); };
            Complex third(Real(1) / 3);
            Complex lhs = d1(f, third, h) / c.psi(third);
            Complex rhs = -two_pi_i() * q2 * q2 * c.theta(-c.omega, p2) /
                          (c.theta(Complex(-1), p2) * c.theta(c.omega, p2));
            record("ld", rel_residual(lhs, rhs), true);

            Complex zpt = third + tau / 2;
            lhs = d1(f, zpt, h) / c.psi(zpt) + Complex(0, 3 * pi_r());
            rhs = -two_pi_i() * c.omega * c.omega * q2 * q2 * c.theta(-c.p * c.omega, p2) /
                  (c.theta(-c.p, p2) * c.theta(c.omega, p2));
            record("ld2", rel_residual(lhs, rhs), true);

            lhs = d1(f, Complex(0), h);
            rhs = -Complex(0, 4 * pi_r()) * exp(I() * pi_r() * tau / 12) * q2 * q2 * q2 /
                  c.theta(Complex(-1), p2);
            record("pdn", rel_residual(lhs, rhs), true);
        }
        // (xds)/(xsd): (x')^2 and x'' against the quartic
        {
            double w1 = 0, w2 = 0;
            XPoly a = quartic_a();
            XPoly ap = a.dx();
            Complex denom = two * zeta * (zeta + one) * (zeta + two);
            for (size_t i = 0; i < zs.size(); i += 2) {
                const Complex& z = zs[i];
                CFun f = [&](const Complex& w) { return c.x_of(w); };
                Complex xv = c.x_of(z);
                Complex xp = d1(f, z, h);
                Complex lhs = xp * xp;
                Complex rhs = -chi / denom * a.eval_as<Complex>(xv, zeta);
                w1 = std::max(w1, rel_residual(lhs, rhs));
                Complex xpp = d2(f, z, h);
                Complex rhs2 = -chi / (two * denom) * ap.eval_as<Complex>(xv, zeta);
                w2 = std::max(w2, rel_residual(xpp, rhs2));
            }
            record("xds", w1, true);
            record("xsd", w2, true);
        }
        // (fd) 2 (psi'/psi) x' - 12 pi i x_tau = -chi/(zeta+2) B(x)
        {
            double worst = 0;
            for (size_t i = 0; i < zs.size(); i += 3) {
                const Complex& z = zs[i];
                CFun fx = [&](const Complex& w) { return c.x_of(w); };
                CFun fp = [&](const Complex& w) { return c.psi(w); };
                Complex xv = c.x_of(z);
                Complex lhs = two * d1(fp, z, h) / c.psi(z) * d1(fx, z, h) -
                              Complex(0, 12 * pi_r()) * x_tau(z);
                Complex B = (xv - one) * ((zeta + two) * xv + two * zeta + one);
                worst = std::max(worst, rel_residual(lhs, -chi / (zeta + two) * B));
            }
            record("fd", worst, true);
        }
        // (zdl) 12 pi i zeta_tau = chi (zeta-1)(2 zeta+1)
        {
            CFun f = [&](const Complex& t) { return EllipticCtx(t, prec).zeta(); };
            Complex lhs = Complex(0, 12 * pi_r()) * d1(f, tau, h);
            Complex rhs = chi * (zeta - one) * (two * zeta + one);
            record("zdl", rel_residual(lhs, rhs), true);
        }
        // (pdl) (log psi)'' - chi D/(zeta+2) is independent of z
        {
            std::vector<Complex> vals;
            for (size_t i = 0; i < zs.size() && vals.size() < 10; ++i) {
                const Complex& z = zs[i];
                CFun fp = [&](const Complex& w) { return c.psi(w); };
                Complex pv = c.psi(z), pd = d1(fp, z, h), pdd = d2(fp, z, h);
                Complex logpp = pdd / pv - pd * pd / (pv * pv);
                Complex xv = c.x_of(z);
                Complex Dnum = (xv - zeta) * pow(xv * (zeta + two) + zeta * (two * zeta + one), 2);
                Complex Dden = (xv - (two * zeta + one)) * ((zeta + two) * xv - zeta) *
                               ((zeta + two) * xv - zeta * (two * zeta + one));
                vals.push_back(logpp - chi / (zeta + two) * (Dnum / Dden));
            }
            Complex mean(0);
            for (const Complex& v : vals) mean += v;
            mean /= Complex(static_cast<int>(vals.size()));
            Real spread(0);
            for (const Complex& v : vals) spread = std::max(spread, abs(v - mean));
            record("pdl", to_d(spread / abs(mean)), true);
        }
        // (pfl) the modified potential equals chi W(x) / (2 zeta(zeta+1)(zeta+2))
        {
            double worst = 0;
            std::array<int, 4> k = {1, 2, 3, 4};
            OmegaCoeffs oc = build_coeffs(KIndex(k, 0));
            Complex denom = two * zeta * (zeta + one) * (zeta + two);
            for (size_t i = 0; i < zs.size(); i += 2) {
                const Complex& z = zs[i];
                Complex xv = c.x_of(z);
                Complex lhs = c.V_of(z, k);
                Complex wv = oc.W.num.eval_as<Complex>(xv, zeta) /
                             oc.W.den.eval_as<Complex>(xv, zeta);
                worst = std::max(worst, rel_residual(lhs, chi / denom * wv));
            }
            record("pfl", worst, false);
        }
        // (php) quasi-periodicity of the Phi prefactor
        {
            double worst = 0;
            std::array<int, 4> k = {1, 2, 3, 4};
            Complex third(Real(1) / 3);
            for (size_t i = 0; i < zs.size(); i += 4) {
                const Complex& z = zs[i];
                Complex f0 = c.Phi1(z, k);
                Complex s03 = Complex((k[0] + k[3]) % 2 == 0 ? 1 : -1);
                Complex s0 = Complex(k[0] % 2 == 0 ? 1 : -1);
                Complex s01 = Complex((k[0] + k[1]) % 2 == 0 ? 1 : -1);
                worst = std::max(worst, rel_residual(c.Phi1(z + third, k), s03 * f0));
                worst = std::max(worst, rel_residual(c.Phi1(-z, k), s0 * f0));
                long ksum = k[0] + k[1] + k[2] + k[3];
                Complex mult =
                    s01 * exp(Complex(0, -3 * pi_r()) * Complex(ksum) * (tau + two * z));
                worst = std::max(worst, rel_residual(c.Phi1(z + tau, k), mult * f0));
            }
            record("php", worst, false);
        }
        // quasi-periodicity of the assembled Psi (principal-branch signs fixed
        // by construction: +1 for z -> z+1 here, -(k0+k1 parity) for z -> z+tau)
        {
            double worst = 0;
            std::array<int, 4> k = {1, 0, 0, 0};
            KIndex idx(k, 1);
            TFun T = general_T(idx);
            auto Psi = [&](const Complex& z) {
                Complex xv = c.x_of(z);
                std::vector<Complex> xs = {xv};
                return c.Phi1(z, k) * c.psi(z) * c.E_of(xv, 1) * c.F_of(xv, k) *
                       T.eval_as<Complex>(xs, c.zeta());
            };
            int n = idx.two_n() / 2;
            for (size_t i = 0; i < zs.size(); i += 4) {
                const Complex& z = zs[i];
                Complex f0 = Psi(z);
                worst = std::max(worst, rel_residual(Psi(z + one), f0));
                Complex mult = exp(Complex(0, -6 * pi_r()) * Complex(n) * (tau + two * z));
                Complex sign((k[0] + k[1]) % 2 == 0 ? 1 : -1);
                worst = std::max(worst, rel_residual(Psi(z + tau), sign * mult * f0));
            }
            record("psi_qp", worst, false);
        }
    }
};

} // namespace

std::vector<IdentityResult> verify_identities(const Complex& tau, int prec, int grid) {
    Battery b(tau, prec, grid);
    b.run();
    return b.out;
}

SchroedingerResult verify_schroedinger(const KIndex& kidx, const Complex& tau, int prec, int grid,
                                       bool zero_potential) {
    const int m = kidx.m;
    if (m < 1) throw UsageError("Schroedinger check needs m >= 1");
    TFun T = general_T(kidx);
    const auto k = kidx.k;
    Real h("1e-10");

    // g = Phi^{-1} Psi = prod_j psi(z_j)^m E(x_j) F(x_j) * Delta(x) * T(x)
    auto eval_g = [&](const EllipticCtx& c, const std::vector<Complex>& z) {
        Complex out(1);
        std::vector<Complex> xs(m);
        for (int j = 0; j < m; ++j) xs[j] = c.x_of(z[j]);
        for (int j = 0; j < m; ++j)
            out *= ipow(c.psi(z[j]), m) * c.E_of(xs[j], m) * c.F_of(xs[j], k);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) out *= xs[j] - xs[i];
        return out * T.eval_as<Complex>(xs, c.zeta());
    };

    EllipticCtx ctx(tau, prec);
    std::vector<std::vector<Complex>> pts;
    for (int i = 0; i < grid; ++i) {
        std::vector<Complex> z(m);
        for (int j = 0; j < m; ++j) {
            z[j] = Complex(Real("0.0619") + Real("0.00553") * i + Real("0.0431") * j,
                           Real("0.0421") + Real("0.00717") * i + Real("0.0179") * j);
            ctx.require_margin(z[j], Real("0.02"));
        }
        pts.push_back(std::move(z));
    }

    std::vector<Complex> cs;
    for (const auto& z : pts) {
        Complex g0 = eval_g(ctx, z);
        // -12 pi i m d/dtau
        CFun ftau = [&](const Complex& t) { return eval_g(EllipticCtx(t, prec), z); };
        Complex acc = Complex(0, -12 * pi_r()) * Complex(m) * d1(ftau, tau, h);
        for (int j = 0; j < m; ++j) {
            CFun fz = [&](const Complex& w) {
                std::vector<Complex> zz = z;
                zz[j] = w;
                return eval_g(ctx, zz);
            };
            acc += d2(fz, z[j], h);
            if (!zero_potential) acc -= ctx.V_of(z[j], k) * g0;
        }
        cs.push_back(acc / g0);
    }

    Complex mean(0);
    for (const Complex& v : cs) mean += v;
    mean /= Complex(grid);
    Real spread(0);
    for (const Complex& v : cs) spread = std::max(spread, abs(v - mean));

    SchroedingerResult res;
    res.k = k;
    res.m = m;
    res.zero_potential = zero_potential;
    res.tolerance = 1e-4;
    res.spread_over_mean = to_d(spread / abs(mean));
    res.pass = res.spread_over_mean < res.tolerance;
    std::ostringstream os;
    os << std::setprecision(12) << mean.real().convert_to<double>();
    double im = mean.imag().convert_to<double>();
    os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    res.c_mean = os.str();
    return res;
}

} // namespace symtau::num
