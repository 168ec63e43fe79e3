#include "symtau/pde.hpp"

#include <chrono>

#include "symtau/parallel.hpp"

namespace symtau {

namespace {

RatFun Z() { return RatFun::zeta(); }
RatFun C(long n) { return RatFun(Rat(n)); }
RatFun Cq(long p, long q) { return RatFun(rat(p, q)); }

// ---------------------------------------------------------------------------
// monic factor basis for every denominator the Omega coefficients can carry:
// the four x - xi_l, the finite x - eta poles of W, and the monic parts of
// G(x, xi_l). All scalar prefactors are folded into numerators.

enum : int { FLIN0 = 0, FLIN1, FLIN2, FLIN3, FLX, FLE2, FLE3, FGM0, FGM1, FGM2, FGM3, FCOUNT };

struct FactorTable {
    std::array<XPoly, FCOUNT> poly;
    std::array<RatFun, 4> glead; // leading coefficients of the natural G(x, xi_l)
    XPoly amon;                  // monic quartic: prod_l (x - xi_l)

    static const FactorTable& get() {
        static const FactorTable t = [] {
            FactorTable f;
            const auto& xi = XiTable::get().xi;
            const auto& eta = XiTable::get().eta;
            for (int l = 0; l < 4; ++l) f.poly[FLIN0 + l] = XPoly::linear_root(xi[l]);
            f.poly[FLX] = XPoly::x();
            f.poly[FLE2] = XPoly::linear_root(eta[2]);
            f.poly[FLE3] = XPoly::linear_root(eta[3]);
            f.amon = XPoly::one();
            for (int l = 0; l < 4; ++l) f.amon = f.amon * f.poly[FLIN0 + l];
            for (int l = 0; l < 4; ++l) {
                XPoly g = g_at_xi(l);
                f.glead[l] = g.coeff(g.degree());
                f.poly[FGM0 + l] = g * (RatFun(1) / f.glead[l]);
            }
            return f;
        }();
        return t;
    }
};

struct FacDen {
    std::array<int, FCOUNT> p{};

    FacDen operator+(const FacDen& o) const { // product of denominators
        FacDen r;
        for (int i = 0; i < FCOUNT; ++i) r.p[i] = p[i] + o.p[i];
        return r;
    }
    FacDen operator-(const FacDen& o) const { // exact quotient
        FacDen r;
        for (int i = 0; i < FCOUNT; ++i) {
            r.p[i] = p[i] - o.p[i];
            if (r.p[i] < 0) throw InexactDivision("factored denominator underflow");
        }
        return r;
    }
    FacDen times(int s) const {
        FacDen r;
        for (int i = 0; i < FCOUNT; ++i) r.p[i] = p[i] * s;
        return r;
    }
    static FacDen lcm(const FacDen& a, const FacDen& b) {
        FacDen r;
        for (int i = 0; i < FCOUNT; ++i) r.p[i] = std::max(a.p[i], b.p[i]);
        return r;
    }
    XPoly expand() const {
        XPoly out = XPoly::one();
        for (int i = 0; i < FCOUNT; ++i)
            if (p[i] > 0) out = out * FactorTable::get().poly[i].pow(p[i]);
        return out;
    }
};

// ---------------------------------------------------------------------------
// coefficient construction

XPoly build_b(int m) {
    const XPoly a = quartic_a();
    const auto& ft = FactorTable::get();
    RatFun z = Z();
    std::array<RatFun, 4> res = {
        (C(3) * (z + C(1)) + C(m) * (z - C(1)) * (z + C(2))) / (C(2) * (z + C(1))),
        (C(3) * z * (z + C(1)) - C(m) * (C(2) * z + C(1)) * (z - C(1))) /
            (C(2) * z * (z + C(1))),
        (C(3) * z - C(m) * (z * z + C(4) * z + C(1))) / (C(2) * z),
        Cq(3, 2),
    };
    XPoly b;
    for (int l = 0; l < 4; ++l) b += a.exact_div(ft.poly[FLIN0 + l]) * res[l];
    return b;
}

XPoly build_c0(int m) {
    RatFun z = Z();
    RatFun zp2 = z + C(2);
    std::vector<RatFun> c(3);
    c[2] = Cq(3L * (m - 2) * (3 * m - 4), 4) * zp2 * zp2;
    c[1] = Cq(-(3L * m - 4), 2) * zp2 *
           (C(2L * (2 * m - 3)) * (z * z + C(1)) + C(7L * m - 12) * z);
    c[0] = Cq(-2L * (2L * m * m - 5), 3) * z.pow(4) - Cq(7L * m * m + 66 * m - 112, 6) * z.pow(3) +
           Cq(7L * (m - 2) * (7 * m - 8), 4) * z * z + Cq((5L * m - 8) * (19 * m - 14), 6) * z +
           Cq(11L * m * m - 24 * m + 10, 3);
    return XPoly(std::move(c));
}

struct WPart {
    XPoly num;
    FacDen den;
};

WPart build_W(const std::array<int, 4>& k) {
    const auto& ft = FactorTable::get();
    RatFun z = Z();
    struct Term {
        RatFun scale;
        XPoly num;
        FacDen den;
    };
    std::vector<Term> terms;
    auto kk1 = [&](int l) { return C(static_cast<long>(k[l]) * (k[l] + 1)); };

    if (k[0] != 0 && k[0] != -1) {
        Term t;
        t.scale = -kk1(0) * (C(2) * z + C(1)).pow(3);
        t.num = ft.poly[FLIN3] * ft.poly[FLE3].pow(2);
        t.den.p[FLX] = 2;
        t.den.p[FLIN0] = 1;
        terms.push_back(std::move(t));
    }
    if (k[1] != 0 && k[1] != -1) {
        Term t;
        t.scale = -kk1(1) * (z + C(2)).pow(2);
        t.num = ft.poly[FLIN2] * ft.poly[FLE2].pow(2);
        t.den.p[FLIN1] = 1;
        terms.push_back(std::move(t));
    }
    if (k[2] != 0 && k[2] != -1) {
        Term t;
        t.scale = kk1(2) * (z + C(1)) * (z - C(1)).pow(3) * (C(2) * z + C(1)).pow(3) /
                  (z + C(2)).pow(2);
        t.num = ft.poly[FLIN1];
        t.den.p[FLIN2] = 1;
        t.den.p[FLE2] = 2;
        terms.push_back(std::move(t));
    }
    if (k[3] != 0 && k[3] != -1) {
        Term t;
        t.scale = kk1(3) * (z + C(1)) * (z - C(1)).pow(3);
        t.num = ft.poly[FLX].pow(2) * ft.poly[FLIN0];
        t.den.p[FLIN3] = 1;
        t.den.p[FLE3] = 2;
        terms.push_back(std::move(t));
    }

    WPart w;
    for (const auto& t : terms) w.den = w.den + t.den;
    for (const auto& t : terms) w.num += t.num * (w.den - t.den).expand() * t.scale;
    return w;
}

RatFun build_logf(const std::array<int, 4>& k) {
    const long k0 = k[0], k1 = k[1], k2 = k[2], k3 = k[3];
    RatFun z = Z();
    // exponents of f over the basis (zeta+1, zeta, zeta+2, zeta-1, 2zeta+1);
    // e2, e4, e5 enter with negative sign (they sit in the denominator display)
    Rat e1 = rat(k2 * (k2 + 2), 4) + rat(k3 * (k3 + 2), 4) - rat((k0 + k1) * (k2 + k3 - 1)) +
             rat(k2 * k3, 2);
    Rat e2 = rat(k1 * (k1 - 3), 4) + rat(k2 * (k2 - 3), 4) +
             rat((k0 + k3) * (4 * (k1 + k2) - 1), 4) - rat(k0 * k3, 2);
    Rat e3 = rat(-3 * k0 * (k0 + 1), 4) - rat(k1 * (2 * k1 + 5), 4) - rat(k2 * (2 * k2 + 5), 4) -
             rat(3 * k3 * (k3 + 1), 4) + rat((k0 + k3) * (k1 + k2), 2) + rat(k1 * k2, 2);
    Rat e4 = rat((k2 + k3) * (k2 + k3 - 2), 4);
    Rat e5 = rat((k0 + k2) * (k0 + k2 - 2), 4);
    return RatFun(e1) / (z + C(1)) - RatFun(e2) / z + RatFun(e3) / (z + C(2)) -
           RatFun(e4) / (z - C(1)) - RatFun(e5) * C(2) / (C(2) * z + C(1));
}

struct CoeffsInternal {
    OmegaCoeffs pub;
    XPoly NB, NC;   // numerators of bF, cF over the factored denominators
    FacDen bden, cden;
};

CoeffsInternal build_internal(const KIndex& idx, bool dual) {
    const auto& ft = FactorTable::get();
    const auto& xi = XiTable::get().xi;
    const auto& k = idx.k;
    const int m = idx.m;
    RatFun z = Z();

    CoeffsInternal ci;
    OmegaCoeffs& oc = ci.pub;
    oc.idx = idx;
    oc.dual = dual;
    oc.a = quartic_a();
    oc.b = build_b(m);
    oc.c0 = build_c0(m);
    oc.d = dcoef();
    oc.logf = build_logf(k);
    oc.e = C(m) * oc.d * oc.logf;

    WPart w = build_W(k);
    oc.W = XRat(w.num, w.den.expand());

    // logarithmic derivatives of F = prod_l ((x-xi_l)/G(x,xi_l))^{k_l/2}
    FacDen dF;
    for (int l = 0; l < 4; ++l)
        if (k[l] != 0) {
            dF.p[FLIN0 + l] += 1;
            dF.p[FGM0 + l] += 1;
        }
    XPoly DD = dF.expand();
    XPoly nLF, nLZ;
    RatFun sconst; // x-independent part of logF_zeta from the G leading coefficients
    for (int l = 0; l < 4; ++l) {
        if (k[l] == 0) continue;
        RatFun half_k = Cq(k[l], 2);
        FacDen dlin = dF, dgm = dF;
        dlin.p[FLIN0 + l] -= 1;
        dgm.p[FGM0 + l] -= 1;
        XPoly cof_lin = dlin.expand(), cof_gm = dgm.expand();
        const XPoly& gm = ft.poly[FGM0 + l];
        nLF += cof_lin * half_k - cof_gm * gm.dx() * half_k;
        nLZ += cof_lin * (-half_k * xi[l].derivative()) - cof_gm * gm.dzeta() * half_k;
        sconst += -half_k * ft.glead[l].derivative() / ft.glead[l];
    }
    nLZ += DD * sconst;
    oc.logF_x = XRat(nLF, DD);
    oc.logF_zeta = XRat(nLZ, DD);

    // bF = 2a logC_x + b where logC is log F (primal) or log K = -log F - a'/2a (dual)
    FacDen qfac;
    for (int l = 0; l < 4; ++l)
        if (k[l] != 0) qfac.p[FGM0 + l] += 1;
    XPoly Qx = qfac.expand();
    XPoly sumA;
    for (int l = 0; l < 4; ++l)
        if (k[l] != 0) sumA += oc.a.exact_div(ft.poly[FLIN0 + l]) * C(k[l]);
    XPoly gterm;
    for (int l = 0; l < 4; ++l) {
        if (k[l] == 0) continue;
        FacDen dg = qfac;
        dg.p[FGM0 + l] -= 1;
        gterm += dg.expand() * ft.poly[FGM0 + l].dx() * C(k[l]);
    }
    if (!dual) {
        ci.NB = (sumA + oc.b) * Qx - oc.a * gterm;
    } else {
        ci.NB = (oc.b - sumA - oc.a.dx()) * Qx + oc.a * gterm;
    }
    ci.bden = qfac;
    oc.bF = XRat(ci.NB, Qx);

    // the conjugator's log-derivative numerators over the common den dL
    FacDen dL = dF;
    XPoly nLx = nLF, nLz = nLZ;
    if (dual) {
        for (int l = 0; l < 4; ++l) dL.p[FLIN0 + l] += 1;
        RatFun inv2s = C(1) / (C(2) * (z + C(2)).pow(2));
        nLx = -(nLF * ft.amon) - oc.a.dx() * inv2s * DD;
        nLz = -(nLZ * ft.amon) - oc.a.dzeta() * inv2s * DD;
    }
    XPoly E = dL.expand();

    // cF = a((logC_x)^2 + logC_x') + b logC_x + c0 + W + m d logC_zeta
    XPoly num_c = oc.a * (nLx * nLx + nLx.dx() * E - nLx * E.dx()) + oc.b * nLx * E +
                  oc.c0 * E * E + nLz * E * (C(m) * oc.d);
    FacDen cfac = dL.times(2) + w.den;
    XPoly NC = num_c * w.den.expand() + w.num * E * E;
    // cancel the linear factors that the combination is regular across
    for (int f = FLIN0; f <= FLE3; ++f) {
        const XPoly& lin = ft.poly[f];
        RatFun root = f == FLX ? RatFun() : -lin.coeff(0);
        while (cfac.p[f] > 0 && NC.eval(root).is_zero()) {
            NC = NC.exact_div(lin);
            cfac.p[f] -= 1;
        }
    }
    ci.NC = NC;
    ci.cden = cfac;
    oc.cF = XRat(ci.NC, cfac.expand());
    return ci;
}

} // namespace

OmegaCoeffs build_coeffs(const KIndex& k) { return build_internal(k, false).pub; }
OmegaCoeffs build_coeffs_dual(const KIndex& k) { return build_internal(k, true).pub; }

namespace {

MPoly apply_impl(const KIndex& idx, bool dual) {
    const int m = idx.m;
    if (m < 1) throw UsageError("operator application needs m >= 1");
    TFun T = dual ? general_U(idx) : general_T(idx);
    CoeffsInternal ci = build_internal(idx, dual);
    const auto& ft = FactorTable::get();

    // per-variable denominator of T in monic form, scalar folded into P
    const auto kden = dual ? idx.kplus() : idx.kminus();
    FacDen d1f;
    RatFun s(1);
    for (int l = 0; l < 4; ++l)
        if (kden[l] > 0) {
            d1f.p[FGM0 + l] = kden[l];
            s *= ft.glead[l].pow(kden[l]);
        }
    MPoly P = MPoly::vandermonde(m) * T.num;
    if (!(s == RatFun(1))) P = P * s.pow(-static_cast<long>(m));

    FacDen ucap = FacDen::lcm(FacDen::lcm(d1f.times(3), ci.bden + d1f.times(2)),
                              ci.cden + d1f);
    XPoly mult_a = ci.pub.a * (ucap - d1f.times(3)).expand();
    XPoly mult_b = ci.NB * (ucap - ci.bden - d1f.times(2)).expand();
    XPoly mult_c = ci.NC * (ucap - ci.cden - d1f).expand();
    XPoly UX1 = (ucap - d1f).expand();
    XPoly UX2 = (ucap - d1f.times(2)).expand();

    XPoly D1 = d1f.expand();
    XPoly D1p = D1.dx();
    XPoly D1sq = D1 * D1;
    XPoly D1pD1 = D1p * D1 * C(2);
    XPoly D1tail = D1p * D1p * C(2) - D1p.dx() * D1;
    XPoly D1z = D1.dzeta();
    const bool trivial_den = D1.is_one();

    auto inj = [&](const XPoly& u, int var) { return u.to_mpoly(m, var); };

    MPoly total(m);
    for (int j = 0; j < m; ++j) {
        MPoly Pj = P.partial(j);
        MPoly Pjj = Pj.partial(j);
        MPoly A2 = trivial_den
                       ? Pjj
                       : Pjj * inj(D1sq, j) - Pj * inj(D1pD1, j) + P * inj(D1tail, j);
        MPoly A1 = trivial_den ? Pj : Pj * inj(D1, j) - P * inj(D1p, j);
        MPoly Rj = A2 * inj(mult_a, j) + A1 * inj(mult_b, j) + P * inj(mult_c, j);
        for (int l = 0; l < m; ++l)
            if (l != j) Rj = Rj * inj(UX1, l);
        total += Rj;
    }

    // m d d_zeta term over den prod_l D1(x_l)^2
    MPoly NZ = P.partial_zeta();
    if (!trivial_den) {
        for (int l = 0; l < m; ++l) NZ = NZ * inj(D1, l);
        for (int l = 0; l < m; ++l) {
            MPoly piece = P * inj(D1z, l);
            for (int r = 0; r < m; ++r)
                if (r != l) piece = piece * inj(D1, r);
            NZ -= piece;
        }
    }
    NZ = NZ * (C(m) * ci.pub.d);
    for (int l = 0; l < m; ++l) NZ = NZ * inj(UX2, l);
    total += NZ;

    // e term over den prod_l D1(x_l)
    if (!ci.pub.e.is_zero()) {
        MPoly Et = P * ci.pub.e;
        for (int l = 0; l < m; ++l) Et = Et * inj(UX1, l);
        total += Et;
    }
    return total;
}

} // namespace

MPoly apply_omega(const KIndex& k) { return apply_impl(k, false); }
MPoly apply_omega_dual(const KIndex& k) { return apply_impl(k, true); }

bool taylor_check(int n) {
    const MPoly& T = base_T(n);
    const int m = 2 * n;
    RatFun z = Z();
    RatFun tz1 = C(2) * z + C(1);

    MPoly uni = T;
    for (int v = m - 1; v >= 1; --v) uni = uni.specialize(v, RatFun());
    Expo e0(1), e1(1), e2(1);
    e1[0] = 1;
    e2[0] = 2;
    RatFun alpha = uni.coeff(e0), beta = uni.coeff(e1), gamma = uni.coeff(e2);

    RatFun delta;
    if (m >= 2) {
        MPoly bi = T;
        for (int v = m - 1; v >= 2; --v) bi = bi.specialize(v, RatFun());
        Expo e11(2);
        e11[0] = e11[1] = 1;
        delta = bi.coeff(e11);
    }

    auto power_term = [&](long c, long zexp, long texp) {
        if (c == 0) return RatFun();
        return C(c) * z.pow(zexp) * tz1.pow(texp);
    };
    long nn = n;
    RatFun alpha_ref = power_term(1, nn * (nn - 1), nn * (nn - 1));
    RatFun beta_ref = power_term(-(nn - 1), nn * (nn - 1), nn * nn - nn - 1);
    RatFun gamma_ref = power_term((nn - 1) * (nn - 2), nn * (nn - 1), (nn + 1) * (nn - 2)) * Cq(1, 2);
    RatFun delta_ref = power_term((nn - 1) * (nn - 1), nn * (nn - 1), (nn + 1) * (nn - 2));

    return alpha == alpha_ref && beta == beta_ref && gamma == gamma_ref &&
           (m < 2 || delta == delta_ref);
}

bool ct_lemma_check(int m) {
    // variables: x_1..x_m, then the jets a, b, c, alpha, beta, gamma, delta
    const int nv = m + 7;
    const int A = m, B = m + 1, Cc = m + 2, AL = m + 3, BE = m + 4, GA = m + 5, DE = m + 6;
    MPoly P(nv);
    P += MPoly::var(nv, AL);
    for (int j = 0; j < m; ++j) {
        P += MPoly::var(nv, BE) * MPoly::var(nv, j);
        P += MPoly::var(nv, GA) * MPoly::var(nv, j, 2);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            P += MPoly::var(nv, DE) * MPoly::var(nv, i) * MPoly::var(nv, j);

    MPoly delta = MPoly::constant(nv, RatFun(1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            delta = delta * (MPoly::var(nv, j) - MPoly::var(nv, i));

    MPoly DP = delta * P;
    MPoly N2(nv), N1(nv);
    for (int j = 0; j < m; ++j) {
        MPoly f = MPoly::var(nv, A) + MPoly::var(nv, B) * MPoly::var(nv, j) +
                  MPoly::var(nv, Cc) * MPoly::var(nv, j, 2);
        N2 += f * DP.partial(j).partial(j);
        N1 += f * DP.partial(j);
    }

    auto ct = [&](const MPoly& N) {
        MPoly q = N.exact_div(delta);
        MPoly out(nv);
        for (const auto& [e, c] : q.terms()) {
            bool xfree = true;
            for (int i = 0; i < m; ++i)
                if (e[i] != 0) xfree = false;
            if (xfree) out.add_term(e, c);
        }
        return out;
    };

    MPoly lhs2 = ct(N2), lhs1 = ct(N1);
    auto jet = [&](int v) { return MPoly::var(nv, v); };
    MPoly rhs2 = jet(Cc) * jet(AL) * C(2 * binom(m, 3)) + jet(B) * jet(BE) * C(2 * binom(m, 2)) +
                 jet(A) * jet(GA) * C(2L * m * m) - jet(A) * jet(DE) * C(2 * binom(m, 2));
    MPoly rhs1 = jet(B) * jet(AL) * C(binom(m, 2)) + jet(A) * jet(BE) * C(m);
    return lhs2 == rhs2 && lhs1 == rhs1;
}

bool dd_identity_check(int m, int kmax) {
    MPoly delta = MPoly::vandermonde(m);
    for (int k = 0; k <= kmax; ++k) {
        MPoly lhs(m);
        for (int j = 0; j < m; ++j) {
            MPoly dk = delta;
            for (int r = 0; r < k; ++r) dk = dk.partial(j);
            lhs += MPoly::var(m, j, k) * dk;
        }
        long fact = 1;
        for (int r = 2; r <= k; ++r) fact *= r;
        if (!(lhs == delta * C(fact * binom(m, k + 1)))) return false;
    }
    return true;
}

bool recursion_check_eer(const KIndex& k, int dir) {
    const int m = k.m;
    if (m < 1) throw UsageError("recursion check needs m >= 1");
    auto k2arr = k.k;
    k2arr[dir] -= 1;
    KIndex k2(k2arr, m + 1);

    OmegaCoeffs oc = build_coeffs(k);
    OmegaCoeffs oc2 = build_coeffs(k2);
    const RatFun& xi = XiTable::get().xi[dir];

    RatFun app = oc.a.dx().dx().eval(xi);
    RatFun ap = oc.a.dx().eval(xi);
    RatFun bFp = oc.bF.dx().eval_reg(xi);
    RatFun b2p = oc2.bF.dx().eval_reg(xi);
    RatFun cFv = oc.cF.eval_reg(xi);
    RatFun c2v = oc2.cF.eval_reg(xi);

    RatFun lhs = (C(binom(m, 3)) * app + C(binom(m, 2)) * bFp + C(m) * cFv + oc.e) * C(m + 1) -
                 (C(binom(m + 1, 3)) * app + C(binom(m + 1, 2)) * b2p + C(m + 1) * c2v + oc2.e) *
                     C(m);
    if (!lhs.is_zero()) return false;

    RatFun bFv = oc.bF.eval_reg(xi);
    RatFun b2v = oc2.bF.eval_reg(xi);
    RatFun beta = (C(2 * binom(m, 2)) * ap + C(m) * bFv) * C(m + 1) -
                  (C(2 * binom(m + 1, 2)) * ap + C(m + 1) * b2v -
                   C(m + 1) * oc.d * xi.derivative()) *
                      C(m);
    return beta.is_zero();
}

std::vector<PdeRecord> pde_window_verify(int window, int mmax, int jobs) {
    std::vector<KIndex> todo;
    for (int k0 = -window; k0 <= window; ++k0)
        for (int k1 = -window; k1 <= window; ++k1)
            for (int k2 = -window; k2 <= window; ++k2)
                for (int k3 = -window; k3 <= window; ++k3) {
                    int a = std::abs(k0) + std::abs(k1) + std::abs(k2) + std::abs(k3);
                    if (a > window) continue;
                    for (int m = 1; m <= mmax; ++m) {
                        if ((k0 + k1 + k2 + k3 + m) % 2 != 0) continue;
                        todo.emplace_back(std::array<int, 4>{k0, k1, k2, k3}, m);
                    }
                }

    // warm the shared block cache serially so workers only read
    for (const KIndex& idx : todo) {
        int ntot = idx.n_tot();
        if (idx.kminus_sum() > 0) block_poly(ntot, idx.m + idx.kplus_sum());
        else base_T(ntot);
        block_poly(ntot, idx.kplus_sum());
    }

    std::vector<PdeRecord> out(2 * todo.size());
    parallel_for(todo.size(), jobs, [&](size_t i) {
        const KIndex& idx = todo[i];
        for (int dual = 0; dual < 2; ++dual) {
            auto start = std::chrono::steady_clock::now();
            MPoly r = dual ? apply_omega_dual(idx) : apply_omega(idx);
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            PdeRecord rec;
            rec.k = idx.k;
            rec.m = idx.m;
            rec.dual = dual != 0;
            rec.residual_zero = r.is_zero();
            rec.seconds = dt.count();
            out[2 * i + dual] = rec;
        }
    });
    return out;
}

} // namespace symtau
