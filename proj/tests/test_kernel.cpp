#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "symtau/jsonio.hpp"
#include "symtau/kernel.hpp"

using namespace symtau;

namespace {

RatFun Z() { return RatFun::zeta(); }
RatFun C(long v) { return RatFun(Rat(v)); }

} // namespace

TEST_CASE("xi table and the quartic") {
    const auto& t = XiTable::get();
    CHECK(t.xi[0] == C(2) * Z() + C(1));
    CHECK(t.xi[3] == C(1));
    CHECK_FALSE(t.eta_finite[1]);
    XPoly a = quartic_a();
    for (int l = 0; l < 4; ++l) CHECK(a.eval(t.xi[l]).is_zero());
    // expanded form equals the displayed linear-factor form
    RatFun z = Z();
    XPoly alt = XPoly::linear_root(C(2) * z + C(1)) * XPoly::linear_root(C(1)) *
                (XPoly::x() * (z + C(2)) - XPoly(z)) *
                (XPoly::x() * (z + C(2)) - XPoly(z * (C(2) * z + C(1))));
    CHECK(a == alt);
}

TEST_CASE("G kernel") {
    MPoly G = g_kernel();
    CHECK(G == G.swap_vars(0, 1));
    // G(x, 0) = -zeta x^2 + zeta(2 zeta+1) x
    MPoly gx0 = G.specialize(1, RatFun());
    MPoly want = MPoly::var(1, 0, 2) * (-Z()) + MPoly::var(1, 0) * (Z() * (C(2) * Z() + C(1)));
    CHECK(gx0 == want);
    // univariate specializations agree with the 2-variable kernel
    for (int l = 0; l < 4; ++l) {
        MPoly spec = G.specialize(1, XiTable::get().xi[l]);
        XPoly uni = g_at_xi(l);
        CHECK(spec == uni.to_mpoly(1, 0));
    }
}

TEST_CASE("base_T small cases") {
    CHECK(base_T(0) == MPoly::constant(0, RatFun(1)));
    CHECK(base_T(1) == MPoly::constant(2, RatFun(1)));

    const MPoly& T2 = base_T(2);
    CHECK(T2.is_symmetric());
    CHECK(T2.zeta_polynomial());
    // constant term: alpha_2 = zeta^2 (2 zeta+1)^2
    RatFun alpha = T2.constant_term();
    CHECK(alpha == Z() * Z() * (C(2) * Z() + C(1)) * (C(2) * Z() + C(1)));
    // T2(x1,x2,0,0) = zeta^2 (2z+1-x1)(2z+1-x2)
    MPoly spec = T2.specialize(3, RatFun()).specialize(2, RatFun());
    MPoly want = (MPoly::constant(2, C(2) * Z() + C(1)) - MPoly::var(2, 0)) *
                 (MPoly::constant(2, C(2) * Z() + C(1)) - MPoly::var(2, 1)) *
                 MPoly::constant(2, Z() * Z());
    CHECK(spec == want);
}

TEST_CASE("base_T(3) is symmetric with polynomial coefficients") {
    const MPoly& T3 = base_T(3);
    CHECK(T3.is_symmetric());
    CHECK(T3.zeta_polynomial());
}

TEST_CASE("sigma-hat closed form at n = 1") {
    const SigmaOp& op = SigmaOp::get(1);
    RatFun z = Z();
    XPoly X = XPoly::x();
    XPoly sx = X * (X - XPoly(C(2) * z + C(1))) * (X * (z + C(2)) - XPoly(C(3) * z));
    XPoly s1 = (X * (z + C(2)) - XPoly(z)) * (XPoly(C(2) * z + C(1)) - X * C(3));
    CHECK(op.image(1) == sx);
    CHECK(op.image(0) == s1);
    // sigma(x - a) for a = 5
    XPoly in = XPoly::linear_root(C(5));
    CHECK(op.apply(in) == sx - s1 * C(5));
}

TEST_CASE("sigma-hat n = 2 matches direct substitution") {
    const SigmaOp& op = SigmaOp::get(2);
    CHECK(op.check_sample(rat(2), {rat(3)}));
    CHECK(op.check_sample(rat(7), {rat(5)}));
}

TEST_CASE("sigma-hat fresh random tuples for n = 1..3") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> num(1, 40), den(1, 7);
    for (int n = 1; n <= 3; ++n) {
        const SigmaOp& op = SigmaOp::get(n);
        for (int trial = 0; trial < 10; ++trial) {
            Rat a = rat(num(rng), den(rng));
            std::vector<Rat> b;
            while (static_cast<int>(b.size()) < n - 1) {
                Rat cand = rat(num(rng), den(rng));
                bool dup = cand == a;
                for (const Rat& x : b) dup = dup || x == cand;
                if (!dup) b.push_back(cand);
            }
            CHECK(op.check_sample(a, b));
        }
    }
}

TEST_CASE("block function: identity split reproduces base_T") {
    CHECK(block_T(1, 2) == base_T(1));
    CHECK(block_T(2, 4) == base_T(2));
}

TEST_CASE("block function is well-defined and blockwise symmetric") {
    MPoly t11 = block_T(1, 1); // T(x1; x2), exists iff division was exact
    CHECK_FALSE(t11.is_zero());
    MPoly t22 = block_T(2, 2);
    CHECK(t22 == t22.swap_vars(0, 1));
    CHECK(t22 == t22.swap_vars(2, 3));
}

TEST_CASE("general_T basics") {
    // k = (1,0,0,0), m = 1: specializing base_T(1) leaves the constant 1
    TFun t = general_T(KIndex({1, 0, 0, 0}, 1));
    CHECK(t.is_poly());
    CHECK(t.num == MPoly::constant(1, RatFun(1)));
    // empty specialization reproduces base_T
    TFun t0 = general_T(KIndex({0, 0, 0, 0}, 4));
    CHECK(t0.num == base_T(2));
    CHECK(t0.is_poly());
}

namespace {

// cross-multiplied equality of f(x_1..x_m) with g(x_1..x_m, xi_dir)
bool shift_law_holds(const TFun& lhs, const TFun& rhs_base, int dir) {
    int m = lhs.num.nvars();
    const RatFun& xival = XiTable::get().xi[dir];
    MPoly rhs_num = rhs_base.num.specialize(m, xival);
    RatFun dv = rhs_base.den1.eval(xival);
    MPoly rden(m);
    rden = MPoly::constant(m, RatFun(1));
    for (int j = 0; j < m; ++j) rden = rden * rhs_base.den1.to_mpoly(m, j);
    return lhs.num * rden * dv == rhs_num * lhs.den_expanded();
}

} // namespace

TEST_CASE("shift law for T") {
    // T^{(k+e_l)}(x) = T^{(k)}(x, xi_l) on a few small indices
    struct Case {
        std::array<int, 4> k;
        int m;
        int dir;
    };
    for (const Case& c : {Case{{0, 0, 0, 0}, 1, 0}, Case{{1, 0, 0, 0}, 2, 2},
                          Case{{0, -1, 0, 0}, 2, 1}, Case{{0, 0, 0, -1}, 2, 3},
                          Case{{1, 0, 0, -1}, 1, 0}}) {
        auto kk = c.k;
        kk[c.dir] += 1;
        TFun lhs = general_T(KIndex(kk, c.m));
        TFun rhs_base = general_T(KIndex(c.k, c.m + 1));
        CHECK(shift_law_holds(lhs, rhs_base, c.dir));
    }
}

TEST_CASE("shift law for U") {
    // U_{n-|l|}^{(k-e_l)}(x) = U_n^{(k)}(x, xi_l)
    struct Case {
        std::array<int, 4> k;
        int m;
        int dir;
    };
    for (const Case& c : {Case{{1, 0, 0, 0}, 2, 0}, Case{{0, 1, 1, 0}, 1, 1},
                          Case{{1, 1, 0, 0}, 1, 0}, Case{{1, 0, 0, -1}, 1, 0}}) {
        auto kk = c.k;
        kk[c.dir] -= 1;
        TFun lhs = general_U(KIndex(kk, c.m));
        TFun rhs_base = general_U(KIndex(c.k, c.m + 1));
        CHECK(shift_law_holds(lhs, rhs_base, c.dir));
    }
}

TEST_CASE("duality relation") {
    // sigma^(x m) applied to prod (x-xi)^{k+} G^{k-} Delta T equals
    // (-1)^binom(|k|,2) 2^{|k|} prod (x-xi)^{k-} G^{k+} Delta U, for k=(1,0,0,0), m=1.
    // In cleared (numerator) form the right side is just 2 * U.num here.
    KIndex idx({1, 0, 0, 0}, 1);
    TFun T = general_T(idx), U = general_U(idx);
    int ntot = idx.n_tot();
    MPoly lhs = (MPoly::var(1, 0) - MPoly::constant(1, XiTable::get().xi[0])) * T.num;
    lhs = SigmaOp::get(ntot).apply_var(lhs, 0);
    MPoly rhs = U.num * RatFun(rat(2));
    CHECK(lhs == rhs);
}

TEST_CASE("tau initial values") {
    CHECK(tau({0, 0, 0, 0}) == RatFun(1));
    CHECK(tau({1, -1, 0, 0}) == RatFun(1));
    RatFun z = Z();
    RatFun want = C(-2) * z * z * (z - C(1)) * (z + C(1)) * (z + C(1)) * (C(2) * z + C(1)) /
                  ((z + C(2)) * (z + C(2)));
    CHECK(tau({0, -1, -1, 0}) == want);
}

TEST_CASE("n_norm") {
    CHECK(n_norm2({0, 0, 0, 0}) == 4);
    CHECK(n_norm2({-1, -1, -1, -1}) == 4);
    CHECK(n_norm2({1, -1, 0, 0}) == 6);
    // invariance under permutations and the reflection k -> -k-1
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 50; ++t) {
        std::array<int, 4> k = {d(rng), d(rng), d(rng), d(rng)};
        std::array<int, 4> p = {k[2], k[0], k[3], k[1]};
        std::array<int, 4> r = {-k[0] - 1, -k[1] - 1, -k[2] - 1, -k[3] - 1};
        CHECK(n_norm2(k) == n_norm2(p));
        CHECK(n_norm2(k) == n_norm2(r));
    }
}

TEST_CASE("cache round-trip is byte-identical") {
    std::string dir = "/tmp/symtau-test-cache";
    set_cache_dir(dir);
    cache_clear();
    // a key no earlier test has memoized, so this call writes to disk
    const MPoly& b = block_poly(2, 3);
    std::string bytes = canonical_dump(to_json(b));
    auto files = cache_list();
    REQUIRE(files.size() >= 1);
    std::ifstream in(dir + "/block_n2_s3.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == bytes);
    MPoly b2 = mpoly_from_json(json::parse(ss.str()));
    CHECK(b2 == b);
    cache_clear();
    set_cache_dir("");
}