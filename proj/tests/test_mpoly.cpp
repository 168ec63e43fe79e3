#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtau/jsonio.hpp"
#include "symtau/mpoly.hpp"

using namespace symtau;

namespace {

MPoly X(int nvars, int i) { return MPoly::var(nvars, i); }

MPoly random_poly(std::mt19937& rng, int nvars, int maxdeg = 2, int nterms = 4) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-5, 5);
    MPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Expo e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<uint16_t>(deg(rng));
        p.add_term(e, RatFun(rat(coef(rng))));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic basics") {
    MPoly a = X(2, 0) - X(2, 1), b = X(2, 0) + X(2, 1);
    MPoly x1sq = MPoly::var(2, 0, 2), x2sq = MPoly::var(2, 1, 2);
    CHECK(a * b == x1sq - x2sq);
    std::mt19937 rng(1);
    MPoly p = random_poly(rng, 3);
    CHECK(p + MPoly(3) == p);
    CHECK_THROWS_AS(X(2, 0) + X(3, 0), ArityMismatch);
}

TEST_CASE("product of Vandermonde pieces matches hand expansion") {
    // (x2-x1)(x3-x2) = x2 x3 - x2^2 - x1 x3 + x1 x2, frozen by hand
    MPoly lhs = (X(3, 1) - X(3, 0)) * (X(3, 2) - X(3, 1));
    MPoly rhs(3);
    rhs += X(3, 1) * X(3, 2);
    rhs -= MPoly::var(3, 1, 2);
    rhs -= X(3, 0) * X(3, 2);
    rhs += X(3, 0) * X(3, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("exact division") {
    CHECK((MPoly::var(2, 0, 2) - MPoly::var(2, 1, 2)).exact_div(X(2, 0) - X(2, 1)) ==
          X(2, 0) + X(2, 1));
    MPoly d3 = MPoly::vandermonde(3), d2 = MPoly::vandermonde(3).exact_div(X(3, 2) - X(3, 0))
                                               .exact_div(X(3, 2) - X(3, 1));
    CHECK(d2 == X(3, 1) - X(3, 0));
    CHECK_THROWS_AS((MPoly::var(2, 0, 2) + MPoly::var(2, 1, 2)).exact_div(X(2, 0) - X(2, 1)),
                    InexactDivision);
}

TEST_CASE("exact_div inverts multiplication on random pairs") {
    std::mt19937 rng(42);
    for (int t = 0; t < 30; ++t) {
        MPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("vandermonde") {
    CHECK(MPoly::vandermonde(0) == MPoly::constant(0, RatFun(1)));
    CHECK(MPoly::vandermonde(1) == MPoly::constant(1, RatFun(1)));
    CHECK(MPoly::vandermonde(2) == X(2, 1) - X(2, 0));
    CHECK(MPoly::vandermonde(3).term_count() == 6);
    CHECK(MPoly::vandermonde(3) ==
          (X(3, 1) - X(3, 0)) * (X(3, 2) - X(3, 0)) * (X(3, 2) - X(3, 1)));
}

TEST_CASE("partial derivatives") {
    // d/dx1 (x1^2 x2) = 2 x1 x2
    CHECK((MPoly::var(2, 0, 2) * X(2, 1)).partial(0) == X(2, 0) * X(2, 1) * RatFun(2));
    // coefficientwise d/dzeta
    MPoly zz = MPoly::constant(2, RatFun::zeta() * RatFun::zeta());
    CHECK(zz.partial_zeta() == MPoly::constant(2, RatFun(2) * RatFun::zeta()));
}

TEST_CASE("sum_j x_j^k d^k/dx_j^k of Vandermonde is k! C(m,k+1) Vandermonde") {
    for (int m = 1; m <= 5; ++m) {
        MPoly delta = MPoly::vandermonde(m);
        for (int k = 0; k <= 3; ++k) {
            MPoly lhs(m);
            for (int j = 0; j < m; ++j) {
                MPoly dk = delta;
                for (int r = 0; r < k; ++r) dk = dk.partial(j);
                lhs += MPoly::var(m, j, k) * dk;
            }
            long fact = 1;
            for (int r = 2; r <= k; ++r) fact *= r;
            CHECK(lhs == delta * RatFun(rat(fact * binom(m, k + 1))));
        }
    }
}

TEST_CASE("specialization") {
    // x1*x2 at x1=zeta leaves zeta*x in one variable
    MPoly p = X(2, 0) * X(2, 1);
    CHECK(p.specialize(0, RatFun::zeta()) == MPoly::var(1, 0) * RatFun::zeta());
    // Vandermonde(x1,x2) at x2 = xi_3 = 1 gives 1 - x1
    CHECK(MPoly::vandermonde(2).specialize(1, RatFun(1)) ==
          MPoly::constant(1, RatFun(1)) - MPoly::var(1, 0));
}

TEST_CASE("specialization commutes with arithmetic") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        MPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
        RatFun v = RatFun::zeta() + RatFun(rat(t));
        CHECK((a * b).specialize(1, v) == a.specialize(1, v) * b.specialize(1, v));
        CHECK((a + b).specialize(1, v) == a.specialize(1, v) + b.specialize(1, v));
    }
}

TEST_CASE("symmetry checks") {
    CHECK((X(2, 0) + X(2, 1)).is_symmetric());
    CHECK(MPoly::vandermonde(3).is_antisymmetric());
    CHECK_FALSE(MPoly::vandermonde(3).is_symmetric());
    CHECK_FALSE((X(2, 0) + X(2, 1)).is_antisymmetric());
}

TEST_CASE("JSON round-trip and canonical bytes") {
    std::mt19937 rng(5);
    for (int t = 0; t < 15; ++t) {
        MPoly p = random_poly(rng, 4, 3, 6);
        MPoly q = mpoly_from_json(to_json(p));
        CHECK(p == q);
        CHECK(canonical_dump(to_json(p)) == canonical_dump(to_json(q)));
    }
}

TEST_CASE("MRat equality by cross multiplication") {
    MPoly x = X(2, 0), y = X(2, 1);
    MRat a(x * x - y * y, x - y);
    MRat b(x + y, MPoly::constant(2, RatFun(1)));
    CHECK(a.equal(b));
    CHECK((a - b).is_zero());
}
