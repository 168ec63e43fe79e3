#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtau/jsonio.hpp"
#include "symtau/ratfun.hpp"

using namespace symtau;

namespace {

RatFun Z() { return RatFun::zeta(); }

RatFun random_ratfun(std::mt19937& rng, bool allow_den = true) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-6, 6);
    auto poly = [&](bool nonzero) {
        ZetaPoly p;
        do {
            std::vector<Rat> c(deg(rng) + 1);
            for (auto& q : c) q = rat(coef(rng));
            p = ZetaPoly(std::move(c));
        } while (nonzero && p.is_zero());
        return p;
    };
    return RatFun::make(poly(false), allow_den ? poly(true) : ZetaPoly(Rat(1)));
}

// Exact 7-point Lagrange derivative at the center node; exact for deg <= 6.
Rat fd_derivative_oracle(const RatFun& f, const Rat& x0) {
    static const std::pair<int, Rat> stencil[] = {
        {-3, rat(-1, 60)}, {-2, rat(3, 20)}, {-1, rat(-3, 4)},
        {1, rat(3, 4)},    {2, rat(-3, 20)}, {3, rat(1, 60)},
    };
    Rat acc(0);
    for (const auto& [j, w] : stencil) acc += w * f.eval(x0 + Rat(j));
    return acc;
}

} // namespace

TEST_CASE("field arithmetic on the worked examples") {
    // zeta/(zeta+1) + 1/(zeta+1) = 1
    RatFun zp1 = Z() + RatFun(1);
    CHECK(Z() / zp1 + RatFun(1) / zp1 == RatFun(1));
    // (zeta-1)(zeta+1) = zeta^2-1
    CHECK((Z() - RatFun(1)) * (Z() + RatFun(1)) == Z() * Z() - RatFun(1));
    // (zeta^2-1)/(zeta-1) = zeta+1
    CHECK((Z() * Z() - RatFun(1)) / (Z() - RatFun(1)) == Z() + RatFun(1));
}

TEST_CASE("division by the zero function throws") {
    CHECK_THROWS_AS(Z() / RatFun(), DivisionByZero);
}

TEST_CASE("evaluation") {
    CHECK((RatFun(2) * Z() + RatFun(1)).eval(rat(3)) == rat(7));
    CHECK_THROWS_AS((Z() / (Z() + RatFun(2))).eval(rat(-2)), PoleAtPoint);
    // xi_2 = zeta(2zeta+1)/(zeta+2) evaluates to 1 at zeta=1
    RatFun xi2 = Z() * (RatFun(2) * Z() + RatFun(1)) / (Z() + RatFun(2));
    CHECK(xi2.eval(rat(1)) == rat(1));
}

TEST_CASE("derivative basics and the finite-difference oracle") {
    CHECK((Z() * Z()).derivative() == RatFun(2) * Z());
    CHECK((RatFun(1) / Z()).derivative() == -RatFun(1) / (Z() * Z()));

    // d = 2z(z-1)(z+1)(z+2)(2z+1), derivative checked at zeta=2 against the
    // exact stencil (degree 5 < 7-point exactness bound).
    RatFun d = RatFun(2) * Z() * (Z() - RatFun(1)) * (Z() + RatFun(1)) * (Z() + RatFun(2)) *
               (RatFun(2) * Z() + RatFun(1));
    CHECK(d.derivative().eval(rat(2)) == fd_derivative_oracle(d, rat(2)));
}

TEST_CASE("field axioms and Leibniz on random samples") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("normal form is canonical") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        RatFun a = random_ratfun(rng), b = random_ratfun(rng, false);
        while (a.is_zero()) a = random_ratfun(rng);
        // same value assembled two ways
        RatFun left = (b / a) * a;
        CHECK(left == b);
        RatFun two_step = b * a / a;
        CHECK(two_step == b);
    }
    // scaled num/den pairs normalize identically
    ZetaPoly n(std::vector<Rat>{rat(2), rat(4)}), d(std::vector<Rat>{rat(6), rat(2)});
    CHECK(RatFun::make(n, d) == RatFun::make(n * rat(5), d * rat(5)));
}

TEST_CASE("serialization round-trips exactly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        RatFun f = random_ratfun(rng);
        RatFun g = ratfun_from_json(to_json(f));
        CHECK(f == g);
        CHECK(canonical_dump(to_json(f)) == canonical_dump(to_json(g)));
    }
}

TEST_CASE("gcd normalization keeps denominators monic") {
    RatFun f = RatFun::make(ZetaPoly(std::vector<Rat>{rat(1), rat(1)}),
                            ZetaPoly(std::vector<Rat>{rat(2), rat(0), rat(2)}));
    CHECK(f.den().lead() == 1);
    CHECK(f.den().coeff(0) == 1); // (1+z)/(2+2z^2) -> (1/2)(1+z)/(1+z^2)... den monic
}
