#pragma once

#include <vector>

#include "symtau/mpoly.hpp"

namespace symtau {

// Dense univariate polynomial in a single variable x over Q(zeta). This is
// the working form for everything that lives on one coordinate at a time:
// the quartic a(x), the sigma-hat images, per-variable denominators, and the
// conjugated operator coefficients.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(const RatFun& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit XPoly(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XPoly one() { return XPoly(RatFun(1)); }
    static XPoly x() { return monomial(1, RatFun(1)); }
    static XPoly monomial(int deg, const RatFun& c);
    // x - r
    static XPoly linear_root(const RatFun& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == RatFun(1); }
    const RatFun& coeff(int i) const;
    const std::vector<RatFun>& coeffs() const { return c_; }

    XPoly operator-() const;
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const RatFun& s) const;
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    bool operator==(const XPoly& o) const { return c_ == o.c_; }

    XPoly pow(int e) const;
    XPoly dx() const;    // d/dx
    XPoly dzeta() const; // coefficientwise d/dzeta
    RatFun eval(const RatFun& v) const;

    template <class T>
    T eval_as(const T& xv, const T& zv) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * xv + it->template eval_as<T>(zv);
        return acc;
    }

    static void divrem(const XPoly& a, const XPoly& b, XPoly& quo, XPoly& rem);
    XPoly exact_div(const XPoly& b) const; // throws InexactDivision

    // inject as an MPoly in variable `var` of an nvars-variate ring
    MPoly to_mpoly(int nvars, int var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatFun> c_;
};

// Unreduced quotient of two XPolys.
struct XRat {
    XPoly num, den;

    XRat() : num(), den(XPoly::one()) {}
    explicit XRat(XPoly n) : num(std::move(n)), den(XPoly::one()) {}
    XRat(XPoly n, XPoly d);

    bool is_poly() const { return den.is_one(); }

    XRat operator+(const XRat& o) const;
    XRat operator-(const XRat& o) const;
    XRat operator*(const XRat& o) const;
    XRat operator*(const RatFun& s) const { return {num * s, den}; }
    XRat dx() const;
    XRat dzeta() const;

    // Evaluate at a point where the function is regular: common (x-v) factors
    // of num and den are cancelled first; a genuine pole throws PoleAtPoint.
    RatFun eval_reg(const RatFun& v) const;
};

} // namespace symtau
