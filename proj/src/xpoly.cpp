#include "symtau/xpoly.hpp"

#include <algorithm>

namespace symtau {

XPoly XPoly::monomial(int deg, const RatFun& c) {
    XPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, RatFun());
    p.c_[deg] = c;
    return p;
}

XPoly XPoly::linear_root(const RatFun& r) {
    return XPoly(std::vector<RatFun>{-r, RatFun(1)});
}

const RatFun& XPoly::coeff(int i) const {
    static const RatFun kZero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    XPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, RatFun());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

XPoly XPoly::operator*(const RatFun& s) const {
    if (s.is_zero()) return {};
    XPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

XPoly XPoly::pow(int e) const {
    XPoly acc = one(), base = *this;
    for (int n = e; n > 0; n >>= 1) {
        if (n & 1) acc = acc * base;
        if (n > 1) base = base * base;
    }
    return acc;
}

XPoly XPoly::dx() const {
    XPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * RatFun(Rat(static_cast<long>(i)));
    r.trim();
    return r;
}

XPoly XPoly::dzeta() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = c.derivative();
    r.trim();
    return r;
}

RatFun XPoly::eval(const RatFun& v) const {
    RatFun acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

void XPoly::divrem(const XPoly& a, const XPoly& b, XPoly& quo, XPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("univariate division by zero");
    rem = a;
    quo = XPoly();
    if (a.degree() < b.degree()) return;
    quo.c_.assign(a.degree() - b.degree() + 1, RatFun());
    const RatFun& lb = b.c_.back();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        RatFun f = rem.c_.back() / lb;
        quo.c_[d] = f;
        for (int i = 0; i <= b.degree(); ++i) rem.c_[i + d] -= f * b.c_[i];
        rem.trim();
    }
    quo.trim();
}

XPoly XPoly::exact_div(const XPoly& b) const {
    XPoly q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw InexactDivision("univariate remainder nonzero");
    return q;
}

MPoly XPoly::to_mpoly(int nvars, int var) const {
    MPoly p(nvars);
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i].is_zero()) continue;
        Expo e(nvars);
        e[var] = static_cast<uint16_t>(i);
        p.add_term(e, c_[i]);
    }
    return p;
}

XRat::XRat(XPoly n, XPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("XRat with zero denominator");
    if (num.is_zero()) den = XPoly::one();
}

XRat XRat::operator+(const XRat& o) const {
    if (is_poly() && o.is_poly()) return XRat(num + o.num);
    return {num * o.den + o.num * den, den * o.den};
}

XRat XRat::operator-(const XRat& o) const {
    if (is_poly() && o.is_poly()) return XRat(num - o.num);
    return {num * o.den - o.num * den, den * o.den};
}

XRat XRat::operator*(const XRat& o) const { return {num * o.num, den * o.den}; }

XRat XRat::dx() const {
    if (is_poly()) return XRat(num.dx());
    return {num.dx() * den - num * den.dx(), den * den};
}

XRat XRat::dzeta() const {
    if (is_poly()) return XRat(num.dzeta());
    return {num.dzeta() * den - num * den.dzeta(), den * den};
}

RatFun XRat::eval_reg(const RatFun& v) const {
    XPoly n = num, d = den;
    RatFun dv = d.eval(v);
    while (dv.is_zero()) {
        RatFun nv = n.eval(v);
        if (!nv.is_zero()) throw PoleAtPoint("pole of rational coefficient at evaluation point");
        XPoly lin = XPoly::linear_root(v);
        n = n.exact_div(lin);
        d = d.exact_div(lin);
        dv = d.eval(v);
    }
    return n.eval(v) / dv;
}

} // namespace symtau
