#include "symtau/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace symtau {

ZetaPoly ZetaPoly::monomial(int deg, const Rat& c) {
    ZetaPoly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, Rat(0));
    p.c_[deg] = c;
    return p;
}

const Rat& ZetaPoly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

ZetaPoly ZetaPoly::operator-() const {
    ZetaPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZetaPoly ZetaPoly::operator+(const ZetaPoly& o) const {
    ZetaPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

ZetaPoly ZetaPoly::operator-(const ZetaPoly& o) const {
    ZetaPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

ZetaPoly ZetaPoly::operator*(const ZetaPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    ZetaPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

ZetaPoly ZetaPoly::operator*(const Rat& s) const {
    if (s == 0) return {};
    ZetaPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

ZetaPoly ZetaPoly::derivative() const {
    ZetaPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

Rat ZetaPoly::eval(const Rat& q) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

ZetaPoly ZetaPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / c_.back());
}

void ZetaPoly::divrem(const ZetaPoly& a, const ZetaPoly& b, ZetaPoly& quo, ZetaPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    quo = ZetaPoly();
    if (a.degree() < b.degree()) return;
    quo.c_.assign(a.degree() - b.degree() + 1, Rat(0));
    Rat lb = b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rat f = rem.lead() / lb;
        quo.c_[d] = f;
        // rem -= f * x^d * b
        for (int i = 0; i <= b.degree(); ++i) rem.c_[i + d] -= f * b.c_[i];
        rem.trim();
    }
    quo.trim();
}

namespace {

// integer-coefficient view used by the gcd
using ZVec = std::vector<Int>;

ZVec to_primitive_int(const ZetaPoly& p) {
    Int lcm(1);
    for (const Rat& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZVec v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat t = p.coeffs()[i] * Rat(lcm);
        v[i] = t.get_num(); // exact: den divides lcm
    }
    Int g(0);
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZVec& v) {
    Int g(0);
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) x /= g;
}

// pseudo-remainder of a by b: lc(b)^(da-db+1) * a  mod b
ZVec pseudo_rem(ZVec a, const ZVec& b) {
    Int lb = b.back();
    int db = zdeg(b);
    while (zdeg(a) >= db) {
        Int la = a.back();
        int d = zdeg(a) - db;
        for (Int& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[i + d] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

ZetaPoly ZetaPoly::gcd(const ZetaPoly& a, const ZetaPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZVec u = to_primitive_int(a), v = to_primitive_int(b);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        ZVec r = pseudo_rem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> c(u.size());
    for (size_t i = 0; i < u.size(); ++i) c[i] = Rat(u[i]);
    return ZetaPoly(std::move(c)).monic();
}

std::string ZetaPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c > 0 ? " + " : " - ");
        }
        bool unit = ac == 1 && i > 0;
        if (!unit) os << ac.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatFun RatFun::make(ZetaPoly num, ZetaPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return RatFun();
    ZetaPoly g = ZetaPoly::gcd(num, den);
    if (g.degree() > 0) {
        ZetaPoly q, r;
        ZetaPoly::divrem(num, g, q, r);
        num = q;
        ZetaPoly::divrem(den, g, q, r);
        den = q;
    }
    Rat lead = den.lead();
    RatFun f;
    f.num_ = num * (Rat(1) / lead);
    f.den_ = den * (Rat(1) / lead);
    return f;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (is_poly() && o.is_poly()) return RatFun(num_ + o.num_);
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (is_poly() && o.is_poly()) return RatFun(num_ - o.num_);
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    if (is_poly() && o.is_poly()) return RatFun(num_ * o.num_);
    return make(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero function");
    if (is_zero()) return RatFun();
    return make(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return RatFun(1);
    RatFun base = e < 0 ? RatFun(1) / *this : *this;
    long n = e < 0 ? -e : e;
    RatFun acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RatFun RatFun::derivative() const {
    if (is_poly()) return RatFun(num_.derivative());
    // (n/d)' = (n'd - nd')/d^2
    return make(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& q) const {
    Rat d = den_.eval(q);
    if (d == 0) throw PoleAtPoint("denominator vanishes at zeta=" + q.get_str());
    return num_.eval(q) / d;
}

std::string RatFun::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// trial factorization over the linears that actually occur in the paper
std::string factored_str(const ZetaPoly& p) {
    struct Lin {
        ZetaPoly poly;
        std::string name;
    };
    static const std::vector<Lin> lins = {
        {ZetaPoly(std::vector<Rat>{Rat(0), Rat(1)}), "zeta"},
        {ZetaPoly(std::vector<Rat>{Rat(-1), Rat(1)}), "(zeta-1)"},
        {ZetaPoly(std::vector<Rat>{Rat(1), Rat(1)}), "(zeta+1)"},
        {ZetaPoly(std::vector<Rat>{Rat(2), Rat(1)}), "(zeta+2)"},
        {ZetaPoly(std::vector<Rat>{Rat(1), Rat(2)}), "(2*zeta+1)"},
    };
    ZetaPoly rest = p;
    std::ostringstream os;
    bool emitted = false;
    for (const auto& lin : lins) {
        int e = 0;
        while (rest.degree() >= 1) {
            ZetaPoly q, r;
            ZetaPoly::divrem(rest, lin.poly, q, r);
            if (!r.is_zero()) break;
            rest = q;
            ++e;
        }
        if (e > 0) {
            if (emitted) os << "*";
            os << lin.name;
            if (e > 1) os << "^" << e;
            emitted = true;
        }
    }
    std::string tail = rest.str();
    if (!emitted) return tail;
    if (tail == "1") return os.str();
    if (rest.degree() == 0) return tail + "*" + os.str();
    return os.str() + "*(" + tail + ")";
}

} // namespace

std::string RatFun::pretty() const {
    if (is_zero()) return "0";
    if (is_poly()) return factored_str(num_);
    return factored_str(num_) + " / [" + factored_str(den_) + "]";
}

} // namespace symtau
