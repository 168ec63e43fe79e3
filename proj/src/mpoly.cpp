#include "symtau/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace symtau {

MPoly::MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > Expo::kMaxVars) throw ArityMismatch("unsupported variable count");
}

MPoly MPoly::constant(int nvars, const RatFun& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Expo(nvars), c);
    return p;
}

MPoly MPoly::var(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw ArityMismatch("variable index out of range");
    MPoly p(nvars);
    Expo e(nvars);
    e[i] = static_cast<uint16_t>(power);
    p.terms_.emplace(e, RatFun(1));
    return p;
}

MPoly MPoly::vandermonde(int m) {
    MPoly p = constant(m, RatFun(1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) p = p * (var(m, j) - var(m, i));
    return p;
}

const RatFun& MPoly::coeff(const Expo& e) const {
    static const RatFun kZero;
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

void MPoly::add_term(const Expo& e, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw ArityMismatch("adding polynomials of different arity");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw ArityMismatch("subtracting polynomials of different arity");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw ArityMismatch("adding polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw ArityMismatch("subtracting polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw ArityMismatch("multiplying polynomials of different arity");
    MPoly r(nvars_);
    const MPoly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const MPoly& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const RatFun& s) const {
    MPoly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (nvars_ != divisor.nvars_) throw ArityMismatch("dividing polynomials of different arity");
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly rem = *this;
    MPoly quo(nvars_);
    const auto& [elead, clead] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms_.begin();
        if (!elead.divides(er))
            throw InexactDivision("leading term not divisible; remainder nonzero");
        Expo eq = er - elead;
        RatFun cq = cr / clead;
        quo.add_term(eq, cq);
        for (const auto& [ed, cd] : divisor.terms_) rem.add_term(eq + ed, -(cq * cd));
    }
    return quo;
}

MPoly MPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw ArityMismatch("variable index out of range");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] = static_cast<uint16_t>(d[var] - 1);
        r.add_term(d, c * RatFun(Rat(static_cast<long>(e[var]))));
    }
    return r;
}

MPoly MPoly::partial_zeta() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.derivative());
    return r;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

MPoly MPoly::specialize(int var, const RatFun& v) const {
    if (var < 0 || var >= nvars_) throw ArityMismatch("variable index out of range");
    int deg = degree_in(var);
    std::vector<RatFun> pow(deg + 1, RatFun(1));
    for (int i = 1; i <= deg; ++i) pow[i] = pow[i - 1] * v;
    MPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        Expo d(nvars_ - 1);
        for (int i = 0, j = 0; i < nvars_; ++i)
            if (i != var) d[j++] = e[i];
        r.add_term(d, c * pow[e[var]]);
    }
    return r;
}

MPoly MPoly::swap_vars(int i, int j) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo d = e;
        std::swap(d[i], d[j]);
        r.terms_.emplace(d, c);
    }
    return r;
}

bool MPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        if (!(swap_vars(i, i + 1) == *this)) return false;
    return true;
}

bool MPoly::is_antisymmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        if (!(swap_vars(i, i + 1) == -*this)) return false;
    return true;
}

bool MPoly::zeta_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_poly()) return false;
    return true;
}

std::vector<MPoly> MPoly::coeffs_in_var(int var) const {
    std::vector<MPoly> out(degree_in(var) + 1, MPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Expo d = e;
        int p = d[var];
        d[var] = 0;
        out[p].add_term(d, c);
    }
    return out;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

namespace {

// cheapest useful reduction: pull the gcd of all rational contents
Rat content_of(const MPoly& p) {
    Rat g(0);
    for (const auto& [e, c] : p.terms()) {
        // content of a RatFun coefficient = content of its numerator poly
        for (const Rat& q : c.num().coeffs()) {
            if (q == 0) continue;
            if (g == 0) g = abs(q);
            else {
                mpz_gcd(g.get_num_mpz_t(), g.get_num().get_mpz_t(), q.get_num().get_mpz_t());
                mpz_lcm(g.get_den_mpz_t(), g.get_den().get_mpz_t(), q.get_den().get_mpz_t());
            }
        }
    }
    return g == 0 ? Rat(1) : g;
}

} // namespace

MRat::MRat(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("rational expression with zero denominator");
    if (num.is_zero()) {
        den = MPoly::constant(num.nvars(), RatFun(1));
        return;
    }
    Rat cn = content_of(num), cd = content_of(den);
    if (cd != 1) {
        RatFun inv(Rat(1) / cd);
        num = num * inv;
        den = den * inv;
    }
    (void)cn;
}

bool MRat::is_poly() const {
    return den.term_count() == 1 && den.terms().begin()->first.total() == 0;
}

MRat MRat::operator+(const MRat& o) const { return MRat(num * o.den + o.num * den, den * o.den); }
MRat MRat::operator-(const MRat& o) const { return MRat(num * o.den - o.num * den, den * o.den); }
MRat MRat::operator*(const MRat& o) const { return MRat(num * o.num, den * o.den); }

} // namespace symtau
