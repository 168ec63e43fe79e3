#pragma once

#include <string>
#include <vector>

#include "symtau/rat.hpp"

namespace symtau {

// Dense univariate polynomial in the parameter zeta over Q.
// Coefficients run from degree 0 upward; no trailing zeros; zero poly is {}.
class ZetaPoly {
public:
    ZetaPoly() = default;
    explicit ZetaPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit ZetaPoly(long c) : ZetaPoly(Rat(c)) {}
    explicit ZetaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZetaPoly zeta() { return monomial(1, Rat(1)); }
    static ZetaPoly monomial(int deg, const Rat& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }

    ZetaPoly operator-() const;
    ZetaPoly operator+(const ZetaPoly& o) const;
    ZetaPoly operator-(const ZetaPoly& o) const;
    ZetaPoly operator*(const ZetaPoly& o) const;
    ZetaPoly operator*(const Rat& s) const;
    bool operator==(const ZetaPoly& o) const { return c_ == o.c_; }

    ZetaPoly derivative() const;
    Rat eval(const Rat& q) const;

    // Horner in any field-like scalar (used for complex evaluation).
    template <class T>
    T eval_as(const T& z) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + RatCast<T>::cast(*it);
        return acc;
    }

    ZetaPoly monic() const;

    // Euclidean division over Q; rem has degree < degree(div).
    static void divrem(const ZetaPoly& a, const ZetaPoly& b, ZetaPoly& quo, ZetaPoly& rem);
    // Monic gcd computed on integer primitive parts (primitive PRS).
    static ZetaPoly gcd(const ZetaPoly& a, const ZetaPoly& b);

    std::string str(const std::string& var = "zeta") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// An element of the field Q(zeta): num/den with den monic and gcd(num,den)=1.
// Zero is 0/1. Equality of values is equality of the normal forms.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
    explicit RatFun(const ZetaPoly& p) : num_(p), den_(Rat(1)) {}

    static RatFun zeta() { return RatFun(ZetaPoly::zeta()); }
    // Normalizing constructor, reduces and fixes the monic-denominator sign.
    static RatFun make(ZetaPoly num, ZetaPoly den);

    const ZetaPoly& num() const { return num_; }
    const ZetaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun pow(long e) const;
    // Exact d/dzeta.
    RatFun derivative() const;
    // Exact evaluation; throws PoleAtPoint when the (reduced) denominator vanishes.
    Rat eval(const Rat& q) const;

    template <class T>
    T eval_as(const T& z) const {
        T n = num_.eval_as<T>(z);
        if (is_poly()) return n;
        return n / den_.eval_as<T>(z);
    }

    std::string str() const;
    // Pulls out integer content and powers of zeta, zeta+-1, zeta+2, 2zeta+1
    // before falling back to the raw polynomial (for human-readable reports).
    std::string pretty() const;

private:
    ZetaPoly num_, den_;
};

inline RatFun operator*(const Rat& s, const RatFun& f) { return RatFun(s) * f; }

} // namespace symtau
