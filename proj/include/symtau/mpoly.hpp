#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "symtau/ratfun.hpp"

namespace symtau {

// Exponent vector with fixed capacity. 12 variables covers everything in this
// project (block functions use at most 8, the constant-term lemma m+7 <= 12).
class Expo {
public:
    static constexpr int kMaxVars = 12;

    Expo() : n_(0) { e_.fill(0); }
    explicit Expo(int nvars) : n_(static_cast<uint8_t>(nvars)) { e_.fill(0); }

    int nvars() const { return n_; }
    uint16_t operator[](int i) const { return e_[i]; }
    uint16_t& operator[](int i) { return e_[i]; }
    int total() const {
        int t = 0;
        for (int i = 0; i < n_; ++i) t += e_[i];
        return t;
    }
    Expo operator+(const Expo& o) const {
        Expo r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<uint16_t>(e_[i] + o.e_[i]);
        return r;
    }
    // componentwise, requires *this >= o
    Expo operator-(const Expo& o) const {
        Expo r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
        return r;
    }
    bool divides(const Expo& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    bool operator==(const Expo& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    std::array<uint16_t, kMaxVars> e_;
    uint8_t n_;
};

// Graded lexicographic: higher total degree first, ties broken by the first
// differing exponent (x1 > x2 > ...). Used as the canonical term order.
struct GradedLexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta > tb;
        for (int i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Sparse multivariate polynomial in x_1..x_nvars over Q(zeta).
// Invariant: stored coefficients are nonzero; zero polynomial has no terms.
class MPoly {
public:
    using TermMap = std::map<Expo, RatFun, GradedLexGreater>;

    explicit MPoly(int nvars = 0);
    static MPoly constant(int nvars, const RatFun& c);
    static MPoly var(int nvars, int i, int power = 1); // x_i^power (0-based i)
    static MPoly vandermonde(int m);                   // prod_{i<j} (x_j - x_i)

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    const RatFun& coeff(const Expo& e) const;
    RatFun constant_term() const { return coeff(Expo(nvars_)); }

    void add_term(const Expo& e, const RatFun& c); // accumulates, drops zeros

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const RatFun& s) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Exact division by multivariate reduction under the term order; a nonzero
    // remainder throws InexactDivision (bug detector, not a data condition).
    MPoly exact_div(const MPoly& divisor) const;

    MPoly partial(int var) const;       // d/dx_var
    MPoly partial_zeta() const;         // coefficientwise d/dzeta
    int degree_in(int var) const;

    // Substitute x_var = v; the result has nvars-1 variables (variables above
    // var shift down by one).
    MPoly specialize(int var, const RatFun& v) const;
    // Keep arity, substitute a polynomial value for x_var = value(other vars).
    MPoly swap_vars(int i, int j) const;

    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool zeta_polynomial() const; // all coefficients polynomial in zeta

    // Decompose along one variable: result[d] = coefficient of x_var^d
    // as a polynomial in the remaining arity (variable kept, exponent zeroed).
    std::vector<MPoly> coeffs_in_var(int var) const;

    template <class T>
    T eval_as(const std::vector<T>& x, const T& z) const {
        T acc(0);
        for (const auto& [e, c] : terms_) {
            T t = c.template eval_as<T>(z);
            for (int i = 0; i < nvars_; ++i)
                for (int p = 0; p < e[i]; ++p) t *= x[i];
            acc += t;
        }
        return acc;
    }

    std::string str() const;

private:
    int nvars_;
    TermMap terms_;
};

// Quotient of two MPolys. Kept unreduced except for cheap rational-content
// pulls; equality is tested by cross-multiplication.
struct MRat {
    MPoly num, den;

    explicit MRat(int nvars = 0) : num(nvars), den(MPoly::constant(nvars, RatFun(1))) {}
    MRat(MPoly n, MPoly d);

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const;
    MRat operator+(const MRat& o) const;
    MRat operator-(const MRat& o) const;
    MRat operator*(const MRat& o) const;
    bool equal(const MRat& o) const { return (num * o.den - o.num * den).is_zero(); }
};

} // namespace symtau
