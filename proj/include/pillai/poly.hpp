#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pillai/errors.hpp"
#include "pillai/rational.hpp"

namespace pillai {

// Degree of a polynomial, with a distinct "minus infinity" for the zero
// polynomial. Minus infinity absorbs addition and compares below every
// finite degree; it is never conflated with -1.
class Degree {
   public:
    constexpr Degree(int v) : finite_(true), v_(v) {}  // NOLINT: implicit by design

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !finite_; }

    int value() const {
        if (!finite_) throw DomainError("degree_of_zero", "degree of the zero polynomial has no integer value");
        return v_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }

    friend constexpr bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(Degree a, Degree b) { return a < b || a == b; }
    friend constexpr bool operator>(Degree a, Degree b) { return b < a; }
    friend constexpr bool operator>=(Degree a, Degree b) { return b <= a; }

    // deg(a*b) = deg a + deg b with the sentinel absorbing.
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return neg_infinity();
        return Degree(a.v_ + b.v_);
    }

   private:
    constexpr Degree() : finite_(false), v_(0) {}
    bool finite_;
    int v_;
};

// Dense univariate polynomial with exact rational coefficients.
// coeffs()[i] is the coefficient of x^i; the highest stored coefficient is
// nonzero (the zero polynomial stores nothing).
class Poly {
   public:
    Poly() = default;

    explicit Poly(const BigRat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit Poly(long long constant) : Poly(BigRat(constant)) {}

    static Poly from_coeffs(std::vector<BigRat> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // c * x^e
    static Poly monomial(const BigRat& c, int e) {
        Poly p;
        if (c != 0) {
            p.c_.assign(static_cast<std::size_t>(e) + 1, BigRat(0));
            p.c_.back() = c;
        }
        return p;
    }

    static Poly x() { return monomial(BigRat(1), 1); }

    const std::vector<BigRat>& coeffs() const { return c_; }

    BigRat coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return BigRat(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Degree degree() const {
        if (c_.empty()) return Degree::neg_infinity();
        return Degree(static_cast<int>(c_.size()) - 1);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const BigRat& leading() const {
        if (c_.empty()) throw DomainError("zero_polynomial", "leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }

    // Schoolbook multiplication; exact and plenty fast at the degrees we see.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const BigRat& s, const Poly& a) {
        if (s == 0) return Poly();
        Poly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Poly& a, const BigRat& s) { return s * a; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Horner evaluation.
    BigRat operator()(const BigRat& at) const {
        BigRat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * at + c_[i];
        }
        return acc;
    }

   private:
    std::vector<BigRat> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

// Euclidean division: a = quotient * b + remainder with deg rem < deg b.
inline DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw DomainError("zero_polynomial", "division by the zero polynomial");
    }
    std::vector<BigRat> rem(a.coeffs());
    const int db = b.degree().is_neg_infinity() ? 0 : b.degree().value();
    const BigRat& lead = b.leading();
    std::vector<BigRat> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) {
        quot.assign(rem.size() - static_cast<std::size_t>(db), BigRat(0));
    }
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= db) {
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
        if (dr < db) break;
        BigRat factor = rem[static_cast<std::size_t>(dr)] / lead;
        quot[static_cast<std::size_t>(dr - db)] = factor;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(dr - db + i)] -= factor * b.coeff(i);
        }
        --dr;
    }
    return DivRem{Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

// Exact quotient; throws if b does not divide a.
inline Poly div_exact(const Poly& a, const Poly& b) {
    DivRem dr = divrem(a, b);
    if (!dr.remainder.is_zero()) {
        throw DomainError("inexact_division", "polynomial division left a nonzero remainder");
    }
    return dr.quotient;
}

inline Poly pow(const Poly& base, int exponent) {
    if (exponent < 0) throw DomainError("bad_exponent", "negative polynomial exponent");
    Poly acc(BigRat(1));
    Poly sq = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= sq;
        e >>= 1;
        if (e > 0) sq *= sq;
    }
    return acc;
}

inline Poly derivative(const Poly& f) {
    std::vector<BigRat> c;
    const auto& src = f.coeffs();
    for (std::size_t i = 1; i < src.size(); ++i) {
        c.push_back(BigRat(static_cast<long long>(i)) * src[i]);
    }
    return Poly::from_coeffs(std::move(c));
}

inline Poly monic(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "monic part of the zero polynomial");
    if (f.is_monic()) return f;
    return (BigRat(1) / f.leading()) * f;
}

// Monic gcd by the Euclidean algorithm, normalizing each remainder to keep
// coefficients small.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw DomainError("zero_polynomial", "gcd of two zero polynomials");
    }
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divrem(u, v).remainder;
        if (!r.is_zero()) r = monic(r);
        u = std::move(v);
        v = std::move(r);
    }
    return monic(u);
}

// Canonical total order: by degree, then by the coefficient list.
inline int poly_compare(const Poly& a, const Poly& b) {
    if (a.degree() < b.degree()) return -1;
    if (b.degree() < a.degree()) return 1;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) return -1;
        if (cb[i] < ca[i]) return 1;
    }
    return 0;
}

inline bool poly_less(const Poly& a, const Poly& b) { return poly_compare(a, b) < 0; }

struct SquarefreeFactor {
    Poly factor;       // monic, squarefree, nonconstant
    int multiplicity;  // strictly increasing across the output
};

// Yun's derivative-gcd decomposition: f = lc(f) * prod factor^multiplicity
// with the factors pairwise coprime.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) {
        throw DomainError("zero_polynomial", "squarefree decomposition of the zero polynomial");
    }
    std::vector<SquarefreeFactor> out;
    if (f.is_constant()) return out;
    Poly g = monic(f);
    Poly d = derivative(g);
    Poly a = gcd(g, d);
    Poly b = div_exact(g, a);
    Poly c = div_exact(d, a);
    for (int i = 1; !b.is_constant(); ++i) {
        Poly z = c - derivative(b);
        Poly h = z.is_zero() ? b : gcd(b, z);
        if (!h.is_constant()) out.push_back({h, i});
        b = div_exact(b, h);
        c = div_exact(z, h);
    }
    return out;
}

// Monic n-th root of a monic polynomial, if one exists over the rationals.
// Each unknown coefficient of the candidate root appears linearly when the
// coefficients of g are matched from the top down; a final verification
// multiply rejects near-powers whose low coefficients disagree.
inline std::optional<Poly> nth_root_monic(const Poly& g, int n) {
    if (n < 2) throw DomainError("bad_exponent", "nth_root_monic requires n >= 2");
    if (!g.is_monic()) throw DomainError("not_monic", "nth_root_monic requires a monic input");
    const int dg = g.degree().value();
    if (dg == 0) return Poly(BigRat(1));
    if (dg % n != 0) return std::nullopt;
    const int k = dg / n;
    std::vector<BigRat> hc(static_cast<std::size_t>(k) + 1, BigRat(0));
    hc.back() = 1;
    Poly h = Poly::from_coeffs(hc);
    for (int j = 1; j <= k; ++j) {
        Poly cur = pow(h, n);
        BigRat delta = g.coeff(dg - j) - cur.coeff(dg - j);
        hc[static_cast<std::size_t>(k - j)] = delta / BigRat(n);
        h = Poly::from_coeffs(hc);
    }
    if (pow(h, n) == g) return h;
    return std::nullopt;
}

// Splits f = content * primitive where primitive has coprime integer
// coefficients and a positive leading coefficient.
struct IntegerScaled {
    BigRat content;
    Poly primitive;
};

inline IntegerScaled integer_primitive(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "primitive part of the zero polynomial");
    BigInt den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    BigInt num_gcd = 0;
    for (const auto& c : f.coeffs()) {
        BigInt scaled = numerator(c) * (den_lcm / denominator(c));
        num_gcd = boost::multiprecision::gcd(num_gcd, abs(scaled));
    }
    BigRat content = make_rat(num_gcd, den_lcm);
    if (f.leading() < 0) content = -content;
    Poly prim = (BigRat(1) / content) * f;
    return IntegerScaled{content, prim};
}

// Canonical text form; parse.hpp accepts exactly this output.
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const int deg = f.degree().value();
    bool first = true;
    for (int e = deg; e >= 0; --e) {
        BigRat c = f.coeff(e);
        if (c == 0) continue;
        bool neg = c < 0;
        BigRat mag = neg ? BigRat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += "*";
            }
            out += "x";
            if (e != 1) {
                out += "^" + std::to_string(e);
            }
        }
    }
    return out;
}

}  // namespace pillai
