#pragma once

#include <string>

#include "galois/unipoly.hpp"

namespace galois {

// Element of Q(x). Invariants: denominator monic and nonzero,
// gcd(num, den) = 1, zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    RatFunc(const Rational& c) : num_(c), den_(UniPoly::one()) {}
    RatFunc(long c) : num_(Rational(c)), den_(UniPoly::one()) {}
    explicit RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}
    RatFunc(const UniPoly& num, const UniPoly& den);

    static RatFunc x() { return RatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc shift(long m) const;  // f(x + m)

    // max(deg num, deg den); -1 for zero
    int height_degree() const { return std::max(num_.degree(), den_.degree()); }

    // Exact evaluation at an integer point; throws PoleError at a pole.
    Rational eval_at_integer(const Int& i) const;
    bool has_pole_at(const Int& i) const;

    std::string str() const;
    std::string str(const std::string& var) const;

private:
    UniPoly num_, den_;
};

struct PoleError : std::domain_error {
    Int point;
    explicit PoleError(const Int& i)
        : std::domain_error("pole at integer point " + i.get_str()), point(i) {}
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_one(const RatFunc& f) { return f.is_one(); }

// Canonical-grammar parsers. Grammar: integers, `x`, + - * / ^, parentheses.
RatFunc parse_ratfunc(const std::string& text);
UniPoly parse_unipoly(const std::string& text);  // ratfunc with denominator 1

}  // namespace galois
