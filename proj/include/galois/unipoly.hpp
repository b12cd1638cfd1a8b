#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois/rational.hpp"

namespace galois {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (!galois::is_zero(c)) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }
    static UniPoly x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UniPoly monomial(const Rational& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && galois::is_one(coeffs_[0]); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    const Rational& constant_term() const;
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Euclidean division; denominator-free callers must check rem themselves.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    UniPoly operator/(const UniPoly& o) const;  // exact; throws if remainder nonzero
    UniPoly operator%(const UniPoly& o) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;

    // p(x + m)
    UniPoly shift(long m) const;
    // p(c*x) for scaling tricks
    UniPoly compose_linear(const Rational& scale) const;

    Rational eval(const Rational& v) const;

    // Content c > 0 such that p / c has coprime integer coefficients with
    // positive leading coefficient... sign carried so p = sign_content * primitive.
    Rational signed_content() const;
    UniPoly primitive_part() const;  // p / signed_content(); integer coprime coeffs, lc > 0

    std::string str() const;  // canonical text, descending powers, variable "x"
    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
UniPoly lcm(const UniPoly& a, const UniPoly& b);

// Yun squarefree decomposition: p = unit * prod f_i^i with f_i squarefree,
// pairwise coprime, monic.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

struct UniFactorization {
    Rational unit;                                // nonzero
    std::vector<std::pair<UniPoly, int>> factors; // monic irreducible, exponent > 0; sorted
};

// Exact factorization over Q: squarefree split, rational-root extraction, then
// Kronecker interpolation for what remains. Throws std::domain_error on zero.
UniFactorization factor(const UniPoly& p);

// Expand a factorization back into a polynomial (test helper and invariants).
UniPoly expand(const UniFactorization& f);

std::set<Int> integer_roots(const UniPoly& p);
std::vector<Rational> rational_roots(const UniPoly& p);

// All monic divisors of p assembled from its irreducible factorization
// (includes 1 and the monic of p itself). Exponentially many; desk scale only.
std::vector<UniPoly> monic_divisors(const UniPoly& p);

// If q(x) == p(x + j) for an integer j, return j. Both inputs monic, same degree.
std::optional<Int> shift_offset(const UniPoly& p, const UniPoly& q);

}  // namespace galois
