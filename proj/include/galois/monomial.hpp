#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace galois {

// Sparse exponent vector; pairs (variable index, exponent) sorted by variable,
// no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> powers);
    static Monomial one() { return Monomial(); }
    static Monomial var(int v, int e = 1);

    bool is_one() const { return powers_.empty(); }
    int total_degree() const;
    int degree_of(int v) const;
    int max_var() const { return powers_.empty() ? -1 : powers_.back().first; }
    const std::vector<std::pair<int, int>>& powers() const { return powers_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial operator/(const Monomial& o) const;    // exact; caller checks divisibility
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return powers_ == o.powers_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::pair<int, int>> powers_;
};

// Total order on monomials compatible with multiplication. Convention:
// variable 0 is the largest variable.
struct TermOrder {
    enum class Kind { Lex, Grevlex, Block };
    Kind kind = Kind::Grevlex;
    // Block: variables with mask bit set form the block compared first
    // (by grevlex), ties broken by grevlex on the remaining variables.
    uint64_t block_mask = 0;

    static TermOrder lex() { return {Kind::Lex, 0}; }
    static TermOrder grevlex() { return {Kind::Grevlex, 0}; }
    static TermOrder block_elim(uint64_t mask) { return {Kind::Block, mask}; }

    // <0 if a < b, 0 if equal, >0 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool equal_order(const TermOrder& o) const {
        return kind == o.kind && block_mask == o.block_mask;
    }
    std::string name() const;
};

// Variable-name table shared by all polynomials of one ring.
struct PolyRing {
    std::vector<std::string> vars;
    int nvars() const { return static_cast<int>(vars.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
};
using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(std::vector<std::string> vars);
// Ring of n x n matrix entries named y11..ynn (requires n <= 9).
PolyRingPtr matrix_ring(int n, const std::string& prefix = "y");
// Same variables plus extras appended at the end.
PolyRingPtr extend_ring(const PolyRingPtr& base, const std::vector<std::string>& extra);

std::string monomial_str(const Monomial& m, const PolyRing& ring);

}  // namespace galois
