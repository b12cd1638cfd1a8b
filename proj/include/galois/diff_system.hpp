#pragma once

#include "galois/matrix.hpp"
#include "galois/multipoly.hpp"

namespace galois {

// The system sigma(Y) = A Y with A invertible over Q(x). sigma(x) = x + 1 and
// sigma(y_ij) = sum_k A_ik y_kj.
class DifferenceSystem {
public:
    DifferenceSystem(int n, MatQx A);

    int n() const { return n_; }
    const MatQx& A() const { return A_; }
    const RatFunc& det() const { return det_; }
    const PolyRingPtr& y_ring() const { return ring_; }

    // A_delta = sigma^{delta-1}(A) ... sigma(A) A
    MatQx power_matrix(long delta) const;

    // A with entries evaluated at the integer point i.
    MatQ eval_at(const Int& i) const;

    bool is_constant() const;

private:
    int n_;
    MatQx A_;
    RatFunc det_;
    PolyRingPtr ring_;
};

// Z_rho, Z_rho+1, ... with Z_{i+1} = A(i) Z_i, all invertible.
struct GermSequence {
    long rho = 0;
    std::vector<MatQ> terms;

    const MatQ& at_index(long i) const { return terms.at(i - rho); }
    long last_index() const { return rho + static_cast<long>(terms.size()) - 1; }
};

// Least rho >= 0 such that for all i >= rho no entry of A has a pole at i and
// det(A(i)) != 0.
long choose_rho(const DifferenceSystem& S);

// First `count` germ terms starting at rho (Z_rho defaults to the identity).
GermSequence germ_terms(const DifferenceSystem& S, long rho, int count);
GermSequence germ_terms(const DifferenceSystem& S, long rho, int count, const MatQ& z_rho);
// Extend an existing germ sequence in place to `count` terms.
void extend_germ(const DifferenceSystem& S, GermSequence& germ, int count);

// sigma^delta applied to P in Q(x)[Y]: coefficients shifted by delta,
// variables substituted through A_delta.
PolyQx sigma_poly(const PolyQx& P, const DifferenceSystem& S, long delta);

// r-th exterior power system of dimension C(n, r): entries are the r x r
// minors of A with row/column subsets in lexicographic order.
DifferenceSystem exterior_power(const DifferenceSystem& S, int r);

// Value of a monomial in the Y variables at a rational matrix point.
Rational eval_monomial(const Monomial& m, const MatQ& Z, int n);

// Helper shared with the CLI: read a difference system from matrix entry text.
DifferenceSystem system_from_strings(int n, const std::vector<std::vector<std::string>>& entries);

}  // namespace galois
