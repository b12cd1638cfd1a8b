#pragma once

#include "galois/scalar_op.hpp"

namespace galois {

// Y-monomials of total degree <= d in a fixed deterministic enumeration
// (ascending grevlex); index 0 is the constant monomial.
std::vector<Monomial> degree_monomials(const DifferenceSystem& S, int d);

// Transition of the monomial space under sigma: column j holds the
// coordinates of sigma(Y^{m_j}) = (A Y)^{m_j} on the monomial list.
MatQx monomial_sigma_matrix(const DifferenceSystem& S, const std::vector<Monomial>& monos);

// Transition of the extended space x^i Y^{m_j} (0 <= i <= ell), index
// j*(ell+1)+i. Combines the monomial transition with the binomial expansion
// of (x+1)^i.
MatQx extended_sigma_matrix(const DifferenceSystem& S, const std::vector<Monomial>& monos,
                            int ell);

// A nonzero step-1 operator annihilating every sequence m^i Z_m^{m_j} for
// 0 <= i <= ell and |m_j| <= d, found as the first linear dependence among
// the iterated transition products.
ScalarOperator monomial_annihilator(const DifferenceSystem& S, int d, int ell);

}  // namespace galois
