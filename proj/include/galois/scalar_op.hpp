#pragma once

#include "galois/diff_system.hpp"

namespace galois {

// L = sum_t a_t(m) y_{m + t*step}; trailing and leading coefficients nonzero.
struct ScalarOperator {
    long step = 1;
    std::vector<UniPoly> coeffs;  // a_0 .. a_l

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const UniPoly& trailing() const { return coeffs.front(); }
    const UniPoly& leading() const { return coeffs.back(); }

    // Exact value of L applied to a sequence at position m; `values(i)` must
    // return the sequence member at index i.
    template <class F>
    Rational apply_at(const F& values, long m) const {
        Rational acc(0);
        for (size_t t = 0; t < coeffs.size(); ++t)
            acc += coeffs[t].eval(Rational(m)) * values(m + static_cast<long>(t) * step);
        return acc;
    }

    std::string str() const;
};

// Normalize a dependence a_0..a_l over Q(x): clear denominators, divide by the
// polynomial content, drop leading zeros; if trailing coefficients vanish the
// operator is shifted down (a_t <- a_{t+1}(x - step)).
ScalarOperator make_operator(long step, std::vector<RatFunc> dependence);

struct CyclicScalarization {
    ScalarOperator op;
    MatQx gauge;  // rows e_0 .. e_{D-1}: u(x + t*step) = e_t(x) . c(x)
};

// Scalarize sigma^delta(Y) = M Y by a cyclic covector chosen from a fixed
// deterministic schedule. The operator has order exactly dim(M) and the gauge
// matrix is invertible.
CyclicScalarization cyclic_vector_scalarize(const MatQx& M, long delta);

}  // namespace galois
