#include "galois/scalar_op.hpp"

#include <sstream>

namespace galois {

std::string ScalarOperator::str() const {
    std::ostringstream os;
    os << "step " << step << ": ";
    bool first = true;
    for (int t = order(); t >= 0; --t) {
        if (coeffs[t].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[t].str() << ")";
        if (t > 0) os << "*S^" << t;
    }
    return os.str();
}

ScalarOperator make_operator(long step, std::vector<RatFunc> dependence) {
    while (!dependence.empty() && dependence.back().is_zero()) dependence.pop_back();
    if (dependence.empty()) throw std::logic_error("zero dependence vector");
    size_t lead_zeros = 0;
    while (dependence[lead_zeros].is_zero()) ++lead_zeros;
    if (lead_zeros > 0) {
        // shift the whole identity down by lead_zeros steps
        std::vector<RatFunc> shifted;
        for (size_t t = lead_zeros; t < dependence.size(); ++t)
            shifted.push_back(dependence[t].shift(-static_cast<long>(lead_zeros) * step));
        dependence = std::move(shifted);
    }
    UniPoly den_lcm = UniPoly::one();
    for (const auto& f : dependence)
        if (!f.is_zero()) den_lcm = lcm(den_lcm, f.den());
    std::vector<UniPoly> coeffs;
    for (const auto& f : dependence) coeffs.push_back(f.num() * (den_lcm / f.den()));
    // divide by the common polynomial factor, then by the rational content
    UniPoly g;
    for (const auto& c : coeffs)
        if (!c.is_zero()) g = g.is_zero() ? c : gcd(g, c);
    for (auto& c : coeffs)
        if (!c.is_zero()) c = c / g;
    Int num_gcd = 0, den_lcm2 = 1;
    for (const auto& c : coeffs)
        for (const auto& q : c.coeffs()) {
            if (sgn(q) == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm2.get_mpz_t(), den_lcm2.get_mpz_t(), q.get_den_mpz_t());
        }
    Rational content = make_rational(num_gcd, den_lcm2);
    if (sgn(coeffs.back().leading()) < 0) content = -content;
    for (auto& c : coeffs) c = c * (Rational(1) / content);
    ScalarOperator op;
    op.step = step;
    op.coeffs = std::move(coeffs);
    return op;
}

CyclicScalarization cyclic_vector_scalarize(const MatQx& M, long delta) {
    int D = M.rows();
    if (M.cols() != D) throw std::invalid_argument("cyclic vector needs a square matrix");
    auto candidate = [&](int attempt) {
        std::vector<RatFunc> e(D, RatFunc(Rational(0)));
        if (attempt < D) {
            e[attempt] = RatFunc(Rational(1));
        } else if (attempt == D) {
            for (auto& v : e) v = RatFunc(Rational(1));
        } else {
            int s = attempt - D;  // powers of x with stride s
            for (int i = 0; i < D; ++i) e[i] = RatFunc(UniPoly::x().pow((i * s) % (D + 1)));
        }
        return e;
    };
    for (int attempt = 0; attempt < D + 8; ++attempt) {
        std::vector<RatFunc> e = candidate(attempt);
        DependenceFinder finder(D);
        std::vector<std::vector<RatFunc>> iterates{e};
        std::vector<RatFunc> dep = finder.add_row(e);
        while (dep.empty()) {
            const auto& prev = iterates.back();
            std::vector<RatFunc> next(D, RatFunc(Rational(0)));
            for (int j = 0; j < D; ++j) {
                RatFunc acc(Rational(0));
                for (int k = 0; k < D; ++k) {
                    if (prev[k].is_zero() || M(k, j).is_zero()) continue;
                    acc += prev[k].shift(delta) * M(k, j);
                }
                next[j] = acc;
            }
            iterates.push_back(next);
            dep = finder.add_row(std::move(next));
        }
        if (static_cast<int>(iterates.size()) - 1 < D) continue;  // not cyclic, next candidate
        MatQx gauge(D, D);
        for (int t = 0; t < D; ++t)
            for (int j = 0; j < D; ++j) gauge(t, j) = iterates[t][j];
        ScalarOperator op = make_operator(delta, std::move(dep));
        if (op.order() != D) throw std::logic_error("cyclic dependence with degenerate order");
        return {std::move(op), std::move(gauge)};
    }
    throw std::logic_error("cyclic covector schedule exhausted");
}

}  // namespace galois
