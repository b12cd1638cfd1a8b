#include "galois/annihilator.hpp"

#include <map>

#include "galois/groebner.hpp"

namespace galois {

std::vector<Monomial> degree_monomials(const DifferenceSystem& S, int d) {
    return monomials_up_to_degree(S.y_ring(), d);
}

MatQx monomial_sigma_matrix(const DifferenceSystem& S, const std::vector<Monomial>& monos) {
    int n = S.n();
    const PolyRingPtr& ring = S.y_ring();
    TermOrder ord = TermOrder::grevlex();
    std::map<std::string, int> index;
    for (size_t j = 0; j < monos.size(); ++j) index[monomial_str(monos[j], *ring)] = static_cast<int>(j);

    // images of the variables under sigma (no coefficient shift needed here:
    // transition matrices are evaluated pointwise on the germ)
    std::vector<PolyQx> images;
    images.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyQx img(ring, ord);
            for (int k = 0; k < n; ++k) {
                if (S.A()(i, k).is_zero()) continue;
                img = img + PolyQx::from_monomial(ring, ord, Monomial::var(k * n + j), S.A()(i, k));
            }
            images.push_back(img);
        }

    int D = static_cast<int>(monos.size());
    MatQx T(D, D);
    for (int j = 0; j < D; ++j) {
        PolyQx img = PolyQx::from_monomial(ring, ord, monos[j]).substitute(images);
        for (auto& [m, c] : img.terms()) {
            auto it = index.find(monomial_str(m, *ring));
            if (it == index.end())
                throw std::logic_error("monomial image escaped the degree slice");
            T(it->second, j) = c;
        }
    }
    return T;
}

MatQx extended_sigma_matrix(const DifferenceSystem& S, const std::vector<Monomial>& monos,
                            int ell) {
    MatQx T = monomial_sigma_matrix(S, monos);
    if (ell == 0) return T;
    int N1 = T.rows();
    int W = ell + 1;
    MatQx full(N1 * W, N1 * W);
    // (x+1)^i = sum_t C(i, t) x^t
    std::vector<std::vector<Rational>> binom(W, std::vector<Rational>(W, Rational(0)));
    for (int i = 0; i < W; ++i) {
        binom[i][0] = Rational(1);
        for (int t = 1; t <= i; ++t)
            binom[i][t] = Rational(binomial(Int(i), static_cast<unsigned long>(t)));
    }
    for (int s = 0; s < N1; ++s)
        for (int j = 0; j < N1; ++j) {
            if (T(s, j).is_zero()) continue;
            for (int i = 0; i < W; ++i)
                for (int t = 0; t <= i; ++t)
                    full(s * W + t, j * W + i) = T(s, j) * RatFunc(binom[i][t]);
        }
    return full;
}

ScalarOperator monomial_annihilator(const DifferenceSystem& S, int d, int ell) {
    if (d < 1 || ell < 0) throw std::invalid_argument("monomial_annihilator: bad degree bounds");
    std::vector<Monomial> monos = degree_monomials(S, d);
    MatQx T = extended_sigma_matrix(S, monos, ell);
    int D = T.rows();
    // iterate P_t(x) = P_{t-1}(x+1) * T(x); find the first dependence of the
    // flattened products
    DependenceFinder finder(D * D);
    MatQx P = MatQx::identity(D);
    auto flatten = [&](const MatQx& m) {
        std::vector<RatFunc> row;
        row.reserve(D * D);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) row.push_back(m(i, j));
        return row;
    };
    std::vector<RatFunc> dep = finder.add_row(flatten(P));
    long cap = static_cast<long>(D) * D + 1;
    for (long t = 1; t <= cap && dep.empty(); ++t) {
        MatQx shifted(D, D);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                shifted(i, j) = P(i, j).is_zero() ? RatFunc() : P(i, j).shift(1);
        P = shifted * T;
        dep = finder.add_row(flatten(P));
    }
    if (dep.empty()) throw std::logic_error("no dependence found below the theoretical cap");
    return make_operator(1, std::move(dep));
}

}  // namespace galois
