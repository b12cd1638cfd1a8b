#include "galois/diff_system.hpp"

namespace galois {

DifferenceSystem::DifferenceSystem(int n, MatQx A) : n_(n), A_(std::move(A)) {
    if (A_.rows() != n || A_.cols() != n)
        throw std::invalid_argument("system matrix has wrong shape");
    det_ = A_.det();
    if (det_.is_zero()) throw std::domain_error("system matrix is singular over Q(x)");
    ring_ = matrix_ring(n);
}

MatQx DifferenceSystem::power_matrix(long delta) const {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    MatQx r = A_;
    MatQx shifted = A_;
    for (long t = 1; t < delta; ++t) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) shifted(i, j) = A_(i, j).shift(t);
        r = shifted * r;
    }
    return r;
}

MatQ DifferenceSystem::eval_at(const Int& i) const {
    MatQ m(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(r, c) = A_(r, c).eval_at_integer(i);
    return m;
}

bool DifferenceSystem::is_constant() const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (!A_(r, c).is_constant()) return false;
    return true;
}

long choose_rho(const DifferenceSystem& S) {
    long rho = 0;
    auto bump = [&](const UniPoly& p) {
        if (p.is_constant()) return;
        for (const Int& r : integer_roots(p)) {
            if (r >= 0) rho = std::max(rho, r.get_si() + 1);
        }
    };
    for (int i = 0; i < S.n(); ++i)
        for (int j = 0; j < S.n(); ++j) bump(S.A()(i, j).den());
    bump(S.det().num());
    bump(S.det().den());
    return rho;
}

GermSequence germ_terms(const DifferenceSystem& S, long rho, int count) {
    return germ_terms(S, rho, count, MatQ::identity(S.n()));
}

GermSequence germ_terms(const DifferenceSystem& S, long rho, int count, const MatQ& z_rho) {
    if (rho < choose_rho(S))
        throw std::invalid_argument("rho below the pole/singularity threshold");
    if (MatQ(z_rho).det() == 0) throw std::invalid_argument("initial germ matrix is singular");
    GermSequence g;
    g.rho = rho;
    g.terms.push_back(z_rho);
    extend_germ(S, g, count);
    return g;
}

void extend_germ(const DifferenceSystem& S, GermSequence& germ, int count) {
    while (static_cast<int>(germ.terms.size()) < count) {
        long i = germ.last_index();
        MatQ next = S.eval_at(Int(i)) * germ.terms.back();
        if (next.det() == 0)
            throw std::logic_error("germ term became singular; rho precondition violated");
        germ.terms.push_back(std::move(next));
    }
}

PolyQx sigma_poly(const PolyQx& P, const DifferenceSystem& S, long delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    const PolyRingPtr& ring = P.ring();
    int n = S.n();
    if (ring->nvars() != n * n)
        throw std::invalid_argument("sigma_poly expects a polynomial over the Y matrix ring");
    MatQx Ad = S.power_matrix(delta);
    TermOrder ord = P.order();
    std::vector<PolyQx> images;
    images.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyQx img(ring, ord);
            for (int k = 0; k < n; ++k) {
                if (Ad(i, k).is_zero()) continue;
                img = img + PolyQx::from_monomial(ring, ord, Monomial::var(k * n + j), Ad(i, k));
            }
            images.push_back(img);
        }
    PolyQx shifted = P.map_coeffs([&](const RatFunc& c) { return c.shift(delta); });
    return shifted.substitute(images);
}

namespace {
void subsets_of_size(int n, int r, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}
}  // namespace

DifferenceSystem exterior_power(const DifferenceSystem& S, int r) {
    if (r < 1 || r > S.n()) throw std::invalid_argument("exterior power index out of range");
    std::vector<std::vector<int>> subsets;
    subsets_of_size(S.n(), r, subsets);
    int m = static_cast<int>(subsets.size());
    MatQx E(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) E(i, j) = minor_det(S.A(), subsets[i], subsets[j]);
    return DifferenceSystem(m, std::move(E));
}

Rational eval_monomial(const Monomial& m, const MatQ& Z, int n) {
    Rational v(1);
    for (auto& [var, e] : m.powers()) {
        int i = var / n, j = var % n;
        Rational base = Z(i, j);
        for (int k = 0; k < e; ++k) v *= base;
    }
    return v;
}

DifferenceSystem system_from_strings(int n, const std::vector<std::vector<std::string>>& entries) {
    MatQx A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = parse_ratfunc(entries.at(i).at(j));
    return DifferenceSystem(n, std::move(A));
}

}  // namespace galois
