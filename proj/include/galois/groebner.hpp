#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>

#include "galois/multipoly.hpp"

namespace galois {

// One-step reducibility: divide p by the basis until no leading term of any
// basis element divides any term of the remainder (full normal form).
template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& basis) {
    using Traits = FieldTraits<K>;
    MultiPoly<K> rem(p.ring(), p.order());
    MultiPoly<K> work = p;
    while (!work.is_zero()) {
        const Monomial& m = work.leading_monomial();
        const K& c = work.leading_coeff();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(m)) {
                Monomial q = m / g.leading_monomial();
                K f = c / g.leading_coeff();
                work = work - g.times_monomial(q, f);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move leading term to remainder
            std::vector<typename MultiPoly<K>::Term> t{{m, c}};
            MultiPoly<K> lead(p.ring(), p.order(), std::move(t));
            rem = rem + lead;
            work = work - lead;
        }
    }
    return rem;
}

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    using Traits = FieldTraits<K>;
    K one = Traits::one();
    MultiPoly<K> a = f.times_monomial(l / f.leading_monomial(), one / f.leading_coeff());
    MultiPoly<K> b = g.times_monomial(l / g.leading_monomial(), one / g.leading_coeff());
    return a - b;
}

// Buchberger with the normal selection strategy (smallest lcm under the term
// order, deterministic tie-break), coprime-lcm criterion, and full reduction.
// Returns the unique reduced Groebner basis, monic, sorted by leading monomial
// (largest first).
template <class K>
std::vector<MultiPoly<K>> groebner_basis(std::vector<MultiPoly<K>> gens, TermOrder ord) {
    using Poly = MultiPoly<K>;
    std::vector<Poly> basis;
    for (auto& g : gens) {
        Poly h = g.with_order(ord);
        if (!h.is_zero()) basis.push_back(h.monic());
    }
    if (basis.empty()) return basis;

    auto pair_key = [&](size_t i, size_t j) {
        return lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    };
    struct Pair {
        size_t i, j;
        Monomial l;
    };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, pair_key(i, j)});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // normal strategy: minimal lcm under ord; ties by indices for determinism
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            int c = ord.compare(pairs[k].l, pairs[best].l);
            if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                                     (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        const Poly& f = basis[pr.i];
        const Poly& g = basis[pr.j];
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;  // Buchberger 1
        // chain criterion: some k with LM(k) | lcm and both pairs already handled
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.l)) continue;
            auto handled = [&](size_t a, size_t b) {
                if (a > b) std::swap(a, b);
                for (const auto& q : pairs)
                    if (q.i == a && q.j == b) return false;
                return true;
            };
            if (handled(pr.i, k) && handled(k, pr.j)) chained = true;
        }
        if (chained) continue;

        Poly s = normal_form(s_polynomial(f, g), basis);
        if (!s.is_zero()) {
            basis.push_back(s.monic());
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimize: drop elements whose leading monomial is divisible by another's
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial())
                    redundant = j < i;  // keep first among equals
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

// Finitely generated ideal with a lazily cached reduced Groebner basis.
template <class K>
class PolyIdeal {
public:
    PolyIdeal() = default;
    PolyIdeal(PolyRingPtr ring, std::vector<MultiPoly<K>> gens,
              TermOrder ord = TermOrder::grevlex())
        : ring_(std::move(ring)), ord_(ord), gens_(std::move(gens)) {}

    const PolyRingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<MultiPoly<K>>& generators() const { return gens_; }
    bool has_cached_basis() const { return static_cast<bool>(basis_); }

    const std::vector<MultiPoly<K>>& basis() const {
        if (!basis_)
            basis_ = std::make_shared<std::vector<MultiPoly<K>>>(groebner_basis(gens_, ord_));
        return *basis_;
    }

    MultiPoly<K> reduce(const MultiPoly<K>& p) const {
        return normal_form(p.with_order(ord_), basis());
    }

    bool contains(const MultiPoly<K>& p) const { return reduce(p).is_zero(); }

    bool is_whole_ring() const {
        const auto& b = basis();
        return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
    }

    bool is_zero_ideal() const { return basis().empty(); }

    std::string str() const {
        std::ostringstream os;
        os << "<";
        const auto& b = basis();
        if (b.empty()) os << "0";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ", ";
            os << b[i].str();
        }
        os << ">";
        return os.str();
    }

private:
    PolyRingPtr ring_;
    TermOrder ord_ = TermOrder::grevlex();
    std::vector<MultiPoly<K>> gens_;
    mutable std::shared_ptr<std::vector<MultiPoly<K>>> basis_;
};

using IdealQ = PolyIdeal<Rational>;
using IdealQx = PolyIdeal<RatFunc>;

template <class K>
bool ideal_contains(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    for (const auto& g : J.generators())
        if (!I.contains(g)) return false;
    return true;
}

template <class K>
bool ideal_equal(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

// Intersection by the auxiliary-variable method: eliminate t from
// t*I + (1-t)*J in the ring extended with t.
template <class K>
PolyIdeal<K> intersect(const PolyIdeal<K>& I, const PolyIdeal<K>& J);

// I ∩ subring without the masked variables (block elimination order).
template <class K>
PolyIdeal<K> eliminate(const PolyIdeal<K>& I, uint64_t var_mask);

// Is p invertible in K[Y, 1/det]/I, i.e. 1 in <I, p, det*z - 1>?
template <class K>
bool is_unit_mod(const PolyIdeal<K>& I, const MultiPoly<K>& p, const MultiPoly<K>& det_poly);

// Monomials of total degree <= d not divisible by any basis leading monomial,
// sorted ascending under the ideal's term order (so the constant 1 is first).
template <class K>
std::vector<Monomial> standard_monomials(const PolyIdeal<K>& I, int d);

// -- implementations ---------------------------------------------------------

template <class K>
PolyIdeal<K> intersect(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    const PolyRingPtr& ring = I.ring();
    PolyRingPtr big = extend_ring(ring, {"@t"});
    int t = big->nvars() - 1;
    TermOrder elim = TermOrder::block_elim(1ull << t);
    std::vector<MultiPoly<K>> gens;
    MultiPoly<K> tv = MultiPoly<K>::variable(big, elim, t);
    MultiPoly<K> one_minus_t =
        MultiPoly<K>::constant(big, elim, FieldTraits<K>::one()) - tv;
    for (const auto& g : I.generators()) gens.push_back(lift_to_ring(g, big, elim) * tv);
    for (const auto& g : J.generators()) gens.push_back(lift_to_ring(g, big, elim) * one_minus_t);
    auto basis = groebner_basis(gens, elim);
    std::vector<MultiPoly<K>> keep;
    for (auto& b : basis) {
        if (!b.uses_var(t)) {
            std::vector<typename MultiPoly<K>::Term> terms(b.terms().begin(), b.terms().end());
            keep.emplace_back(ring, I.order(), std::move(terms));
        }
    }
    return PolyIdeal<K>(ring, std::move(keep), I.order());
}

template <class K>
PolyIdeal<K> eliminate(const PolyIdeal<K>& I, uint64_t var_mask) {
    TermOrder elim = TermOrder::block_elim(var_mask);
    auto basis = groebner_basis(I.generators(), elim);
    std::vector<MultiPoly<K>> keep;
    for (auto& b : basis) {
        bool uses = false;
        for (int v = 0; v < I.ring()->nvars() && !uses; ++v)
            if ((var_mask >> v) & 1u) uses = uses || b.uses_var(v);
        if (!uses) keep.push_back(b.with_order(I.order()));
    }
    return PolyIdeal<K>(I.ring(), std::move(keep), I.order());
}

template <class K>
bool is_unit_mod(const PolyIdeal<K>& I, const MultiPoly<K>& p, const MultiPoly<K>& det_poly) {
    PolyRingPtr big = extend_ring(I.ring(), {"@z"});
    int z = big->nvars() - 1;
    TermOrder ord = TermOrder::grevlex();
    std::vector<MultiPoly<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(lift_to_ring(g, big, ord));
    gens.push_back(lift_to_ring(p, big, ord));
    MultiPoly<K> zz = MultiPoly<K>::variable(big, ord, z);
    gens.push_back(lift_to_ring(det_poly, big, ord) * zz -
                   MultiPoly<K>::constant(big, ord, FieldTraits<K>::one()));
    PolyIdeal<K> ext(big, std::move(gens), ord);
    return ext.is_whole_ring();
}

namespace detail {
inline void enumerate_monomials(int nvars, int max_deg, int from_var, Monomial cur,
                                std::vector<Monomial>& out) {
    out.push_back(cur);
    for (int v = from_var; v < nvars; ++v) {
        if (cur.total_degree() + 1 > max_deg) break;
        enumerate_monomials(nvars, max_deg, v, cur * Monomial::var(v), out);
    }
}
}  // namespace detail

// All monomials of total degree <= d in the given ring, ascending under ord.
inline std::vector<Monomial> monomials_up_to_degree(const PolyRingPtr& ring, int d,
                                                    TermOrder ord = TermOrder::grevlex()) {
    std::vector<Monomial> all;
    detail::enumerate_monomials(ring->nvars(), d, 0, Monomial::one(), all);
    std::sort(all.begin(), all.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
    return all;
}

template <class K>
std::vector<Monomial> standard_monomials(const PolyIdeal<K>& I, int d) {
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_up_to_degree(I.ring(), d, I.order())) {
        bool divisible = false;
        for (const auto& g : I.basis()) {
            if (g.leading_monomial().divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(m);
    }
    return out;
}

// Canonical serialization: generators of the reduced basis, sorted largest
// leading monomial first, one per line.
template <class K>
std::string ideal_canonical_text(const PolyIdeal<K>& I) {
    std::ostringstream os;
    for (const auto& g : I.basis()) os << g.str() << "\n";
    return os.str();
}

template <class K>
int canonical_ideal_cmp(const PolyIdeal<K>& A, const PolyIdeal<K>& B) {
    const auto& a = A.basis();
    const auto& b = B.basis();
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = canonical_poly_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace galois
