#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "galois/monomial.hpp"
#include "galois/ratfunc.hpp"

namespace galois {

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static std::string str(const Rational& a) { return a.get_str(); }
    static bool is_negative_constant(const Rational& a) { return sgn(a) < 0; }
    static bool is_display_unit(const Rational& a) { return a == 1; }
    static bool needs_parens(const Rational&) { return false; }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static std::string str(const RatFunc& a) { return a.str(); }
    static bool is_negative_constant(const RatFunc& a) {
        return a.is_constant() && sgn(a.num().constant_term()) < 0;
    }
    static bool is_display_unit(const RatFunc& a) { return a.is_one(); }
    static bool needs_parens(const RatFunc& a) { return !a.is_constant(); }
};

// Multivariate polynomial over a coefficient field K, terms kept sorted in
// descending order of the attached TermOrder.
template <class K>
class MultiPoly {
public:
    using Term = std::pair<Monomial, K>;
    using Traits = FieldTraits<K>;

    MultiPoly() = default;
    MultiPoly(PolyRingPtr ring, TermOrder ord) : ring_(std::move(ring)), ord_(ord) {}
    MultiPoly(PolyRingPtr ring, TermOrder ord, std::vector<Term> terms)
        : ring_(std::move(ring)), ord_(ord), terms_(std::move(terms)) {
        normalize();
    }

    static MultiPoly constant(PolyRingPtr ring, TermOrder ord, const K& c) {
        MultiPoly p(std::move(ring), ord);
        if (!Traits::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
        return p;
    }
    static MultiPoly variable(PolyRingPtr ring, TermOrder ord, int v) {
        MultiPoly p(std::move(ring), ord);
        p.terms_.push_back({Monomial::var(v), Traits::one()});
        return p;
    }
    static MultiPoly from_monomial(PolyRingPtr ring, TermOrder ord, const Monomial& m,
                                   const K& c = Traits::one()) {
        MultiPoly p(std::move(ring), ord);
        if (!Traits::is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const PolyRingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
        return terms_.front().first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.front().second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    int degree_in_var(int v) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree_of(v));
        return d;
    }

    K coeff_of(const Monomial& m) const {
        for (auto& [mm, c] : terms_)
            if (mm == m) return c;
        return Traits::zero();
    }

    bool uses_var(int v) const {
        for (auto& [m, c] : terms_)
            if (m.degree_of(v) > 0) return true;
        return false;
    }

    MultiPoly with_order(TermOrder ord) const {
        if (ord.equal_order(ord_)) return *this;
        MultiPoly p(ring_, ord, terms_);
        return p;
    }

    MultiPoly operator-() const {
        MultiPoly p = *this;
        for (auto& [m, c] : p.terms_) c = K{} - c;
        return p;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(ring_, ord_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() ||
                (i < terms_.size() && ord_.compare(terms_[i].first, o.terms_[j].first) > 0)) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() ||
                       ord_.compare(o.terms_[j].first, terms_[i].first) > 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                K c = terms_[i].second + o.terms_[j].second;
                if (!Traits::is_zero(c)) r.terms_.push_back({terms_[i].first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(ring_, ord_);
        for (auto& [m, c] : terms_) {
            MultiPoly part(ring_, ord_);
            part.terms_.reserve(o.terms_.size());
            for (auto& [om, oc] : o.terms_) {
                K p = c * oc;
                if (!Traits::is_zero(p)) part.terms_.push_back({m * om, p});
            }
            part.normalize();
            r = r + part;
        }
        return r;
    }

    MultiPoly scaled(const K& c) const {
        MultiPoly p(ring_, ord_);
        if (Traits::is_zero(c)) return p;
        p.terms_ = terms_;
        for (auto& [m, cc] : p.terms_) cc = cc * c;
        return p;
    }

    MultiPoly times_monomial(const Monomial& m, const K& c) const {
        MultiPoly p(ring_, ord_);
        if (Traits::is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (auto& [mm, cc] : terms_) p.terms_.push_back({mm * m, cc * c});
        return p;  // multiplying by a monomial preserves the term order
    }

    MultiPoly monic() const {
        if (is_zero()) return *this;
        K inv = Traits::one() / leading_coeff();
        return scaled(inv);
    }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first ||
                !Traits::is_zero(terms_[i].second - o.terms_[i].second))
                return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitute each variable by the given polynomial (identity when the map
    // entry for a variable is empty). All images must share ring and order.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        MultiPoly r(images.empty() ? ring_ : images[0].ring(),
                    images.empty() ? ord_ : images[0].order());
        for (auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(r.ring_, r.ord_, c);
            for (auto& [v, e] : m.powers()) {
                const MultiPoly& img = images.at(v);
                for (int k = 0; k < e; ++k) t = t * img;
            }
            r = r + t;
        }
        return r;
    }

    // Apply a function to every coefficient (e.g. a shift of Q(x) elements).
    MultiPoly map_coeffs(const std::function<K(const K&)>& f) const {
        MultiPoly r(ring_, ord_);
        for (auto& [m, c] : terms_) {
            K nc = f(c);
            if (!Traits::is_zero(nc)) r.terms_.push_back({m, nc});
        }
        r.normalize();
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            K a = c;
            bool neg = Traits::is_negative_constant(a);
            if (first) {
                if (neg) {
                    os << "-";
                    a = K{} - a;
                }
                first = false;
            } else {
                os << (neg ? " - " : " + ");
                if (neg) a = K{} - a;
            }
            bool unit = Traits::is_display_unit(a);
            if (m.is_one()) {
                if (Traits::needs_parens(a))
                    os << "(" << Traits::str(a) << ")";
                else
                    os << Traits::str(a);
            } else {
                if (!unit) {
                    if (Traits::needs_parens(a))
                        os << "(" << Traits::str(a) << ")*";
                    else
                        os << Traits::str(a) << "*";
                }
                os << monomial_str(m, *ring_);
            }
        }
        return os.str();
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (ring_.get() != o.ring_.get() || !ord_.equal_order(o.ord_))
            throw std::invalid_argument("polynomial ring/order mismatch");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return ord_.compare(a.first, b.first) > 0;
        });
        size_t w = 0;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (w > 0 && terms_[w - 1].first == terms_[i].first) {
                terms_[w - 1].second = terms_[w - 1].second + terms_[i].second;
            } else {
                terms_[w++] = terms_[i];
            }
        }
        terms_.resize(w);
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return Traits::is_zero(t.second); }),
                     terms_.end());
    }

    PolyRingPtr ring_;
    TermOrder ord_;
    std::vector<Term> terms_;
};

using PolyQ = MultiPoly<Rational>;
using PolyQx = MultiPoly<RatFunc>;

// Map a polynomial into a ring that contains the source variables as a prefix.
template <class K>
MultiPoly<K> lift_to_ring(const MultiPoly<K>& p, const PolyRingPtr& big, TermOrder ord) {
    std::vector<typename MultiPoly<K>::Term> terms(p.terms().begin(), p.terms().end());
    return MultiPoly<K>(big, ord, std::move(terms));
}

// Canonical comparison used for sorting generator lists and ideals: larger
// leading monomial first, then recursively on the remaining terms, then
// coefficient text as a final tie-break.
template <class K>
int canonical_poly_cmp(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = a.order().compare(ta[i].first, tb[i].first);
        if (c != 0) return -c;  // larger monomial sorts first
        std::string ca = FieldTraits<K>::str(ta[i].second);
        std::string cb = FieldTraits<K>::str(tb[i].second);
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

PolyQx parse_poly(const std::string& text, const PolyRingPtr& ring,
                  TermOrder ord = TermOrder::grevlex());

// Parse a polynomial whose coefficients must be constants (no x), e.g. for
// stabilizer ideals over Q[g].
PolyQ parse_poly_q(const std::string& text, const PolyRingPtr& ring,
                   TermOrder ord = TermOrder::grevlex());

PolyQ to_rational_poly(const PolyQx& p);     // throws if any coefficient involves x
PolyQx to_ratfunc_poly(const PolyQ& p, TermOrder ord);

}  // namespace galois
