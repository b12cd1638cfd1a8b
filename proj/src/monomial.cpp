#include "galois/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace galois {

Monomial::Monomial(std::vector<std::pair<int, int>> powers) : powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    size_t w = 0;
    for (size_t i = 0; i < powers_.size(); ++i) {
        if (powers_[i].second == 0) continue;
        if (powers_[i].second < 0) throw std::invalid_argument("negative exponent in monomial");
        if (w > 0 && powers_[w - 1].first == powers_[i].first)
            powers_[w - 1].second += powers_[i].second;
        else
            powers_[w++] = powers_[i];
    }
    powers_.resize(w);
}

Monomial Monomial::var(int v, int e) {
    if (e == 0) return Monomial();
    return Monomial({{v, e}});
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : powers_) d += e;
    return d;
}

int Monomial::degree_of(int v) const {
    for (auto& [w, e] : powers_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.powers_.reserve(powers_.size() + o.powers_.size());
    size_t i = 0, j = 0;
    while (i < powers_.size() || j < o.powers_.size()) {
        if (j == o.powers_.size() || (i < powers_.size() && powers_[i].first < o.powers_[j].first))
            r.powers_.push_back(powers_[i++]);
        else if (i == powers_.size() || o.powers_[j].first < powers_[i].first)
            r.powers_.push_back(o.powers_[j++]);
        else {
            r.powers_.emplace_back(powers_[i].first, powers_[i].second + o.powers_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : powers_) {
        while (j < o.powers_.size() && o.powers_[j].first < v) ++j;
        if (j == o.powers_.size() || o.powers_[j].first != v || o.powers_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : powers_) {
        int sub = 0;
        while (j < o.powers_.size() && o.powers_[j].first < v) ++j;
        if (j < o.powers_.size() && o.powers_[j].first == v) sub = o.powers_[j].second;
        int ne = e - sub;
        if (ne < 0) throw std::domain_error("inexact monomial division");
        if (ne > 0) r.powers_.emplace_back(v, ne);
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.powers_.size() || j < b.powers_.size()) {
        if (j == b.powers_.size() ||
            (i < a.powers_.size() && a.powers_[i].first < b.powers_[j].first))
            r.powers_.push_back(a.powers_[i++]);
        else if (i == a.powers_.size() || b.powers_[j].first < a.powers_[i].first)
            r.powers_.push_back(b.powers_[j++]);
        else {
            r.powers_.emplace_back(a.powers_[i].first,
                                   std::max(a.powers_[i].second, b.powers_[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : a.powers_) {
        while (j < b.powers_.size() && b.powers_[j].first < v) ++j;
        if (j < b.powers_.size() && b.powers_[j].first == v)
            r.powers_.emplace_back(v, std::min(e, b.powers_[j].second));
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : powers_) {
        while (j < o.powers_.size() && o.powers_[j].first < v) ++j;
        if (j < o.powers_.size() && o.powers_[j].first == v) return false;
    }
    return true;
}

namespace {

// grevlex restricted to variables selected by (mask, in_mask); full order when
// mask covers everything. var 0 is the largest variable.
int grevlex_cmp(const Monomial& a, const Monomial& b, uint64_t mask, bool in_mask, bool use_mask) {
    auto selected = [&](int v) {
        if (!use_mask) return true;
        bool hit = v < 64 && ((mask >> v) & 1u);
        return hit == in_mask;
    };
    int da = 0, db = 0;
    for (auto& [v, e] : a.powers())
        if (selected(v)) da += e;
    for (auto& [v, e] : b.powers())
        if (selected(v)) db += e;
    if (da != db) return da < db ? -1 : 1;
    // tie: compare from the last (smallest) variable backwards; smaller
    // exponent at the first difference wins
    auto ia = a.powers().rbegin();
    auto ib = b.powers().rbegin();
    while (true) {
        while (ia != a.powers().rend() && !selected(ia->first)) ++ia;
        while (ib != b.powers().rend() && !selected(ib->first)) ++ib;
        if (ia == a.powers().rend() && ib == b.powers().rend()) return 0;
        if (ia == a.powers().rend()) return 1;   // a has no small vars left, b does -> a larger
        if (ib == b.powers().rend()) return -1;
        if (ia->first != ib->first) {
            // the one whose smallest remaining variable is smaller has positive
            // exponent there -> it is grevlex-smaller... larger? For grevlex,
            // exponent on a smaller variable counts against the monomial.
            return ia->first > ib->first ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    auto ia = a.powers().begin();
    auto ib = b.powers().begin();
    while (ia != a.powers().end() || ib != b.powers().end()) {
        if (ia == a.powers().end()) return -1;
        if (ib == b.powers().end()) return 1;
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::Grevlex:
            return grevlex_cmp(a, b, 0, false, false);
        case Kind::Block: {
            int c = grevlex_cmp(a, b, block_mask, true, true);
            if (c != 0) return c;
            return grevlex_cmp(a, b, block_mask, false, true);
        }
    }
    return 0;
}

std::string TermOrder::name() const {
    switch (kind) {
        case Kind::Lex:
            return "lex";
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Block:
            return "block";
    }
    return "?";
}

int PolyRing::index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[i] == name) return i;
    return -1;
}

PolyRingPtr make_ring(std::vector<std::string> vars) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    return r;
}

PolyRingPtr matrix_ring(int n, const std::string& prefix) {
    if (n < 1 || n > 9) throw std::invalid_argument("matrix ring supports 1 <= n <= 9");
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(prefix + std::to_string(i) + std::to_string(j));
    return make_ring(std::move(vars));
}

PolyRingPtr extend_ring(const PolyRingPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = base->vars;
    for (const auto& v : extra) vars.push_back(v);
    return make_ring(std::move(vars));
}

std::string monomial_str(const Monomial& m, const PolyRing& ring) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : m.powers()) {
        if (!first) os << "*";
        first = false;
        os << ring.vars.at(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace galois
