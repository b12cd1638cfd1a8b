#include "galois/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace galois {

RationalFactors factor_rational(const Rational& q) {
    if (is_zero(q)) throw std::domain_error("factor_rational: zero input");
    RationalFactors out;
    out.sign = sgn(q) < 0 ? -1 : 1;
    std::map<Int, long> exps;
    auto accumulate = [&](Int n, long mult) {
        if (n < 0) n = -n;
        Int d = 2;
        while (d * d <= n) {
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                exps[d] += mult;
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            }
            d += (d == 2) ? 1 : 2;
        }
        if (n > 1) exps[n] += mult;
    };
    accumulate(q.get_num(), 1);
    accumulate(q.get_den(), -1);
    for (auto& [p, e] : exps)
        if (e != 0) out.prime_powers.emplace_back(p, e);
    return out;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && galois::is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(const Rational& c, int deg) {
    if (galois::is_zero(c)) return UniPoly();
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Rational& UniPoly::constant_term() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.front();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (galois::is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (galois::is_zero(c)) return UniPoly();
    UniPoly r(*this);
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly rem = a;
    if (a.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rational c = rem.leading() / b.leading();
        q[d] = c;
        rem = rem - UniPoly::monomial(c, d) * b;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::operator/(const UniPoly& o) const {
    auto [q, r] = divrem(*this, o);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::operator%(const UniPoly& o) const { return divrem(*this, o).second; }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::one();
    UniPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

UniPoly UniPoly::shift(long m) const {
    if (m == 0 || is_zero()) return *this;
    // Horner: p(x+m) built from highest coefficient down
    UniPoly xm(std::vector<Rational>{Rational(m), Rational(1)});
    UniPoly r;
    for (int i = degree(); i >= 0; --i) r = r * xm + UniPoly(coeffs_[i]);
    return r;
}

UniPoly UniPoly::compose_linear(const Rational& scale) const {
    std::vector<Rational> v = coeffs_;
    Rational s(1);
    for (size_t i = 1; i < v.size(); ++i) {
        s *= scale;
        v[i] *= s;
    }
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& v) const {
    Rational r(0);
    for (int i = degree(); i >= 0; --i) r = r * v + coeffs_[i];
    return r;
}

Rational UniPoly::signed_content() const {
    if (is_zero()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (galois::is_zero(c)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sgn(leading()) < 0) content = -content;
    return content;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / signed_content());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r = u % v;
        u = v;
        v = r;
    }
    return u.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    return ((a * b) / gcd(a, b)).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.is_constant()) return out;
    // Yun's algorithm (characteristic zero)
    UniPoly d = f.derivative();
    UniPoly a = gcd(f, d);
    UniPoly b = f / a;
    UniPoly c = d / a;
    int i = 1;
    while (b.degree() > 0) {
        UniPoly w = c - b.derivative();
        UniPoly g = gcd(b, w);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = w / g;
        ++i;
    }
    return out;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
    std::vector<Rational> roots;
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    if (p.is_constant()) return roots;
    UniPoly q = p.primitive_part();
    // strip x^k
    int low = 0;
    while (galois::is_zero(q.coeff(low))) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> v(q.coeffs().begin() + low, q.coeffs().end());
        q = UniPoly(std::move(v));
    }
    if (q.is_constant()) return roots;
    Int a0 = q.constant_term().get_num();
    Int an = q.leading().get_num();
    if (a0 < 0) a0 = -a0;
    if (an < 0) an = -an;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d) {
            if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                ds.push_back(d);
                Int e = n / d;
                if (e != d) ds.push_back(e);
            }
        }
        return ds;
    };
    for (const Int& num : divisors(a0)) {
        for (const Int& den : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand = make_rational(s * num, den);
                if (galois::is_zero(q.eval(cand))) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::set<Int> integer_roots(const UniPoly& p) {
    std::set<Int> out;
    for (const Rational& r : rational_roots(p))
        if (r.get_den() == 1) out.insert(r.get_num());
    return out;
}

namespace {

// Kronecker interpolation factor search for a primitive squarefree integer
// polynomial with no rational roots and degree >= 4. Returns one nontrivial
// monic-after-normalization factor pair, or nothing if irreducible.
std::optional<UniPoly> kronecker_split(const UniPoly& f) {
    int n = f.degree();
    int half = n / 2;
    // sample points 0, 1, -1, 2, -2, ... with f(pt) != 0
    std::vector<Rational> pts;
    for (long k = 0; static_cast<int>(pts.size()) <= half; ++k) {
        long cand = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        if (!galois::is_zero(f.eval(Rational(cand)))) pts.push_back(Rational(cand));
    }
    auto divisors_signed = [](const Int& n0) {
        Int n = n0 < 0 ? Int(-n0) : n0;
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d) {
            if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                ds.push_back(d);
                ds.push_back(-d);
                Int e = n / d;
                if (e != d) {
                    ds.push_back(e);
                    ds.push_back(-e);
                }
            }
        }
        return ds;
    };
    for (int deg = 1; deg <= half; ++deg) {
        std::vector<std::vector<Int>> choices(deg + 1);
        for (int i = 0; i <= deg; ++i) {
            Rational v = f.eval(pts[i]);
            choices[i] = divisors_signed(v.get_num());  // primitive integer poly: values are integers
        }
        std::vector<size_t> idx(deg + 1, 0);
        while (true) {
            // Lagrange interpolation through (pts[i], choices[i][idx[i]])
            UniPoly g;
            for (int i = 0; i <= deg; ++i) {
                UniPoly basis = UniPoly::one();
                Rational denom(1);
                for (int j = 0; j <= deg; ++j) {
                    if (j == i) continue;
                    basis = basis * UniPoly(std::vector<Rational>{-pts[j], Rational(1)});
                    denom *= pts[i] - pts[j];
                }
                g = g + basis * (Rational(choices[i][idx[i]]) / denom);
            }
            if (g.degree() == deg) {
                auto [q, r] = UniPoly::divrem(f, g);
                if (r.is_zero()) return g;
            }
            int pos = 0;
            while (pos <= deg && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos > deg) break;
        }
    }
    return std::nullopt;
}

void factor_squarefree_monic(const UniPoly& f0, int mult,
                             std::vector<std::pair<UniPoly, int>>& out) {
    UniPoly f = f0;
    // peel rational roots
    for (const Rational& r : rational_roots(f)) {
        UniPoly lin(std::vector<Rational>{-r, Rational(1)});
        while (true) {
            auto [q, rem] = UniPoly::divrem(f, lin);
            if (!rem.is_zero()) break;
            out.emplace_back(lin, mult);
            f = q;
        }
    }
    if (f.degree() <= 0) return;
    if (f.degree() <= 3) {
        // degrees 2, 3 with no rational root are irreducible over Q
        out.emplace_back(f.monic(), mult);
        return;
    }
    UniPoly fi = f.primitive_part();
    auto split = kronecker_split(fi);
    if (!split) {
        out.emplace_back(f.monic(), mult);
        return;
    }
    factor_squarefree_monic(split->monic(), mult, out);
    factor_squarefree_monic((fi / *split).monic(), mult, out);
}

}  // namespace

UniFactorization factor(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
    UniFactorization out;
    out.unit = p.leading();
    if (p.is_constant()) {
        out.unit = p.constant_term();
        return out;
    }
    for (auto& [g, e] : squarefree_decomposition(p)) factor_squarefree_monic(g, e, out.factors);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        }
        return a.second < b.second;
    });
    return out;
}

UniPoly expand(const UniFactorization& f) {
    UniPoly r(f.unit);
    for (const auto& [g, e] : f.factors) r = r * g.pow(e);
    return r;
}

std::vector<UniPoly> monic_divisors(const UniPoly& p) {
    UniFactorization f = factor(p);
    std::vector<UniPoly> out{UniPoly::one()};
    for (const auto& [g, e] : f.factors) {
        std::vector<UniPoly> next;
        UniPoly pw = UniPoly::one();
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : out) next.push_back(d * pw);
            if (k < e) pw = pw * g;
        }
        out = std::move(next);
    }
    return out;
}

std::optional<Int> shift_offset(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != q.degree() || p.degree() < 1) return std::nullopt;
    int d = p.degree();
    // compare x^{d-1} coefficients of monic polynomials: q = p(x+j) forces
    // q_{d-1} = p_{d-1} + d*j
    Rational j = (q.coeff(d - 1) - p.coeff(d - 1)) / Rational(d);
    if (j.get_den() != 1) return std::nullopt;
    if (p.shift(j.get_num().get_si()) == q) return j.get_num();
    return std::nullopt;
}

std::string UniPoly::str() const { return str("x"); }

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (galois::is_zero(c)) continue;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool unit_coeff = galois::is_one(a);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit_coeff) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace galois
