#include "galois/multipoly.hpp"

#include <cctype>

namespace galois {

namespace {

class MultiParser {
public:
    MultiParser(const std::string& s, PolyRingPtr ring, TermOrder ord)
        : s_(s), ring_(std::move(ring)), ord_(ord) {}

    PolyQx parse() {
        PolyQx r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg +
                                    " in \"" + s_ + "\"");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    PolyQx expr() {
        PolyQx r = eat('-') ? -term() : (eat('+'), term());
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    PolyQx term() {
        PolyQx r = factor();
        while (true) {
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                PolyQx d = factor();
                if (!d.is_constant()) fail("division by non-coefficient polynomial");
                if (d.is_zero()) fail("division by zero");
                RatFunc c = d.terms()[0].second;
                r = r.scaled(c.inverse());
            } else {
                return r;
            }
        }
    }

    PolyQx factor() {
        PolyQx base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = std::stol(digits());
            if (neg) {
                if (!base.is_constant()) fail("negative power of non-coefficient polynomial");
                if (base.is_zero()) fail("negative power of zero");
                RatFunc c = base.terms()[0].second;
                return PolyQx::constant(ring_, ord_, c.pow(-e));
            }
            PolyQx r = PolyQx::constant(ring_, ord_, FieldTraits<RatFunc>::one());
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    PolyQx atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            PolyQx r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyQx::constant(ring_, ord_, RatFunc(Rational(Int(digits()))));
        }
        if (c == '-') {
            eat('-');
            return -atom();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            if (name == "x") return PolyQx::constant(ring_, ord_, RatFunc::x());
            int v = ring_->index_of(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return PolyQx::variable(ring_, ord_, v);
        }
        fail("expected atom");
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    PolyRingPtr ring_;
    TermOrder ord_;
    size_t pos_ = 0;
};

}  // namespace

PolyQx parse_poly(const std::string& text, const PolyRingPtr& ring, TermOrder ord) {
    return MultiParser(text, ring, ord).parse();
}

PolyQ parse_poly_q(const std::string& text, const PolyRingPtr& ring, TermOrder ord) {
    return to_rational_poly(parse_poly(text, ring, ord));
}

PolyQ to_rational_poly(const PolyQx& p) {
    std::vector<PolyQ::Term> terms;
    for (auto& [m, c] : p.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("coefficient involves x where a rational was expected: " +
                                        c.str());
        terms.push_back({m, c.num().constant_term()});
    }
    return PolyQ(p.ring(), p.order(), std::move(terms));
}

PolyQx to_ratfunc_poly(const PolyQ& p, TermOrder ord) {
    std::vector<PolyQx::Term> terms;
    for (auto& [m, c] : p.terms()) terms.push_back({m, RatFunc(c)});
    return PolyQx(p.ring(), ord, std::move(terms));
}

}  // namespace galois
