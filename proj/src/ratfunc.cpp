#include "galois/ratfunc.hpp"

#include <cctype>
#include <sstream>

namespace galois {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly::one();
        return;
    }
    UniPoly g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    Rational lc = den_.leading();
    if (!galois::is_one(lc)) {
        num_ = num_ * (Rational(1) / lc);
        den_ = den_ * (Rational(1) / lc);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    RatFunc r(Rational(1));
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

RatFunc RatFunc::shift(long m) const {
    if (m == 0) return *this;
    RatFunc r;
    r.num_ = num_.shift(m);
    r.den_ = den_.shift(m);
    return r;  // gcd/monic preserved by translation
}

bool RatFunc::has_pole_at(const Int& i) const {
    return galois::is_zero(den_.eval(Rational(i)));
}

Rational RatFunc::eval_at_integer(const Int& i) const {
    Rational d = den_.eval(Rational(i));
    if (galois::is_zero(d)) throw PoleError(i);
    return num_.eval(Rational(i)) / d;
}

std::string RatFunc::str() const { return str("x"); }

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    std::ostringstream os;
    bool wrap_num = num_.degree() > 0;
    if (wrap_num) {
        // single-term numerators like x or 2*x^3 stay bare
        int nonzero = 0;
        for (const auto& c : num_.coeffs())
            if (!galois::is_zero(c)) ++nonzero;
        wrap_num = nonzero > 1 || sgn(num_.leading()) < 0;
    }
    if (wrap_num)
        os << "(" << num_.str(var) << ")";
    else
        os << num_.str(var);
    os << "/(" << den_.str(var) << ")";
    return os.str();
}

namespace {

class UniParser {
public:
    explicit UniParser(const std::string& s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
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

    RatFunc expr() {
        RatFunc r = eat('-') ? -term() : (eat('+'), term());
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            if (eat('*'))
                r *= factor();
            else if (eat('/'))
                r /= factor();
            else
                return r;
        }
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer_literal();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return RatFunc::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(Int(digits())));
        if (c == '-') {
            eat('-');
            return -atom();
        }
        fail("expected atom");
    }

    long integer_literal() {
        std::string d = digits();
        return std::stol(d);
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return UniParser(text).parse(); }

UniPoly parse_unipoly(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_polynomial()) throw std::invalid_argument("expected polynomial, got " + f.str());
    return f.num();
}

}  // namespace galois
