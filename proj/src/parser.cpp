#include "zerodim/parser.hpp"

#include <cctype>

namespace zerodim {
namespace {

class ExpressionParser {
public:
    ExpressionParser(const std::string& text, const RingPtr& ring, int line, int column)
        : s_(text), ring_(ring), line_(line), column_(column) {}

    Polynomial<Rational> parse() {
        Polynomial<Rational> p = expression();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, column_ + static_cast<int>(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial<Rational> expression() {
        Polynomial<Rational> acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial<Rational> term() {
        Polynomial<Rational> acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial<Rational> d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc = acc.scaled(inverse(d.constant_term()));
            } else {
                return acc;
            }
        }
    }

    Polynomial<Rational> unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial<Rational> power() {
        Polynomial<Rational> base = atom();
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 4 || std::stoul(digits) > 4096) {
            pos_ = start;
            fail("exponent too large");
        }
        unsigned e = static_cast<unsigned>(std::stoul(digits));
        Polynomial<Rational> r = Polynomial<Rational>::constant(ring_, Rational(1));
        for (unsigned k = 0; k < e; ++k) r = r * base;
        return r;
    }

    Polynomial<Rational> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<Rational> inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial<Rational>::constant(ring_, Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown name '" + name + "'");
            }
            return Polynomial<Rational>::variable(ring_, *idx);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    RingPtr ring_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial<Rational> parse_polynomial(const std::string& text, const RingPtr& ring, int line, int column) {
    return ExpressionParser(text, ring, line, column).parse();
}

Rational parse_rational(const std::string& text, int line, int column) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("expected a rational number", line, column);
    std::string t = text.substr(b, e - b + 1);
    std::size_t i = 0;
    if (t[0] == '-' || t[0] == '+') i = 1;
    std::size_t slash = t.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(i, t.size()) : digits(i, slash) && digits(slash + 1, t.size());
    if (!ok) throw ParseError("malformed rational number '" + t + "'", line, column + static_cast<int>(b));
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(mpz_class(t.substr(i)));
    } else {
        mpz_class den(t.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator", line, column + static_cast<int>(b));
        r = Rational(mpz_class(t.substr(i, slash - i)), den);
        r.canonicalize();
    }
    return t[0] == '-' ? Rational(-r) : r;
}

}  // namespace zerodim
