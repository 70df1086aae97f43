#include "pvilab/parser.hpp"

#include <cctype>

namespace pvilab {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    RatExpr parse() {
        RatExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input at position " + std::to_string(pos_) + " in: " + text_);
        return e;
    }

  private:
    RatExpr expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        RatExpr acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                RatExpr rhs = term();
                acc = (c == '+') ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

    RatExpr term() {
        RatExpr acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                get();
                RatExpr rhs = factor();
                acc = (c == '*') ? acc * rhs : acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RatExpr factor() {
        RatExpr base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
            if (digits.empty()) throw ParseError("expected integer exponent in: " + text_);
            base = base.pow(std::stoi(digits));
        }
        return base;
    }

    RatExpr atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            RatExpr e = expr();
            skip_ws();
            if (get() != ')') throw ParseError("missing ')' in: " + text_);
            return e;
        }
        if (c == '-') {
            get();
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
            return RatExpr(parse_rational(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek()))) name += get();
            auto v = var_from_name(name);
            if (!v) throw UnknownVariableError("unknown variable '" + name + "' in: " + text_);
            return RatExpr::variable(*v);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' in: " + text_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

RatExpr parse_ratexpr(const std::string& text) { return Parser(text).parse(); }

Poly parse_poly(const std::string& text) {
    RatExpr e = parse_ratexpr(text);
    if (!e.is_polynomial())
        throw ParseError("expression is not polynomial: " + text);
    return e.num().scaled(Rational(1) / e.den().constant_value());
}

}  // namespace pvilab
