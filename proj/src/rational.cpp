#include "pvilab/rational.hpp"

#include <algorithm>
#include <cctype>

namespace pvilab {

Rational parse_rational(const std::string& text) {
    std::string clean;
    clean.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        // U+2212 minus sign in UTF-8.
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            clean += '-';
            i += 2;
            continue;
        }
        clean += static_cast<char>(c);
    }
    if (clean.empty()) throw ParseError("empty rational literal");
    auto valid = [](const std::string& str) {
        if (str.empty()) return false;
        size_t k = (str[0] == '-' || str[0] == '+') ? 1 : 0;
        if (k == str.size()) return false;
        return std::all_of(str.begin() + static_cast<long>(k), str.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    size_t slash = clean.find('/');
    std::string num = slash == std::string::npos ? clean : clean.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : clean.substr(slash + 1);
    if (!valid(num) || !valid(den)) throw ParseError("bad rational literal: " + text);
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw DivisionByZeroError("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_gcd(const Rational& x, const Rational& y) {
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return rat(0);
    mpz_class num_root, den_root;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(num_root, den_root);
}

}  // namespace pvilab
