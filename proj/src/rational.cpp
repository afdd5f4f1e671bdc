#include "momentpoly/rational.hpp"

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> ParseError {
        return ParseError("not a rational literal: \"" + text + "\"");
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) throw bad();
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
    const Integer d(den);
    if (d <= 0) throw ParseError("denominator must be positive: \"" + text + "\"");
    return Rational(Integer(num), d);
}

std::string format_rational(const Rational& r) {
    const Integer n = numerator(r);
    const Integer d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Integer rat_num(const Rational& r) { return numerator(r); }
Integer rat_den(const Rational& r) { return denominator(r); }

} // namespace momentpoly
