#include "ugkit/rational.hpp"

#include <cctype>
#include <limits>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw Error("malformed rational \"" + std::string(whole) + "\"");
    boost::multiprecision::cpp_int value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error("malformed rational \"" + std::string(whole) + "\"");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    auto num = parse_integer(text.substr(0, slash), text);
    auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::int64_t floor_int(const Rational& q) {
    boost::multiprecision::cpp_int n = numerator(q), d = denominator(q);
    boost::multiprecision::cpp_int f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    if (f > std::numeric_limits<std::int64_t>::max() || f < std::numeric_limits<std::int64_t>::min())
        throw Error("integer overflow");
    return f.convert_to<std::int64_t>();
}

Rational dyadic(unsigned k) {
    boost::multiprecision::cpp_int den = 1;
    den <<= k;
    return Rational(boost::multiprecision::cpp_int(1), den);
}

}  // namespace ugkit
