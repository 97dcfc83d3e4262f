#include "tempiric/rational.hpp"

#include "tempiric/errors.hpp"

#include <cctype>

namespace tempiric {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("malformed rational '" + std::string(whole) +
                             "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("sign not allowed in denominator of '" +
                         std::string(text) + "'");
    BigInt den = parse_integer(den_text, text);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational &r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt isqrt_floor(const Rational &x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (x < 0)
        return 0;
    // floor(sqrt(p/q)) = floor(sqrt(floor(p/q))) for p, q > 0.
    BigInt n = numerator(x) / denominator(x);
    BigInt r = boost::multiprecision::sqrt(n);
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace tempiric
