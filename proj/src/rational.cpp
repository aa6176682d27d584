#include "hlab/rational.hpp"

#include "hlab/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace hlab {

namespace {

auto parse_integer(std::string_view text, std::size_t base_offset) -> BigInt
{
    if (text.empty())
        throw ParseError("expected digits", base_offset);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("unexpected character in rational", base_offset + i);
    return BigInt(std::string(text));
}

} // namespace

auto parse_rational(std::string_view text) -> Rational
{
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    const auto slash = text.find('/', pos);
    BigInt num;
    BigInt den = 1;
    if (slash == std::string_view::npos) {
        num = parse_integer(text.substr(pos), pos);
    } else {
        num = parse_integer(text.substr(pos, slash - pos), pos);
        den = parse_integer(text.substr(slash + 1), slash + 1);
        if (den == 0)
            throw ParseError("zero denominator", slash + 1);
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

auto to_string(const Rational& q) -> std::string
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

auto to_double(const Rational& q) -> double
{
    return static_cast<double>(HighFloat(boost::multiprecision::numerator(q)) /
                               HighFloat(boost::multiprecision::denominator(q)));
}

auto log2_high(const Rational& q) -> HighFloat
{
    if (q <= 0) {
        if (q == 0)
            return -std::numeric_limits<HighFloat>::infinity();
        throw ParameterError("log2 of a negative rational");
    }
    const HighFloat num(boost::multiprecision::numerator(q));
    const HighFloat den(boost::multiprecision::denominator(q));
    return (log(num) - log(den)) / log(HighFloat(2));
}

auto to_string(const HighFloat& x, int digits) -> std::string
{
    if (boost::multiprecision::isinf(x))
        return x < 0 ? "-inf" : "inf";
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

auto round15(double x) -> double
{
    if (!std::isfinite(x))
        return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

auto pow(const Rational& q, std::uint64_t e) -> Rational
{
    Rational result = 1;
    Rational base = q;
    while (e != 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e != 0)
            base *= base;
    }
    return result;
}

auto floor_nonneg(const Rational& q) -> BigInt
{
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

} // namespace hlab
