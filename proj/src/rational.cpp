#include "splice/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace splice {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::optional<std::int64_t> half_if_nonneg_even(const Rational& r)
{
    if (r.denominator() != 1 || r.numerator() < 0 || r.numerator() % 2 != 0) return std::nullopt;
    return r.numerator() / 2;
}

}  // namespace splice
