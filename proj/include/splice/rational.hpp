#ifndef SPLICE_RATIONAL_HPP
#define SPLICE_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost's mixed rational/int operator==
// picks its own reversed form and recurses forever. Exact-match overloads
// take precedence over the templates.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace splice {

// Exact gradings, d-invariants and cobordism shifts.
using Rational = boost::rational<std::int64_t>;

// Accepts "p", "-p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// If r is a non-negative even integer 2k, returns k.
std::optional<std::int64_t> half_if_nonneg_even(const Rational& r);

}  // namespace splice

#endif
