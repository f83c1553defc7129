// Exact scalars.
//
// Every coefficient in the engine is a GMP rational kept in canonical form
// (lowest terms, positive denominator), so identities are checked to exact
// equality.

#ifndef VERTEXKERNEL_RATIONAL_HPP
#define VERTEXKERNEL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vk
{

using Rational = mpq_class;

/// m(m-1)...(m-j+1)/j! for any integer m and j >= 0.
Rational binom_general(std::int64_t m, std::int64_t j);

/// 1/n! as a rational.
Rational inverse_factorial(std::int64_t n);

Rational factorial(std::int64_t n);

/// (-1)^k
inline int sign_power(std::int64_t k)
{
    return (k % 2 == 0) ? 1 : -1;
}

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational &q);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

} // namespace vk

#endif
