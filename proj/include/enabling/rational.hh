#ifndef ENABLING_RATIONAL_HH
#define ENABLING_RATIONAL_HH

#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace enabling
{
    /// Exact rationals, always canonical (reduced, positive denominator).
    using Rational = mpq_class;
    using Integer = mpz_class;

    auto make_rational(long num, long den = 1) -> Rational;

    auto ceil(const Rational & q) -> Integer;
    auto floor(const Rational & q) -> Integer;

    /// "p/q", or "p" for integers.
    auto to_string(const Rational & q) -> std::string;

    /// {"num": "p", "den": "q"} with decimal strings.
    auto to_json(const Rational & q) -> nlohmann::json;
    auto rational_from_json(const nlohmann::json & j) -> Rational;
}

#endif
