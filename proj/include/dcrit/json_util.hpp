#pragma once

#include "dcrit/scalar.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace dcrit {

/// Integers that fit in a long are written as JSON numbers, everything else
/// as "p/q" strings.
inline nlohmann::json rational_to_json(const Rational& q)
{
    if (q.is_integer() && q.num().fits_slong_p())
        return q.num().get_si();
    return q.str();
}

inline Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>(), 1);
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("JSON: rational entries must be integers or \"p/q\" strings");
}

}  // namespace dcrit
