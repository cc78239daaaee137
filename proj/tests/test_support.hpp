#pragma once

#include "dcrit/complexes.hpp"
#include "dcrit/nc_algebra.hpp"
#include "dcrit/super_poly.hpp"

#include <random>

namespace dcrit::testing {

inline std::string describe(const Verdict& v)
{
    if (!v.failure)
        return v.ok ? "ok" : v.detail;
    return v.failure->where + " (" + std::to_string(v.failure->row) + "," + std::to_string(v.failure->col) +
           "): " + v.failure->value;
}

inline Rational small_rational(std::mt19937_64& rng)
{
    long num = static_cast<long>(rng() % 7) - 3;
    long den = 1 + static_cast<long>(rng() % 2);
    return Rational(num == 0 ? 1 : num, den);
}

/// Random homogeneous monomial of exactly `factors` generators drawn from
/// the first `limit` generators of the table (odd repeats vanish).
inline SuperPoly random_monomial(std::mt19937_64& rng, const TablePtr& t, int factors, std::size_t limit)
{
    SuperPoly p = SuperPoly::constant(t, small_rational(rng));
    for (int k = 0; k < factors; ++k)
        p = p * SuperPoly::generator(t, static_cast<std::uint16_t>(rng() % limit));
    return p;
}

/// Sum of a few monomials sharing a bidegree and parity: each term is a
/// product of generators from the same pattern of blocks.
inline SuperPoly random_homogeneous(std::mt19937_64& rng, const TablePtr& t, std::size_t limit)
{
    int shape = static_cast<int>(rng() % 3) + 1;
    std::vector<Block> pattern;
    for (int k = 0; k < shape; ++k)
        pattern.push_back(static_cast<Block>(rng() % (limit / (t->rank() * t->rank()))));
    int n = t->rank();
    SuperPoly sum(t);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < terms; ++s) {
        SuperPoly m = SuperPoly::constant(t, small_rational(rng));
        for (auto b : pattern)
            m = m * SuperPoly::generator(t, b, 1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));
        sum += m;
    }
    return sum;
}

inline NCWord random_word(std::mt19937_64& rng, std::size_t max_len)
{
    NCWord w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t k = 0; k < len; ++k)
        w.push_back(kNCGens[rng() % kNCGens.size()]);
    return w;
}

}  // namespace dcrit::testing
