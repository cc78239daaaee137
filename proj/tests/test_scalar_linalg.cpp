#include "doctest.h"

#include "dcrit/dense_matrix.hpp"

#include <random>

using namespace dcrit;

namespace {

QMatrix qm(std::size_t r, std::size_t c, std::vector<long> v)
{
    std::vector<Rational> d(v.begin(), v.end());
    return QMatrix(r, c, d);
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    QMatrix m(r, c, Rational());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(dist(rng));
    return m;
}

// Independent rank oracle: naive rational Gauss-Jordan.
std::size_t naive_rank(QMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rational normal form")
{
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.den() == 2);
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("prime field arithmetic")
{
    const std::uint64_t p = 1000003;
    Fp a(5, p), b(-3, p);
    CHECK((a + b).value() == 2);
    CHECK((a * a.inverse()).is_one());
    CHECK(Fp::from_rational(Rational(1, 2), p) * Fp(2, p) == Fp(1, p));
    CHECK_THROWS(Fp(1, p) + Fp(1, 1000033));
    CHECK_THROWS(Fp(0, p).inverse());
    CHECK(is_probable_prime(Fp::kDefaultPrime));
    CHECK_FALSE(is_probable_prime(1000001));
}

TEST_CASE("rank examples")
{
    CHECK(rank(QMatrix(3, 3, Rational())) == 0);
    CHECK(rank(QMatrix::identity(4, Rational(), Rational(1))) == 4);
    CHECK(rank(qm(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(QMatrix::identity(2, Rational(), Rational(1))).empty());
    CHECK(kernel_basis(QMatrix(2, 3, Rational())).size() == 3);
    auto k = kernel_basis(qm(1, 2, {1, 1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("solve examples")
{
    std::vector<Rational> b{Rational(1), Rational(-7, 3)};
    auto x = solve(QMatrix::identity(2, Rational(), Rational(1)), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(solve(QMatrix(2, 2, Rational()), b));
    auto y = solve(qm(1, 1, {2}), {Rational(3)});
    REQUIRE(y);
    CHECK((*y)[0] == Rational(3, 2));
}

TEST_CASE("rank over Q agrees with naive oracle and with three primes")
{
    std::mt19937_64 rng(11);
    const std::uint64_t primes[] = {Fp::kDefaultPrime, 1000003, 998244353};
    int agree = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 6, 6, -3, 3);
        // force some rank deficiency in a third of the cases
        if (trial % 3 == 0)
            for (std::size_t j = 0; j < 6; ++j)
                m(5, j) = m(0, j) + m(1, j);
        auto r = rank(m);
        CHECK(r == naive_rank(m));
        bool all = true;
        for (auto p : primes)
            all = all && rank(reduce_mod(m, p)) == r;
        agree += all ? 1 : 0;
    }
    CHECK(agree >= 198);
}

TEST_CASE("kernel and row space dimensions fill the column space")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        auto m = random_matrix(rng, r, c, -1, 1);
        auto k = kernel_basis(m);
        for (const auto& v : k) {
            auto mv = m.apply(v, Rational());
            for (const auto& e : mv)
                CHECK(e.is_zero());
        }
        // kernel vectors stacked with a basis of the row space span Q^c
        auto ech = row_echelon(m);
        std::size_t rk = ech.pivots.size();
        QMatrix stacked(k.size() + rk, c, Rational());
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t j = 0; j < c; ++j)
                stacked(a, j) = k[a][j];
        for (std::size_t a = 0; a < rk; ++a)
            for (std::size_t j = 0; j < c; ++j)
                stacked(k.size() + a, j) = ech.form(a, j);
        CHECK(rank(stacked) == c);
        CHECK(k.size() == c - rank(m));
    }
}

TEST_CASE("solve recovers a consistent right-hand side")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(rng, 5, 4, -3, 3);
        std::vector<Rational> x(4);
        for (auto& e : x)
            e = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        auto b = m.apply(x, Rational());
        auto s = solve(m, b);
        REQUIRE(s);
        CHECK(m.apply(*s, Rational()) == b);

        auto mp = reduce_mod(m, 1000003);
        std::vector<Fp> bp;
        for (auto& e : b)
            bp.push_back(Fp::from_rational(e, 1000003));
        auto sp = solve(mp, bp, 1000003);
        REQUIRE(sp);
        CHECK(mp.apply(*sp, Fp(0, 1000003)) == bp);
    }
}
