#include "dcrit/ext_complex.hpp"
#include "dcrit/moduli_points.hpp"

#include "doctest.h"

#include <random>

using namespace dcrit;

namespace {

QMatrix zeros(std::size_t n) { return QMatrix(n, n, Rational()); }

QMatrix unit(std::size_t n, std::size_t i, std::size_t j)
{
    QMatrix m = zeros(n);
    m(i, j) = 1;
    return m;
}

QMatrix random_small(std::mt19937_64& rng, std::size_t n)
{
    QMatrix m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(rng() % 3) - 1;
    return m;
}

std::vector<std::size_t> dims_vector(const ExtAtPoint& e)
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= 3; ++p)
        out.push_back(e.dims.at(p));
    return out;
}

// Plane partitions of size n by brute force over subsets of the box
// {0..n-1}^3 restricted to cells with a+b+c < n.
std::size_t brute_force_count(int n)
{
    std::vector<PlanePartition::Cell> box;
    for (int a = 0; a < n; ++a)
        for (int b = 0; a + b < n; ++b)
            for (int c = 0; a + b + c < n; ++c)
                box.push_back({a, b, c});
    std::size_t count = 0;
    std::vector<int> pick;
    // choose n cells out of box with (0,0,0) forced; box is small for n <= 5
    std::function<void(std::size_t, PlanePartition&)> rec = [&](std::size_t from, PlanePartition& cur) {
        if (cur.size() == static_cast<std::size_t>(n)) {
            count += cur.downward_closed() ? 1 : 0;
            return;
        }
        for (std::size_t k = from; k < box.size(); ++k) {
            cur.cells.insert(box[k]);
            rec(k + 1, cur);
            cur.cells.erase(box[k]);
        }
    };
    PlanePartition start;
    start.cells.insert({0, 0, 0});
    rec(1, start);
    return count;
}

}  // namespace

TEST_CASE("cyclicity by Krylov saturation")
{
    QMatrix x = unit(2, 0, 1);  // e2 -> e1, e1 -> 0
    MatrixPoint a(2, x, zeros(2), zeros(2), Vec<Rational>{0, 1});
    CHECK(is_cyclic(a));
    MatrixPoint b(2, x, zeros(2), zeros(2), Vec<Rational>{1, 0});
    CHECK_FALSE(is_cyclic(b));
    CHECK(krylov_dimension(b) == 1);

    MatrixPoint one(1, unit(1, 0, 0), zeros(1), zeros(1), Vec<Rational>{Rational(3, 2)});
    CHECK(is_cyclic(one));
    MatrixPoint zero_v(1, unit(1, 0, 0), zeros(1), zeros(1), Vec<Rational>{0});
    CHECK_FALSE(is_cyclic(zero_v));

    MatrixPoint no_v(2, x, zeros(2), zeros(2));
    CHECK_THROWS_AS(is_cyclic(no_v), std::invalid_argument);
}

TEST_CASE("critical locus: commutators against the symbolic dW")
{
    std::mt19937_64 rng(7);
    auto diag = random_diagonal_point(rng, 3);
    CHECK(is_critical(diag).ok());

    MatrixPoint bad(2, unit(2, 0, 1), unit(2, 1, 0), zeros(2));
    auto v = is_critical(bad);
    CHECK_FALSE(v.commuting);
    CHECK_FALSE(v.symbolic);

    int commuting = 0;
    for (int k = 0; k < 100; ++k) {
        auto n = static_cast<std::size_t>(1 + rng() % 3);
        MatrixPoint pt;
        if (k % 3 == 0) {
            // polynomials in one matrix commute
            QMatrix a = random_small(rng, n);
            pt = MatrixPoint(static_cast<int>(n), a, a.mul(a, Rational()), a + a);
        } else {
            pt = MatrixPoint(static_cast<int>(n), random_small(rng, n), random_small(rng, n), random_small(rng, n));
        }
        auto c = is_critical(pt);
        CHECK(c.agree());
        commuting += c.commuting ? 1 : 0;
    }
    CHECK(commuting >= 34);
    CHECK(commuting < 100);
}

TEST_CASE("plane partition counts from two strategies")
{
    const std::vector<std::size_t> expected = {1, 3, 6, 13, 24, 48};
    for (int n = 1; n <= 6; ++n) {
        auto a = enumerate_partitions(n);
        auto b = enumerate_partitions_by_heights(n);
        CHECK(a.size() == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(a == b);
        for (const auto& pp : a) {
            CHECK(pp.size() == static_cast<std::size_t>(n));
            CHECK(pp.downward_closed());
        }
    }
    for (int n = 1; n <= 4; ++n)
        CHECK(brute_force_count(n) == expected[static_cast<std::size_t>(n - 1)]);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("points from plane partitions")
{
    auto p1 = point_from_partition(PlanePartition{{{0, 0, 0}}});
    CHECK(p1.n == 1);
    CHECK(p1.X.is_zero());
    CHECK(p1.Y.is_zero());
    CHECK(p1.Z.is_zero());
    CHECK(*p1.v == Vec<Rational>{1});

    auto p2 = point_from_partition(PlanePartition{{{0, 0, 0}, {1, 0, 0}}});
    CHECK(p2.n == 2);
    CHECK(p2.X == unit(2, 1, 0));  // 1 -> x, x -> 0
    CHECK(p2.Y.is_zero());
    CHECK(p2.Z.is_zero());
    CHECK(is_cyclic(p2));
    CHECK(is_critical(p2).ok());

    for (int n = 1; n <= 6; ++n)
        for (const auto& pp : enumerate_partitions(n)) {
            auto pt = point_from_partition(pp);
            INFO(pp.str());
            CHECK(is_cyclic(pt));
            CHECK(is_critical(pt).ok());
        }

    CHECK_THROWS_AS(point_from_partition(PlanePartition{{{1, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("cyclicity and criticality are conjugation invariant")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto parts = enumerate_partitions(n);
        auto pt = point_from_partition(parts[rng() % parts.size()]);
        // a non-cyclic variant: marked vector in the socle
        MatrixPoint flat = pt;
        if (n > 1) {
            flat.v = Vec<Rational>(static_cast<std::size_t>(n), Rational());
            (*flat.v)[static_cast<std::size_t>(n - 1)] = 1;
        }
        auto p = random_invertible(rng, n);
        CHECK(p.mul(matrix_inverse(p), Rational()) == QMatrix::identity(static_cast<std::size_t>(n), 0, 1));
        CHECK(is_cyclic(conjugate(pt, p)) == is_cyclic(pt));
        CHECK(is_cyclic(conjugate(flat, p)) == is_cyclic(flat));
        CHECK(is_critical(conjugate(pt, p)).ok());

        MatrixPoint noisy(n, random_small(rng, static_cast<std::size_t>(n)), pt.Y, pt.Z);
        CHECK(is_critical(conjugate(noisy, p)).commuting == is_critical(noisy).commuting);
    }
}

TEST_CASE("Koszul oracle examples")
{
    auto origin = koszul_ext_oracle(MatrixPoint::origin(1));
    CHECK(dims_vector(origin) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(origin.pairing_perfect());
    CHECK(origin.euler == 0);

    QMatrix x = zeros(2), y = zeros(2), z = zeros(2);
    x(0, 0) = 1;
    y(1, 1) = 2;
    MatrixPoint two(2, x, y, z, Vec<Rational>{1, 1});
    auto e = koszul_ext_oracle(two);
    CHECK(dims_vector(e) == std::vector<std::size_t>{2, 6, 6, 2});
    CHECK(e.pairing_perfect());
    CHECK(e.euler == 0);

    auto c = koszul_complex_at(two);
    CHECK(check_d_squared(c, Rational()).ok);
    CHECK_THROWS_AS(koszul_ext_oracle(MatrixPoint(2, unit(2, 0, 1), unit(2, 1, 0), zeros(2))),
                    std::invalid_argument);
}

TEST_CASE("Ext from L agrees with the Koszul oracle")
{
    auto corpus = build_corpus(3, 12, 5);
    CHECK(corpus.size() == 1 + 3 + 6 + 12);
    for (const auto& pt : corpus) {
        INFO(point_to_json(pt).dump());
        auto l = ext_dims_at(pt);
        auto k = koszul_ext_oracle(pt);
        CHECK(l.dims == k.dims);
        CHECK(l.euler == 0);
        CHECK(k.euler == 0);
        if (pt.v && is_cyclic(pt)) {
            CHECK(k.dims.at(0) >= 1);
            CHECK(k.pairing_perfect());
            CHECK(l.pairing_perfect());
        }
    }
}

TEST_CASE("distinct points split into single-point blocks")
{
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 3; ++n) {
        auto pt = random_diagonal_point(rng, n);
        auto un = static_cast<std::size_t>(n);
        auto expect = std::vector<std::size_t>{un, 3 * un, 3 * un, un};
        CHECK(dims_vector(koszul_ext_oracle(pt)) == expect);
        CHECK(dims_vector(ext_dims_at(pt)) == expect);
    }
}

TEST_CASE("corpus JSON round trip")
{
    auto corpus = build_corpus(2, 4, 9);
    auto j = corpus_to_json(corpus);
    auto back = corpus_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.size() == corpus.size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        CHECK(back[k].X == corpus[k].X);
        CHECK(back[k].Y == corpus[k].Y);
        CHECK(back[k].Z == corpus[k].Z);
        CHECK(back[k].v == corpus[k].v);
        CHECK(back[k].provenance == corpus[k].provenance);
    }
    CHECK(corpus_to_json(build_corpus(2, 4, 9)) == j);

    auto half = nlohmann::json::parse(R"({"n":1,"X":[["1/2"]],"Y":[[0]],"Z":[[-3]]})");
    auto p = point_from_json(half);
    CHECK(p.X(0, 0) == Rational(1, 2));
    CHECK_FALSE(p.v.has_value());
    CHECK(p.provenance == "manual");
    CHECK_THROWS_AS(point_from_json(nlohmann::json::parse(R"({"n":2,"X":[[0]],"Y":[[0]],"Z":[[0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_from_json(nlohmann::json::parse(R"({"n":1,"X":[[0.5]],"Y":[[0]],"Z":[[0]]})")),
                    std::invalid_argument);
}
