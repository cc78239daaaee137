#include "doctest.h"

#include "dcrit/nc_algebra.hpp"
#include "dcrit/poly_text.hpp"
#include "dcrit/super_poly.hpp"
#include "test_support.hpp"

using namespace dcrit;
using dcrit::testing::random_homogeneous;
using dcrit::testing::random_word;

namespace {

SuperPoly gen(const TablePtr& t, Block b, int i, int j) { return SuperPoly::generator(t, b, i, j); }

int sign_of(const SuperPoly& a, const SuperPoly& b) { return (a.odd() && b.odd()) ? -1 : 1; }

// d(Xm1(i,j)) = [Y0,Z0](j,i), cyclically; everything else to 0.
Derivation koszul_part(const TablePtr& t)
{
    int n = t->rank();
    Derivation d(t, 1, 0);
    const Block deg0[3] = {Block::X0, Block::Y0, Block::Z0};
    const Block odd[3] = {Block::Xm1, Block::Ym1, Block::Zm1};
    for (int g = 0; g < 3; ++g) {
        Block a = deg0[(g + 1) % 3], b = deg0[(g + 2) % 3];
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                SuperPoly img(t);
                for (int k = 1; k <= n; ++k)
                    img += gen(t, a, j, k) * gen(t, b, k, i) - gen(t, b, j, k) * gen(t, a, k, i);
                d.set(t->index(odd[g], i, j), img);
            }
    }
    return d;
}

}  // namespace

TEST_CASE("generator table shape")
{
    for (int n = 1; n <= 4; ++n) {
        auto t = GeneratorTable::canonical(n, false);
        int d0 = 0, dm1 = 0, dm2 = 0;
        for (const auto& g : t->generators()) {
            d0 += g.degree == 0;
            dm1 += g.degree == -1;
            dm2 += g.degree == -2;
        }
        CHECK(d0 == 3 * n * n);
        CHECK(dm1 == 3 * n * n);
        CHECK(dm2 == n * n);
        auto td = GeneratorTable::canonical(n, true);
        CHECK(td->size() == static_cast<std::size_t>(15 * n * n));
        for (std::size_t k = 0; k < t->size(); ++k)
            CHECK((*td)[k].name == (*t)[k].name);
    }
    CHECK(GeneratorTable::canonical(2, false) == GeneratorTable::canonical(2, false));
}

TEST_CASE("odd generators square to zero and anticommute")
{
    auto t = GeneratorTable::canonical(2, false);
    auto xi = gen(t, Block::Xm1, 1, 2), eta = gen(t, Block::Zm1, 2, 1);
    CHECK((xi * xi).is_zero());
    CHECK((xi * eta + eta * xi).is_zero());
    auto m = gen(t, Block::X0, 1, 1) * xi;
    CHECK(m.size() == 1);
    CHECK(m.terms().begin()->second == Rational(1));
    auto tt = gen(t, Block::T, 1, 1);
    CHECK((tt * tt).size() == 1);
    CHECK(tt * xi == xi * tt);
}

TEST_CASE("mismatched tables are rejected")
{
    auto a = gen(GeneratorTable::canonical(1, false), Block::X0, 1, 1);
    auto b = gen(GeneratorTable::canonical(2, false), Block::X0, 1, 1);
    CHECK_THROWS(a * b);
    CHECK_THROWS(a + b);
}

TEST_CASE("associativity and graded commutativity on random elements")
{
    std::mt19937_64 rng(3);
    auto t = GeneratorTable::canonical(2, false);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_homogeneous(rng, t, t->size());
        auto b = random_homogeneous(rng, t, t->size());
        auto c = random_homogeneous(rng, t, t->size());
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == Rational(sign_of(a, b)) * (b * a));
        CHECK(SuperPoly::constant(t, Rational(1)) * a == a);
    }
}

TEST_CASE("derivation on the odd generators")
{
    auto t = GeneratorTable::canonical(2, false);
    auto d = koszul_part(t);
    CHECK(d.apply(gen(t, Block::X0, 1, 2)).is_zero());
    // d(Xm1(i,j)) = (Y0 Z0 - Z0 Y0)(j,i)
    auto expected = parse_poly(t, "Y0(2,1)*Z0(1,1) + Y0(2,2)*Z0(2,1) - Z0(2,1)*Y0(1,1) - Z0(2,2)*Y0(2,1)");
    CHECK(d.apply(gen(t, Block::Xm1, 1, 2)) == expected);
    auto xi = gen(t, Block::Xm1, 1, 2), eta = gen(t, Block::Ym1, 2, 2);
    CHECK(d.apply(xi * eta) == d.apply(xi) * eta - xi * d.apply(eta));
    Derivation bad(t, 1, 0);
    CHECK_THROWS(bad.set(t->index(Block::X0, 1, 1), gen(t, Block::X0, 1, 1)));
    CHECK_THROWS(bad.set(t->index(Block::Xm1, 1, 1), gen(t, Block::X0, 1, 1) + gen(t, Block::T, 1, 1)));
}

TEST_CASE("Leibniz rule on random pairs")
{
    std::mt19937_64 rng(9);
    auto t = GeneratorTable::canonical(2, false);
    auto d = koszul_part(t);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_homogeneous(rng, t, 6 * 4);
        auto b = random_homogeneous(rng, t, 6 * 4);
        Rational s = a.odd() ? Rational(-1) : Rational(1);
        CHECK(d.apply(a * b) == d.apply(a) * b + s * (a * d.apply(b)));
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937_64 rng(21);
    auto t = GeneratorTable::canonical(2, false);
    std::vector<Rational> values(t->size());
    for (auto& v : values)
        v = Rational(static_cast<long>(rng() % 11) - 5);
    auto ev = [&](std::uint16_t g) { return values[g]; };
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_homogeneous(rng, t, t->size());
        auto b = random_homogeneous(rng, t, t->size());
        CHECK((a * b).evaluate(ev) == a.evaluate(ev) * b.evaluate(ev));
    }
}

TEST_CASE("text format round trip")
{
    std::mt19937_64 rng(4);
    auto t = GeneratorTable::canonical(3, true);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_homogeneous(rng, t, t->size()) + random_homogeneous(rng, t, t->size());
        CHECK(parse_poly(t, format_poly(a)) == a);
    }
    CHECK(format_poly(SuperPoly(t)) == "0");
    auto p = parse_poly(t, "-2 * X0(1,2)*Xm1(2,1) + 1/2 * Y0(1,1)^2");
    CHECK(format_poly(p) == "-2 * X0(1,2)*Xm1(2,1) + 1/2 * Y0(1,1)^2");
    CHECK(parse_poly(t, "Xm1(1,1)*Ym1(1,1)") == -parse_poly(t, "Ym1(1,1)*Xm1(1,1)"));
    CHECK_THROWS(parse_poly(t, "Q0(1,1)"));
    CHECK_THROWS(parse_poly(t, "X0(1,1) + "));
}

TEST_CASE("noncommutative product")
{
    using G = NCGen;
    auto x = NCElement::gen(G::x), y = NCElement::gen(G::y), z = NCElement::gen(G::z);
    CHECK(nc_mul(x, y) != nc_mul(y, x));
    CHECK(nc_mul(NCElement::one(), x + y) == x + y);
    CHECK(nc_mul(x + y, z) == nc_mul(x, z) + nc_mul(y, z));
    CHECK(NCElement::parse("xu - u*x + 2*y*z") == NCElement::parse("2yz+xu-ux"));
}

TEST_CASE("noncommutative differential")
{
    using G = NCGen;
    CHECK(nc_differential(NCElement::gen(G::x)).is_zero());
    CHECK(nc_differential(NCElement::gen(G::u)) == NCElement::parse("yz - zy"));
    CHECK(nc_differential(NCElement::gen(G::t)) == NCElement::parse("xu-ux+yv-vy+zw-wz"));
    for (auto g : kNCGens)
        CHECK(nc_differential(nc_differential(NCElement::gen(g))).is_zero());
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = NCElement::word(random_word(rng, 5));
        CHECK(nc_differential(nc_differential(a)).is_zero());
        // Leibniz
        auto wa = random_word(rng, 3), wb = random_word(rng, 3);
        auto ea = NCElement::word(wa), eb = NCElement::word(wb);
        Rational s = (word_degree(wa) & 1) ? Rational(-1) : Rational(1);
        CHECK(nc_differential(nc_mul(ea, eb)) ==
              nc_mul(nc_differential(ea), eb) + s * nc_mul(ea, nc_differential(eb)));
    }
}
