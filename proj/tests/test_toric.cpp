#include "dcrit/toric.hpp"

#include "doctest.h"

#include <random>

using namespace dcrit;

namespace {

SurfaceSpec p2(std::vector<std::size_t> blowups = {})
{
    SurfaceSpec s;
    s.blowups = std::move(blowups);
    return s;
}

SurfaceSpec hirzebruch(int n, std::vector<std::size_t> blowups = {})
{
    SurfaceSpec s;
    s.base = SurfaceSpec::Base::Fn;
    s.hirzebruch = n;
    s.blowups = std::move(blowups);
    return s;
}

CoxPoint cox(std::initializer_list<long> xs)
{
    CoxPoint p;
    for (long x : xs)
        p.emplace_back(x);
    return p;
}

}  // namespace

TEST_CASE("fans of the base surfaces and blowups")
{
    auto s = build_surface(p2());
    CHECK(s.fan().rays == std::vector<Ray>{{1, 0}, {0, 1}, {-1, -1}});
    CHECK(s.fan().self_intersections() == std::vector<long>{1, 1, 1});

    auto f1 = build_surface(hirzebruch(1));
    CHECK(f1.fan().size() == 4);
    CHECK(f1.fan().smooth_complete());
    CHECK(f1.fan().rays[3] == Ray{0, -1});
    CHECK(f1.fan().self_intersections() == std::vector<long>{0, 1, 0, -1});
    CHECK(build_surface(hirzebruch(3)).fan().self_intersections() == std::vector<long>{0, 3, 0, -3});

    auto b = build_surface(p2({0}));
    CHECK(b.fan().size() == 4);
    CHECK(fans_isomorphic(b.fan(), f1.fan()));
    CHECK_FALSE(fans_isomorphic(b.fan(), build_surface(hirzebruch(0)).fan()));
    CHECK_FALSE(fans_isomorphic(build_surface(hirzebruch(2)).fan(), f1.fan()));
    CHECK(fans_isomorphic(build_surface(hirzebruch(0)).fan(), build_surface(hirzebruch(0)).fan()));

    auto tower = build_surface(hirzebruch(2, {0, 1, 4}));
    CHECK(tower.fan().size() == 7);
    CHECK(tower.levels.size() == 4);
    for (const auto& f : tower.levels)
        CHECK(f.smooth_complete());

    CHECK_THROWS_AS(build_surface(p2({3})), std::invalid_argument);
    Fan2D bad{{{1, 0}, {1, 2}, {-1, -1}}};
    CHECK_FALSE(bad.smooth_complete());
    Fan2D twice{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    CHECK_FALSE(twice.smooth_complete());
}

TEST_CASE("Cox points, cone coordinates and blowdown")
{
    auto s = build_surface(p2({0}));
    const auto& fan = s.fan();  // (1,0),(1,1),(0,1),(-1,-1)
    CHECK(valid_cox_point(fan, cox({0, 0, 1, 1})));
    CHECK(valid_cox_point(fan, cox({0, 1, 1, 0})));
    CHECK_FALSE(valid_cox_point(fan, cox({0, 1, 0, 1})));
    CHECK_FALSE(valid_cox_point(fan, cox({1, 1, 1})));

    // torus action of the blown-up plane: weights on (x0, e, x2, x3)
    CoxPoint a = cox({2, 3, 5, 7});
    CoxPoint b = {Rational(2 * 4), Rational(3, 4), Rational(5 * 4), Rational(7)};  // lambda on x0, x2; 1/lambda on e
    CHECK(same_point(fan, a, b));
    CHECK_FALSE(same_point(fan, a, cox({2, 3, 5, 8})));

    // blowdown: x0 -> x0 e, x1 -> x2 e
    CHECK(blow_down(s.levels[0], 0, a) == cox({6, 15, 7}));
    // points of the exceptional divisor map to the center [0:0:1]
    auto center = blow_down(s.levels[0], 0, cox({1, 0, 4, 1}));
    CHECK(same_point(s.levels[0], center, cox({0, 0, 1})));

    auto uv = cone_coordinates(fan, 0, point_in_cone(fan, 0, Rational(3), Rational(-2)));
    REQUIRE(uv);
    CHECK((*uv)[0] == Rational(3));
    CHECK((*uv)[1] == Rational(-2));
    CHECK_FALSE(cone_coordinates(fan, 2, point_in_cone(fan, 0, Rational(0), Rational(1))));
}

TEST_CASE("polynomial helpers")
{
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = x * x * y + Rational(3) * y;
    CHECK(p.evaluate({Rational(2), Rational(5)}) == Rational(35));
    CHECK(p.str({"x", "y"}) == "x^2*y + 3*y");
    auto q = p.divide_by_variable(1);
    REQUIRE(q);
    CHECK(*q == x * x + Poly::constant(2, Rational(3)));
    CHECK_FALSE(p.divide_by_variable(0));
    Poly c = p.compose({x + y, x});
    CHECK(c.evaluate({Rational(1), Rational(2)}) == Rational(3 * 3 * 1 + 3));
    Poly up = (x * y).pullback(1, 0, 1);
    CHECK(up.nvars() == 3);
    CHECK(up.terms().begin()->first == Poly::Exponents{1, 2, 1});
}

TEST_CASE("P2 charts avoid the given points")
{
    auto s = build_surface(p2());
    auto r = find_chart(s, {cox({1, 0, 0}), cox({0, 1, 0}), cox({0, 0, 1})});
    CHECK(r.chart.datum["removed_line"] == nlohmann::json::array({1, 1, 1}));
    CHECK(r.roundtrip);
    CHECK(r.coordinates.size() == 3);

    auto single = find_chart(s, {cox({1, 1, 1})});
    CHECK(single.chart.datum["removed_line"] == nlohmann::json::array({1, 0, 0}));
    auto through_x0 = find_chart(s, {cox({0, 1, 0})});
    CHECK(through_x0.chart.datum["removed_line"] == nlohmann::json::array({1, 1, 1}));
}

TEST_CASE("F0 points on one fiber")
{
    auto s = build_surface(hirzebruch(0));
    // base coordinates [x0 : x2] = [0 : 1]: the fiber x0 = 0
    std::vector<CoxPoint> pts = {cox({0, 1, 1, 2}), cox({0, 1, 1, 0}), cox({0, 0, 1, 1})};
    auto r = find_chart(s, pts);
    CHECK(r.roundtrip);
    CHECK(r.chart.datum["removed_fiber"] != nlohmann::json::array({1, 0}));
    for (const auto& p : pts)
        CHECK(r.chart.contains(p));
}

TEST_CASE("charts on towers: points on exceptional divisors")
{
    auto s = build_surface(p2({0, 1}));
    const auto& fan = s.fan();  // (1,0),(1,1),(1,2),(0,1),(-1,-1)
    REQUIRE(fan.size() == 5);
    std::vector<CoxPoint> pts = {
        cox({1, 0, 1, 1, 1}),   // on the first exceptional curve
        cox({1, 1, 0, 1, 1}),   // on the second
        cox({0, 0, 1, 1, 1}),   // a torus fixed point on the first
        cox({2, -1, 1, 3, 1}),  // torus point
    };
    auto r = find_chart(s, pts);
    CHECK(r.roundtrip);
    CHECK(r.chart.datum["blowups"].size() == 2);
    CHECK(r.chart.datum["blowups"][0]["center_in_chart"] == true);

    // two points on the same exceptional curve with different directions
    auto r2 = find_chart(s, {cox({1, 0, 1, 1, 1}), cox({2, 0, 1, 1, 1}), cox({5, 0, 3, 1, 1})});
    CHECK(r2.roundtrip);
    CHECK(r2.coordinates[0] != r2.coordinates[1]);

    CHECK_THROWS_AS(find_chart(s, {cox({1, 0, 1, 0, 1})}), std::invalid_argument);
}

TEST_CASE("chart embeddings are inverse to chart coordinates")
{
    std::mt19937_64 rng(21);
    for (const auto& spec : {p2(), hirzebruch(2), hirzebruch(1, {2}), p2({0, 1}), hirzebruch(0, {1, 0})}) {
        auto s = build_surface(spec);
        std::vector<CoxPoint> pts = {random_cox_point(rng, s.fan()), random_cox_point(rng, s.fan())};
        auto r = find_chart(s, pts);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                CoxPoint p = r.chart.embed(Rational(a), Rational(b));
                CHECK(valid_cox_point(s.fan(), p));
                auto back = r.chart.coordinates(p);
                REQUIRE(back);
                CHECK((*back)[0] == Rational(a));
                CHECK((*back)[1] == Rational(b));
            }
    }
}

TEST_CASE("cover statistics")
{
    struct Case {
        SurfaceSpec spec;
        std::size_t trials, points;
    };
    for (const auto& c : {Case{p2(), 100, 5}, Case{hirzebruch(2), 50, 4}, Case{p2({0, 1}), 50, 3},
                          Case{hirzebruch(0), 50, 4}, Case{hirzebruch(3, {0, 2}), 30, 4}}) {
        auto st = verify_cover_property(build_surface(c.spec), c.trials, c.points, 17);
        INFO(stats_to_json(st).dump());
        CHECK(st.all_ok());
        CHECK(st.roundtrip_failures == 0);
        CHECK(st.boundary_points > 0);
    }
    auto tower = verify_cover_property(build_surface(p2({0, 1})), 100, 3, 4);
    CHECK(tower.exceptional_points > 0);
    CHECK(tower.all_ok());
}

TEST_CASE("surface and point JSON")
{
    auto spec = surface_from_json(nlohmann::json::parse(R"({"base":"Fn","n":2,"blowups":[1]})"));
    CHECK(spec.base == SurfaceSpec::Base::Fn);
    CHECK(spec.hirzebruch == 2);
    CHECK(spec.blowups == std::vector<std::size_t>{1});
    CHECK(surface_from_json(surface_to_json(spec)).blowups == spec.blowups);
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::parse(R"({"base":"P3"})")), std::invalid_argument);
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::parse(R"({"base":"Fn"})")), std::invalid_argument);

    auto s = build_surface(spec);
    auto p = toric_point_from_json(s.fan(), nlohmann::json::parse(R"({"cox":[1,"1/2",0,1,3]})"));
    CHECK(p[1] == Rational(1, 2));
    auto q = toric_point_from_json(s.fan(), nlohmann::json::parse(R"({"cone":4,"uv":[0,2]})"));
    CHECK(q[4].is_zero());
    CHECK(q[0] == Rational(2));
    CHECK_THROWS_AS(toric_point_from_json(s.fan(), nlohmann::json::parse(R"({"cox":[1,2]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(toric_point_from_json(s.fan(), nlohmann::json::parse(R"({"cone":9,"uv":[0,2]})")),
                    std::invalid_argument);

    auto r = find_chart(s, {p, q});
    auto j = chart_result_to_json(r);
    CHECK(j["roundtrip"] == true);
    CHECK(j["coordinates"].size() == 2);
}
