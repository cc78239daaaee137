#pragma once

// Smooth complete toric surfaces as blowup towers over P^2 or F_n, and a
// chart locator: for a finite set of points, an open subset isomorphic to
// C^2 containing all of them.
//
// Points are Cox coordinates of the top surface. Chart coordinates are
// ratios of Cox polynomials; the inverse of a chart is a polynomial map
// from C^2 to Cox coordinates.

#include "dcrit/scalar.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dcrit {

using Ray = std::array<long, 2>;

/// Rays in counterclockwise order; cone k is (rays[k], rays[k+1 mod r]).
struct Fan2D {
    std::vector<Ray> rays;

    std::size_t size() const { return rays.size(); }
    const Ray& ray(std::size_t k) const { return rays[k % rays.size()]; }
    /// det(v_k, v_{k+1}) == 1 for every cone and the rays wind once.
    bool smooth_complete() const;
    /// D_k^2 = -a_k where v_{k-1} + v_{k+1} = a_k v_k.
    std::vector<long> self_intersections() const;
    /// Fan with v_k + v_{k+1} inserted after position k.
    Fan2D blown_up(std::size_t cone) const;
};

/// Equal up to GL(2,Z) and cyclic relabelling (either orientation).
bool fans_isomorphic(const Fan2D& a, const Fan2D& b);

struct SurfaceSpec {
    enum class Base { P2, Fn } base = Base::P2;
    int hirzebruch = 0;                // n for F_n
    std::vector<std::size_t> blowups;  // cone index on the surface at that stage
};

struct Surface {
    SurfaceSpec spec;
    std::vector<Fan2D> levels;  // levels[0] = base, levels.back() = top
    const Fan2D& fan() const { return levels.back(); }
};

/// P^2: (1,0), (0,1), (-1,-1). F_n: (1,0), (0,1), (-1,-n), (0,-1).
Surface build_surface(const SurfaceSpec& spec);

using CoxPoint = std::vector<Rational>;

/// Zero coordinates contained in one cone, right length.
bool valid_cox_point(const Fan2D& fan, const CoxPoint& p);
/// Coordinates (u, w) in the affine chart of cone k, if the point lies in it.
std::optional<std::array<Rational, 2>> cone_coordinates(const Fan2D& fan, std::size_t cone, const CoxPoint& p);
/// Cox point with x_k = u, x_{k+1} = w and all other coordinates 1.
CoxPoint point_in_cone(const Fan2D& fan, std::size_t cone, const Rational& u, const Rational& w);
/// Same point of the surface (Cox coordinates modulo the torus action).
bool same_point(const Fan2D& fan, const CoxPoint& a, const CoxPoint& b);
/// Image under the blowdown of `cone` from `fan` (the fan before blowing up).
CoxPoint blow_down(const Fan2D& fan, std::size_t cone, const CoxPoint& p);

/// Polynomial over Q in a fixed number of variables.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
    Poly pow(int k) const;

    Rational evaluate(const std::vector<Rational>& x) const;
    /// Substitutes args[i] for variable i.
    Poly compose(const std::vector<Poly>& args) const;
    /// Exact division by variable i; nullopt if some term lacks it.
    std::optional<Poly> divide_by_variable(std::size_t i) const;
    /// Pullback along a blowdown: a new variable at `pos` with exponent
    /// e[left] + e[right] (indices into the old variables).
    Poly pullback(std::size_t pos, std::size_t left, std::size_t right) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

struct RationalFunction {
    Poly num, den;
    std::optional<Rational> evaluate(const std::vector<Rational>& x) const;
};

/// An open subset U of a level of the tower with U = C^2.
struct Chart {
    nlohmann::json datum;            // which divisors were removed
    RationalFunction a, b;           // coordinates, in Cox variables
    std::vector<Poly> embedding;     // Cox coordinates as polynomials in (a, b)

    bool contains(const CoxPoint& p) const;
    std::optional<std::array<Rational, 2>> coordinates(const CoxPoint& p) const;
    CoxPoint embed(const Rational& a, const Rational& b) const;
};

struct ChartResult {
    Chart chart;
    std::vector<std::array<Rational, 2>> coordinates;
    bool roundtrip = false;  // embed(coordinates) reproduces every input point
};

/// Throws std::invalid_argument on an invalid Cox point.
ChartResult find_chart(const Surface& s, const std::vector<CoxPoint>& points);

struct CoverStats {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t roundtrip_failures = 0;
    std::size_t exceptional_points = 0;  // points on an exceptional divisor
    std::size_t boundary_points = 0;     // points with a zero Cox coordinate
    bool all_ok() const { return successes == trials; }
};

/// Random point with small nonzero coordinates on a random torus orbit.
CoxPoint random_cox_point(std::mt19937_64& rng, const Fan2D& fan);
CoverStats verify_cover_property(const Surface& s, std::size_t trials, std::size_t points_per_trial,
                                 std::uint64_t seed);

// JSON formats.
//   surface: {"base": "P2"} | {"base": "Fn", "n": 2}, optional "blowups": [k, ...]
//   point:   {"cox": [x_1, ...]} | {"cone": k, "uv": [u, w]}
// Rationals are integers or "p/q" strings.
SurfaceSpec surface_from_json(const nlohmann::json& j);
nlohmann::json surface_to_json(const SurfaceSpec& s);
CoxPoint toric_point_from_json(const Fan2D& fan, const nlohmann::json& j);
nlohmann::json chart_result_to_json(const ChartResult& r);
nlohmann::json stats_to_json(const CoverStats& s);

}  // namespace dcrit
