#include "dcrit/toric.hpp"

#include "dcrit/json_util.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcrit {

namespace {

long det(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational rpow(const Rational& x, long e)
{
    Rational base = e < 0 ? x.inverse() : x;
    Rational r(1);
    for (long k = 0; k < std::labs(e); ++k)
        r *= base;
    return r;
}

}  // namespace

bool Fan2D::smooth_complete() const
{
    if (rays.size() < 3)
        return false;
    double total = 0;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        const Ray& a = ray(k);
        const Ray& b = ray(k + 1);
        if (det(a, b) != 1)
            return false;
        double turn = std::atan2(static_cast<double>(b[1]), static_cast<double>(b[0])) -
                      std::atan2(static_cast<double>(a[1]), static_cast<double>(a[0]));
        while (turn <= 0)
            turn += 2 * M_PI;
        total += turn;
    }
    return std::fabs(total - 2 * M_PI) < 1e-6;
}

std::vector<long> Fan2D::self_intersections() const
{
    std::vector<long> out;
    const std::size_t r = rays.size();
    for (std::size_t k = 0; k < r; ++k) {
        const Ray& prev = ray(k + r - 1);
        const Ray& next = ray(k + 1);
        const Ray& v = ray(k);
        Ray s{prev[0] + next[0], prev[1] + next[1]};
        if (det(s, v) != 0)
            throw std::logic_error("self_intersections: fan is not smooth");
        long a = v[0] != 0 ? s[0] / v[0] : s[1] / v[1];
        out.push_back(-a);
    }
    return out;
}

Fan2D Fan2D::blown_up(std::size_t cone) const
{
    if (cone >= rays.size())
        throw std::invalid_argument("blown_up: cone index " + std::to_string(cone) + " out of range (fan has " +
                                    std::to_string(rays.size()) + " cones)");
    Fan2D out = *this;
    const Ray& a = ray(cone);
    const Ray& b = ray(cone + 1);
    out.rays.insert(out.rays.begin() + static_cast<long>(cone) + 1, Ray{a[0] + b[0], a[1] + b[1]});
    return out;
}

bool fans_isomorphic(const Fan2D& a, const Fan2D& b)
{
    const std::size_t r = a.size();
    if (r != b.size() || r < 2)
        return false;
    const Ray& r0 = a.ray(0);
    const Ray& r1 = a.ray(1);
    long d = det(r0, r1);
    if (d != 1 && d != -1)
        return false;
    for (std::size_t j = 0; j < r; ++j)
        for (int orient : {1, -1}) {
            auto target = [&](std::size_t k) -> const Ray& {
                long idx = static_cast<long>(j) + orient * static_cast<long>(k);
                idx %= static_cast<long>(r);
                if (idx < 0)
                    idx += static_cast<long>(r);
                return b.ray(static_cast<std::size_t>(idx));
            };
            const Ray& t0 = target(0);
            const Ray& t1 = target(1);
            // A = [t0 t1] [r0 r1]^{-1}, with [r0 r1]^{-1} = adj / d
            long m00 = t0[0] * r1[1] - t1[0] * r0[1], m01 = -t0[0] * r1[0] + t1[0] * r0[0];
            long m10 = t0[1] * r1[1] - t1[1] * r0[1], m11 = -t0[1] * r1[0] + t1[1] * r0[0];
            if (m00 % d || m01 % d || m10 % d || m11 % d)
                continue;
            m00 /= d, m01 /= d, m10 /= d, m11 /= d;
            bool ok = true;
            for (std::size_t k = 0; k < r && ok; ++k) {
                const Ray& v = a.ray(k);
                Ray img{m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
                ok = img == target(k);
            }
            if (ok)
                return true;
        }
    return false;
}

Surface build_surface(const SurfaceSpec& spec)
{
    Surface s;
    s.spec = spec;
    Fan2D base;
    if (spec.base == SurfaceSpec::Base::P2) {
        base.rays = {{1, 0}, {0, 1}, {-1, -1}};
    } else {
        if (spec.hirzebruch < 0)
            throw std::invalid_argument("build_surface: F_n needs n >= 0");
        long n = spec.hirzebruch;
        base.rays = {{1, 0}, {0, 1}, {-1, -n}, {0, -1}};
    }
    s.levels.push_back(base);
    for (auto cone : spec.blowups)
        s.levels.push_back(s.levels.back().blown_up(cone));
    for (const auto& f : s.levels)
        if (!f.smooth_complete())
            throw std::logic_error("build_surface: constructed fan is not smooth and complete");
    return s;
}

bool valid_cox_point(const Fan2D& fan, const CoxPoint& p)
{
    const std::size_t r = fan.size();
    if (p.size() != r)
        return false;
    std::vector<std::size_t> zeros;
    for (std::size_t k = 0; k < r; ++k)
        if (p[k].is_zero())
            zeros.push_back(k);
    if (zeros.size() <= 1)
        return true;
    if (zeros.size() > 2)
        return false;
    return zeros[1] == zeros[0] + 1 || (zeros[0] == 0 && zeros[1] == r - 1);
}

std::optional<std::array<Rational, 2>> cone_coordinates(const Fan2D& fan, std::size_t cone, const CoxPoint& p)
{
    const std::size_t r = fan.size();
    if (p.size() != r || cone >= r)
        throw std::invalid_argument("cone_coordinates: bad cone or point length");
    const std::size_t k1 = (cone + 1) % r;
    for (std::size_t j = 0; j < r; ++j)
        if (j != cone && j != k1 && p[j].is_zero())
            return std::nullopt;
    const Ray& v = fan.ray(cone);
    const Ray& w = fan.ray(k1);
    // dual basis of (v, w)
    Ray m1{w[1], -w[0]}, m2{-v[1], v[0]};
    Rational u(1), x(1);
    for (std::size_t j = 0; j < r; ++j) {
        const Ray& vj = fan.ray(j);
        long e1 = m1[0] * vj[0] + m1[1] * vj[1];
        long e2 = m2[0] * vj[0] + m2[1] * vj[1];
        if (e1)
            u *= rpow(p[j], e1);
        if (e2)
            x *= rpow(p[j], e2);
    }
    return std::array<Rational, 2>{u, x};
}

CoxPoint point_in_cone(const Fan2D& fan, std::size_t cone, const Rational& u, const Rational& w)
{
    CoxPoint p(fan.size(), Rational(1));
    p[cone % fan.size()] = u;
    p[(cone + 1) % fan.size()] = w;
    return p;
}

bool same_point(const Fan2D& fan, const CoxPoint& a, const CoxPoint& b)
{
    if (!valid_cox_point(fan, a) || !valid_cox_point(fan, b))
        return false;
    for (std::size_t k = 0; k < fan.size(); ++k) {
        auto ca = cone_coordinates(fan, k, a);
        if (!ca)
            continue;
        auto cb = cone_coordinates(fan, k, b);
        return cb && *ca == *cb;
    }
    return false;
}

CoxPoint blow_down(const Fan2D& fan, std::size_t cone, const CoxPoint& p)
{
    const std::size_t r = fan.size();
    if (p.size() != r + 1)
        throw std::invalid_argument("blow_down: point has the wrong length");
    const std::size_t pos = cone + 1;
    const Rational& e = p[pos];
    CoxPoint out;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (j != pos)
            out.push_back(p[j]);
    out[cone] *= e;
    out[(cone + 1) % r] *= e;
    return out;
}

Poly Poly::constant(std::size_t nvars, const Rational& c)
{
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i)
{
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Poly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars_)
        throw std::invalid_argument("Poly: exponent vector of the wrong length");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(a.nvars_);
    Poly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Rational& c, const Poly& a)
{
    Poly r(a.nvars_);
    for (const auto& [e, x] : a.terms_)
        r.add_term(e, c * x);
    return r;
}

Poly Poly::pow(int k) const
{
    Poly r = constant(nvars_, Rational(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& x) const
{
    if (x.size() != nvars_)
        throw std::invalid_argument("Poly::evaluate: wrong number of values");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < nvars_ && !t.is_zero(); ++k)
            if (e[k])
                t *= rpow(x[k], e[k]);
        total += t;
    }
    return total;
}

Poly Poly::compose(const std::vector<Poly>& args) const
{
    if (args.size() != nvars_ || args.empty())
        throw std::invalid_argument("Poly::compose: wrong number of arguments");
    const std::size_t m = args.front().nvars();
    Poly r(m);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(m, c);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k])
                t = t * args[k].pow(e[k]);
        r += t;
    }
    return r;
}

std::optional<Poly> Poly::divide_by_variable(std::size_t i) const
{
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(i) == 0)
            return std::nullopt;
        Exponents f = e;
        --f[i];
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::pullback(std::size_t pos, std::size_t left, std::size_t right) const
{
    Poly r(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.insert(f.begin() + static_cast<long>(pos), e.at(left) + e.at(right));
        r.add_term(f, c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first reads more naturally
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
    for (const auto& [e, c] : ordered) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        first = false;
        bool monomial = false;
        std::ostringstream m;
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (!e[k])
                continue;
            m << (monomial ? "*" : "") << names.at(k);
            if (e[k] > 1)
                m << '^' << e[k];
            monomial = true;
        }
        if (!monomial)
            os << a;
        else if (a.is_one())
            os << m.str();
        else
            os << a << '*' << m.str();
    }
    return os.str();
}

std::optional<Rational> RationalFunction::evaluate(const std::vector<Rational>& x) const
{
    Rational d = den.evaluate(x);
    if (d.is_zero())
        return std::nullopt;
    return num.evaluate(x) / d;
}

bool Chart::contains(const CoxPoint& p) const { return coordinates(p).has_value(); }

std::optional<std::array<Rational, 2>> Chart::coordinates(const CoxPoint& p) const
{
    auto x = a.evaluate(p);
    auto y = b.evaluate(p);
    if (!x || !y)
        return std::nullopt;
    return std::array<Rational, 2>{*x, *y};
}

CoxPoint Chart::embed(const Rational& x, const Rational& y) const
{
    CoxPoint out;
    for (const auto& poly : embedding)
        out.push_back(poly.evaluate({x, y}));
    return out;
}

namespace {

std::vector<std::string> cox_names(std::size_t r)
{
    std::vector<std::string> names;
    for (std::size_t k = 0; k < r; ++k)
        names.push_back("x" + std::to_string(k));
    return names;
}

bool contains_all(const Chart& c, const std::vector<CoxPoint>& pts)
{
    return std::all_of(pts.begin(), pts.end(), [&](const CoxPoint& p) { return c.contains(p); });
}

// Complement of the line x0 + t x1 + t^2 x2 = 0.
Chart p2_chart(long t)
{
    const std::size_t r = 3;
    Poly x0 = Poly::variable(r, 0), x1 = Poly::variable(r, 1), x2 = Poly::variable(r, 2);
    Poly line = x0 + Rational(t) * x1 + Rational(t * t) * x2;
    Chart c;
    c.a = {x1, line};
    c.b = {x2, line};
    Poly a = Poly::variable(2, 0), b = Poly::variable(2, 1);
    c.embedding = {Poly::constant(2, Rational(1)) - Rational(t) * a - Rational(t * t) * b, a, b};
    c.datum = {{"surface", "P2"},
               {"removed_line", {1, t, t * t}},
               {"description", "complement of " + line.str(cox_names(r)) + " = 0"}};
    return c;
}

// Complement of the fiber x0 + t x2 = 0 and the section
// x1 = c (x0 + t x2)^n x3, which is disjoint from the negative section x3 = 0.
Chart fn_chart(int n, long t, long s)
{
    const std::size_t r = 4;
    Poly x0 = Poly::variable(r, 0), x1 = Poly::variable(r, 1), x2 = Poly::variable(r, 2), x3 = Poly::variable(r, 3);
    Poly fiber = x0 + Rational(t) * x2;
    Poly section = x1 - Rational(s) * fiber.pow(n) * x3;
    Chart c;
    c.a = {x2, fiber};
    c.b = {x3 * fiber.pow(n), section};
    Poly a = Poly::variable(2, 0), b = Poly::variable(2, 1), one = Poly::constant(2, Rational(1));
    c.embedding = {one - Rational(t) * a, one + Rational(s) * b, a, b};
    auto names = cox_names(r);
    c.datum = {{"surface", "F" + std::to_string(n)},
               {"removed_fiber", {1, t}},
               {"removed_section", s},
               {"description", "complement of " + fiber.str(names) + " = 0 and " + section.str(names) + " = 0"}};
    return c;
}

Chart base_chart(const SurfaceSpec& spec, const std::vector<CoxPoint>& pts)
{
    const long bound = 2 * static_cast<long>(pts.size()) + 1;
    if (spec.base == SurfaceSpec::Base::P2) {
        for (long t = 0; t <= bound; ++t) {
            Chart c = p2_chart(t);
            if (contains_all(c, pts))
                return c;
        }
    } else {
        for (long t = 0; t <= bound; ++t) {
            Chart probe = fn_chart(spec.hirzebruch, t, 0);
            bool fiber_ok = std::all_of(pts.begin(), pts.end(), [&](const CoxPoint& p) {
                return !probe.a.den.evaluate(p).is_zero();
            });
            if (!fiber_ok)
                continue;
            for (long s = 0; s <= bound; ++s) {
                Chart c = fn_chart(spec.hirzebruch, t, s);
                if (contains_all(c, pts))
                    return c;
            }
        }
    }
    throw std::logic_error("find_chart: candidate search exhausted on the base surface");
}

Chart pull_back_outside(const Chart& c, std::size_t cone, std::size_t r, nlohmann::json step)
{
    const std::size_t pos = cone + 1, right = (cone + 1) % r;
    Chart out;
    out.a = {c.a.num.pullback(pos, cone, right), c.a.den.pullback(pos, cone, right)};
    out.b = {c.b.num.pullback(pos, cone, right), c.b.den.pullback(pos, cone, right)};
    out.embedding = c.embedding;
    out.embedding.insert(out.embedding.begin() + static_cast<long>(pos), Poly::constant(2, Rational(1)));
    out.datum = c.datum;
    out.datum["blowups"].push_back(std::move(step));
    return out;
}

// Bl_q(C^2) minus the strict transform of the line through q with
// direction (t, 1). New coordinates x' = alpha, s = beta / alpha with
// alpha = (a - a_q) - t (b - b_q), beta = b - b_q.
Chart blowup_chart(const Chart& c, std::size_t cone, std::size_t r, const std::array<Rational, 2>& q, long t)
{
    const std::size_t pos = cone + 1, right = (cone + 1) % r;
    const auto& A = c.a;
    const auto& B = c.b;
    Poly alpha_num = (A.num - q[0] * A.den) * B.den - Rational(t) * (B.num - q[1] * B.den) * A.den;
    Poly alpha_den = A.den * B.den;
    Poly beta_num = B.num - q[1] * B.den;
    auto up = [&](const Poly& p) { return p.pullback(pos, cone, right); };
    Poly an = up(alpha_num), ad = up(alpha_den), bn = up(beta_num);
    auto an1 = an.divide_by_variable(pos);
    auto bn1 = bn.divide_by_variable(pos);
    if (!an1 || !bn1)
        throw std::logic_error("blowup_chart: coordinate does not vanish along the exceptional divisor");
    Chart out;
    out.a = {an, ad};
    out.b = {*bn1 * up(A.den), *an1};

    Poly xp = Poly::variable(2, 0), s = Poly::variable(2, 1);
    std::vector<Poly> sub = {Poly::constant(2, q[0]) + xp + Rational(t) * s * xp, Poly::constant(2, q[1]) + s * xp};
    std::vector<Poly> lower;
    for (const auto& y : c.embedding)
        lower.push_back(y.compose(sub));
    auto yl = lower[cone].divide_by_variable(0);
    auto yr = lower[right].divide_by_variable(0);
    if (!yl || !yr)
        throw std::logic_error("blowup_chart: embedding does not pass through the center");
    lower[cone] = *yl;
    lower[right] = *yr;
    lower.insert(lower.begin() + static_cast<long>(pos), xp);
    out.embedding = std::move(lower);

    out.datum = c.datum;
    out.datum["blowups"].push_back({{"cone", cone},
                                    {"center_in_chart", true},
                                    {"center", {rational_to_json(q[0]), rational_to_json(q[1])}},
                                    {"removed_direction", {t, 1}}});
    return out;
}

Chart chart_at_level(const Surface& s, std::size_t level, const std::vector<CoxPoint>& pts)
{
    if (level == 0) {
        Chart c = base_chart(s.spec, pts);
        c.datum["blowups"] = nlohmann::json::array();
        return c;
    }
    const Fan2D& below = s.levels[level - 1];
    const std::size_t cone = s.spec.blowups[level - 1];
    std::vector<CoxPoint> down;
    for (const auto& p : pts)
        down.push_back(blow_down(below, cone, p));
    Chart c = chart_at_level(s, level - 1, down);
    auto q = c.coordinates(point_in_cone(below, cone, Rational(), Rational()));
    if (!q)
        return pull_back_outside(c, cone, below.size(), {{"cone", cone}, {"center_in_chart", false}});
    const long bound = static_cast<long>(pts.size()) + 1;
    for (long t = 0; t <= bound; ++t) {
        Chart up = blowup_chart(c, cone, below.size(), *q, t);
        if (contains_all(up, pts))
            return up;
    }
    throw std::logic_error("find_chart: no fiber of the exceptional family avoids the points");
}

}  // namespace

ChartResult find_chart(const Surface& s, const std::vector<CoxPoint>& points)
{
    for (const auto& p : points)
        if (!valid_cox_point(s.fan(), p))
            throw std::invalid_argument("find_chart: invalid Cox point for this surface");
    ChartResult r;
    r.chart = chart_at_level(s, s.levels.size() - 1, points);
    r.roundtrip = true;
    for (const auto& p : points) {
        auto xy = r.chart.coordinates(p);
        if (!xy)
            throw std::logic_error("find_chart: selected chart misses a point");
        r.coordinates.push_back(*xy);
        CoxPoint back = r.chart.embed((*xy)[0], (*xy)[1]);
        r.roundtrip = r.roundtrip && same_point(s.fan(), back, p) && r.chart.coordinates(back) == xy;
    }
    return r;
}

CoxPoint random_cox_point(std::mt19937_64& rng, const Fan2D& fan)
{
    const std::size_t r = fan.size();
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    CoxPoint p(r);
    for (auto& x : p)
        x = Rational(values[rng() % 6], 1 + static_cast<long>(rng() % 2));
    auto kind = rng() % 10;
    if (kind >= 9) {
        std::size_t k = rng() % r;
        p[k] = Rational();
        p[(k + 1) % r] = Rational();
    } else if (kind >= 6) {
        p[rng() % r] = Rational();
    }
    return p;
}

CoverStats verify_cover_property(const Surface& s, std::size_t trials, std::size_t points_per_trial,
                                 std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const Fan2D& fan = s.fan();
    const Fan2D& base = s.levels.front();
    std::vector<bool> exceptional(fan.size());
    for (std::size_t k = 0; k < fan.size(); ++k)
        exceptional[k] = std::find(base.rays.begin(), base.rays.end(), fan.rays[k]) == base.rays.end();
    CoverStats st;
    st.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<CoxPoint> pts;
        for (std::size_t k = 0; k < points_per_trial; ++k) {
            pts.push_back(random_cox_point(rng, fan));
            const auto& p = pts.back();
            bool boundary = false, exc = false;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p[j].is_zero()) {
                    boundary = true;
                    exc = exc || exceptional[j];
                }
            st.boundary_points += boundary ? 1 : 0;
            st.exceptional_points += exc ? 1 : 0;
        }
        try {
            auto r = find_chart(s, pts);
            if (r.roundtrip)
                ++st.successes;
            else
                ++st.roundtrip_failures;
        } catch (const std::logic_error&) {
        }
    }
    return st;
}

SurfaceSpec surface_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("base") || !j["base"].is_string())
        throw std::invalid_argument("surface JSON: missing base");
    SurfaceSpec s;
    auto base = j["base"].get<std::string>();
    if (base == "P2") {
        s.base = SurfaceSpec::Base::P2;
    } else if (base == "Fn") {
        if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0)
            throw std::invalid_argument("surface JSON: Fn needs an integer n >= 0");
        s.base = SurfaceSpec::Base::Fn;
        s.hirzebruch = j["n"].get<int>();
    } else {
        throw std::invalid_argument("surface JSON: base must be \"P2\" or \"Fn\"");
    }
    if (j.contains("blowups")) {
        if (!j["blowups"].is_array())
            throw std::invalid_argument("surface JSON: blowups must be an array");
        for (const auto& k : j["blowups"]) {
            if (!k.is_number_integer() || k.get<long>() < 0)
                throw std::invalid_argument("surface JSON: blowup centers are cone indices >= 0");
            s.blowups.push_back(k.get<std::size_t>());
        }
    }
    return s;
}

nlohmann::json surface_to_json(const SurfaceSpec& s)
{
    nlohmann::json j;
    j["base"] = s.base == SurfaceSpec::Base::P2 ? "P2" : "Fn";
    if (s.base == SurfaceSpec::Base::Fn)
        j["n"] = s.hirzebruch;
    j["blowups"] = s.blowups;
    return j;
}

CoxPoint toric_point_from_json(const Fan2D& fan, const nlohmann::json& j)
{
    CoxPoint p;
    if (j.is_object() && j.contains("cox")) {
        if (!j["cox"].is_array())
            throw std::invalid_argument("point JSON: cox must be an array");
        for (const auto& x : j["cox"])
            p.push_back(rational_from_json(x));
    } else if (j.is_object() && j.contains("cone") && j.contains("uv")) {
        if (!j["cone"].is_number_integer() || j["cone"].get<long>() < 0 ||
            j["cone"].get<std::size_t>() >= fan.size())
            throw std::invalid_argument("point JSON: cone index out of range");
        if (!j["uv"].is_array() || j["uv"].size() != 2)
            throw std::invalid_argument("point JSON: uv must have two entries");
        p = point_in_cone(fan, j["cone"].get<std::size_t>(), rational_from_json(j["uv"][0]),
                          rational_from_json(j["uv"][1]));
    } else {
        throw std::invalid_argument("point JSON: expected {\"cox\": [...]} or {\"cone\": k, \"uv\": [u, w]}");
    }
    if (!valid_cox_point(fan, p))
        throw std::invalid_argument("point JSON: not a point of the surface (wrong length or zeros outside a cone)");
    return p;
}

nlohmann::json chart_result_to_json(const ChartResult& r)
{
    nlohmann::json j;
    j["chart"] = r.chart.datum;
    j["coordinates"] = nlohmann::json::array();
    for (const auto& c : r.coordinates)
        j["coordinates"].push_back({rational_to_json(c[0]), rational_to_json(c[1])});
    j["roundtrip"] = r.roundtrip;
    return j;
}

nlohmann::json stats_to_json(const CoverStats& s)
{
    return {{"trials", s.trials},
            {"successes", s.successes},
            {"roundtrip_failures", s.roundtrip_failures},
            {"boundary_points", s.boundary_points},
            {"exceptional_points", s.exceptional_points}};
}

}  // namespace dcrit
