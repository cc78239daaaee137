#include "dcrit/ext_complex.hpp"

#include <stdexcept>

namespace dcrit {

namespace {

PolyGrid zero_grid(const TablePtr& t, int n)
{
    return PolyGrid(static_cast<std::size_t>(n), std::vector<SuperPoly>(static_cast<std::size_t>(n), SuperPoly(t)));
}

PolyGrid unit_grid(const TablePtr& t, int n, int i, int j)
{
    auto g = zero_grid(t, n);
    g[i][j] = SuperPoly::constant(t, Rational(1));
    return g;
}

PolyGrid identity_grid(const TablePtr& t, int n)
{
    auto g = zero_grid(t, n);
    for (int i = 0; i < n; ++i)
        g[i][i] = SuperPoly::constant(t, Rational(1));
    return g;
}

void grid_add(PolyGrid& a, const PolyGrid& b, const Rational& c)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!b[i][j].is_zero())
                a[i][j] += c * b[i][j];
}

// (-1)^{|a|} a, termwise.
SuperPoly shift_sign(const SuperPoly& a)
{
    SuperPoly r(a.table());
    for (const auto& [m, c] : a.terms())
        r.add_term(m, monomial_odd(*a.table(), m) ? -c : c);
    return r;
}

// Value on `e` of the derivation of degree p with theta(g) = E, theta = 0 on
// the other generators.
PolyGrid derivation_on(const DModuleAction& act, NCGen g, const PolyGrid& E, int p, const NCElement& e)
{
    auto out = zero_grid(act.table, act.n);
    for (const auto& [w, c] : e.terms()) {
        int prefix_degree = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == g) {
                PolyGrid m = identity_grid(act.table, act.n);
                for (std::size_t l = 0; l < k; ++l)
                    m = grid_mul(m, act.matrix(w[l]));
                m = grid_mul(m, E);
                for (std::size_t l = k + 1; l < w.size(); ++l)
                    m = grid_mul(m, act.matrix(w[l]));
                bool negative = ((p * prefix_degree) & 1) != 0;
                grid_add(out, m, negative ? -c : c);
            }
            prefix_degree += nc_degree(w[k]);
        }
    }
    return out;
}

int theta_degree(NCGen g) { return 1 - nc_degree(g); }

std::size_t theta_index(int n, NCGen g, int i, int j)
{
    auto nn = static_cast<std::size_t>(n * n);
    auto local = static_cast<std::size_t>(i * n + j);
    switch (g) {
    case NCGen::x: case NCGen::u: return local;
    case NCGen::y: case NCGen::v: return nn + local;
    case NCGen::z: case NCGen::w: return 2 * nn + local;
    case NCGen::t: return local;
    }
    return local;
}

std::string pos(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

ExtComplexL build_ext_complex(int n)
{
    if (n < 1)
        throw std::invalid_argument("build_ext_complex: n must be >= 1");
    auto act = build_universal_family(n);
    const auto& t = act.table;
    auto nn = static_cast<std::size_t>(n * n);
    FreeComplex c(t, 0, {nn, 3 * nn, 3 * nn, nn});
    c.set_base(koszul_derivation(n));

    auto add_image = [&](int from_degree, std::size_t k, NCGen h, const PolyGrid& img) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!img[a][b].is_zero())
                    c.component(from_degree, theta_degree(h)).add(theta_index(n, h, a, b), k, shift_sign(img[a][b]));
    };

    std::vector<std::string> l0, l1(3 * nn), l2(3 * nn), l3(nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto E = unit_grid(t, n, i, j);
            auto k = static_cast<std::size_t>(i * n + j);
            l0.push_back("phi" + pos(i, j));
            // -ad_E(g) = M_g E - E M_g
            for (auto h : kNCGens) {
                auto img = grid_mul(act.matrix(h), E);
                grid_add(img, grid_mul(E, act.matrix(h)), Rational(-1));
                add_image(0, k, h, img);
            }
            for (auto g : kNCGens) {
                int p = -nc_degree(g);
                auto idx = theta_index(n, g, i, j);
                std::string label = std::string("theta_") + nc_letter(g) + pos(i, j);
                (theta_degree(g) == 1 ? l1 : theta_degree(g) == 2 ? l2 : l3)[idx] = label;
                // -D_Der theta(h) = (-1)^p theta(dh), d(theta(h)) = 0 for constant E
                for (auto h : kNCGens) {
                    auto dh = nc_generator_differential(h);
                    if (dh.is_zero())
                        continue;
                    auto img = derivation_on(act, g, E, p, dh);
                    if (p & 1)
                        for (auto& row : img)
                            for (auto& e : row)
                                e = -e;
                    add_image(theta_degree(g), idx, h, img);
                }
            }
        }
    c.set_labels(0, l0);
    c.set_labels(1, l1);
    c.set_labels(2, l2);
    c.set_labels(3, l3);
    return {n, std::move(act), std::move(c)};
}

namespace {

QMatrix word_matrix(const MatrixPoint& pt, const std::string& w)
{
    auto un = static_cast<std::size_t>(pt.n);
    QMatrix m = QMatrix::identity(un, Rational(), Rational(1));
    for (char ch : w)
        m = m.mul(pt.matrix(ch - 'x'), Rational());
    return m;
}

// vec(A psi B) = K vec(psi), row-major vectorisation.
void add_sandwich(QMatrix& out, std::size_t row0, std::size_t col0, const QMatrix& A, const QMatrix& B, const Rational& c)
{
    std::size_t n = A.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (A(i, k).is_zero())
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!B(l, j).is_zero())
                        out(row0 + i * n + j, col0 + k * n + l) += c * A(i, k) * B(l, j);
            }
}

std::size_t slot_block(GSlot s)
{
    switch (s) {
    case GSlot::x: case GSlot::xs: return 0;
    case GSlot::y: case GSlot::ys: return 1;
    case GSlot::z: case GSlot::zs: return 2;
    default: return 0;
    }
}

}  // namespace

QComplex ext_complex_at(const MatrixPoint& pt, const GinzburgResolution& g)
{
    auto nn = static_cast<std::size_t>(pt.n * pt.n);
    QComplex c;
    c.lo = 0;
    c.ranks = {nn, 3 * nn, 3 * nn, nn};
    c.d = {QMatrix(3 * nn, nn, Rational()), QMatrix(3 * nn, 3 * nn, Rational()), QMatrix(nn, 3 * nn, Rational())};
    auto fill = [&](QMatrix& m, GSlot target) {
        for (const auto& [key, coef] : g.image(target).terms()) {
            const auto& [l, s, r] = key;
            add_sandwich(m, slot_block(target) * nn, slot_block(s) * nn, word_matrix(pt, l), word_matrix(pt, r), coef);
        }
    };
    for (auto s : {GSlot::x, GSlot::y, GSlot::z})
        fill(c.d[0], s);
    for (auto s : {GSlot::xs, GSlot::ys, GSlot::zs})
        fill(c.d[1], s);
    fill(c.d[2], GSlot::R);
    return c;
}

std::vector<Vec<Rational>> cohomology_representatives(const QComplex& c, int p)
{
    auto k = static_cast<std::size_t>(p - c.lo);
    if (k >= c.ranks.size())
        throw std::out_of_range("cohomology_representatives: degree out of range");
    std::size_t dim = c.ranks[k];
    std::vector<Vec<Rational>> cycles;
    if (k < c.d.size())
        cycles = kernel_basis(c.d[k]);
    else
        for (std::size_t i = 0; i < dim; ++i) {
            Vec<Rational> e(dim, Rational());
            e[i] = 1;
            cycles.push_back(e);
        }
    std::vector<Vec<Rational>> span;
    if (k > 0) {
        const auto& d = c.d[k - 1];
        for (std::size_t j = 0; j < d.cols(); ++j) {
            Vec<Rational> col(dim);
            for (std::size_t i = 0; i < dim; ++i)
                col[i] = d(i, j);
            span.push_back(col);
        }
    }
    std::size_t current = span.empty() ? 0 : rank(columns_to_matrix(span, dim, Rational()));
    std::vector<Vec<Rational>> reps;
    for (const auto& z : cycles) {
        span.push_back(z);
        auto r = rank(columns_to_matrix(span, dim, Rational()));
        if (r > current) {
            current = r;
            reps.push_back(z);
        } else {
            span.pop_back();
        }
    }
    return reps;
}

QMatrix serre_pairing_matrix(int n, int k)
{
    auto un = static_cast<std::size_t>(n);
    auto nn = un * un;
    std::size_t blocks = (k == 0 || k == 3) ? 1 : 3;
    QMatrix g(blocks * nn, blocks * nn, Rational());
    // tr(E_ij E_kl) = [j == k][i == l]
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j)
                g(b * nn + i * un + j, b * nn + j * un + i) = 1;
    return g;
}

bool ExtAtPoint::pairing_perfect() const
{
    for (const auto& p : pairings) {
        auto a = dims.at(p.degree), b = dims.at(3 - p.degree);
        if (!p.well_defined || a != b || p.rank != a)
            return false;
    }
    return true;
}

namespace {

Rational bilinear(const Vec<Rational>& a, const QMatrix& g, const Vec<Rational>& b)
{
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!g(i, j).is_zero() && !b[j].is_zero())
                s += a[i] * g(i, j) * b[j];
    }
    return s;
}

std::vector<Vec<Rational>> boundary_columns(const QComplex& c, int p)
{
    std::vector<Vec<Rational>> out;
    auto k = static_cast<std::size_t>(p - c.lo);
    if (k == 0)
        return out;
    const auto& d = c.d[k - 1];
    for (std::size_t j = 0; j < d.cols(); ++j) {
        Vec<Rational> col(d.rows());
        for (std::size_t i = 0; i < d.rows(); ++i)
            col[i] = d(i, j);
        out.push_back(col);
    }
    return out;
}

std::vector<Vec<Rational>> cycle_basis(const QComplex& c, int p)
{
    auto k = static_cast<std::size_t>(p - c.lo);
    if (k < c.d.size())
        return kernel_basis(c.d[k]);
    std::vector<Vec<Rational>> out;
    for (std::size_t i = 0; i < c.ranks[k]; ++i) {
        Vec<Rational> e(c.ranks[k], Rational());
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

}  // namespace

ExtAtPoint ext_dims_from(const QComplex& c, const std::function<QMatrix(int)>& pairing)
{
    ExtAtPoint out;
    out.dims = homology_dims(c);
    for (const auto& [p, d] : out.dims)
        out.euler += ((p & 1) ? -1 : 1) * static_cast<long>(d);
    for (int k : {0, 1}) {
        SerrePairing sp;
        sp.degree = k;
        auto g = pairing(k);
        auto left = cohomology_representatives(c, k);
        auto right = cohomology_representatives(c, 3 - k);
        sp.matrix = QMatrix(left.size(), right.size(), Rational());
        for (std::size_t a = 0; a < left.size(); ++a)
            for (std::size_t b = 0; b < right.size(); ++b)
                sp.matrix(a, b) = bilinear(left[a], g, right[b]);
        sp.rank = sp.matrix.rows() && sp.matrix.cols() ? rank(sp.matrix) : 0;
        for (const auto& bd : boundary_columns(c, k))
            for (const auto& z : cycle_basis(c, 3 - k))
                sp.well_defined = sp.well_defined && bilinear(bd, g, z).is_zero();
        for (const auto& z : cycle_basis(c, k))
            for (const auto& bd : boundary_columns(c, 3 - k))
                sp.well_defined = sp.well_defined && bilinear(z, g, bd).is_zero();
        out.pairings.push_back(std::move(sp));
    }
    return out;
}

ExtAtPoint ext_dims_at(const MatrixPoint& pt)
{
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}})
        if (!commutator(pt.matrix(a), pt.matrix(b)).is_zero())
            throw std::invalid_argument("ext_dims_at: the point is not a commuting triple");
    return ext_dims_from(ext_complex_at(pt), [&](int k) { return serre_pairing_matrix(pt.n, k); });
}

FreeComplex build_tangent_complex(const CotangentComplexModel& cot)
{
    auto nn = static_cast<std::size_t>(cot.n * cot.n);
    FreeComplex t(cot.base, 0, {nn, 3 * nn, 3 * nn, nn});
    t.component(0, 1) = cot.complex.differential(0).transpose();
    t.component(1, 2) = cot.complex.differential(-1).transpose();
    t.component(2, 3) = cot.complex.differential(-2).transpose();
    std::vector<std::vector<std::string>> labels(4);
    for (int p = -2; p <= 1; ++p)
        for (const auto& l : cot.complex.labels(p))
            labels[static_cast<std::size_t>(1 - p)].push_back("dual " + l);
    for (int p = 0; p <= 3; ++p)
        t.set_labels(p, labels[static_cast<std::size_t>(p)]);
    return t;
}

ComparisonMap build_comparison_map(int n)
{
    ComparisonMap m{n, build_cotangent_complex(n), FreeComplex(GeneratorTable::canonical(n, false), 0, {1}),
                    build_ext_complex(n), {}};
    m.tangent = build_tangent_complex(m.cotangent);
    const auto& t = m.cotangent.base;
    auto un = static_cast<std::size_t>(n);
    auto nn = un * un;
    auto one = SuperPoly::constant(t, Rational(1));
    PolyMatrix p0(t, nn, nn), p1(t, 3 * nn, 3 * nn), p2(t, 3 * nn, 3 * nn), p3(t, nn, nn);
    for (std::size_t k = 0; k < nn; ++k) {
        p0.set(k, k, one);
        p3.set(k, k, -one);
    }
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) {
                p1.set(b * nn + i * un + j, b * nn + i * un + j, one);
                p2.set(b * nn + j * un + i, b * nn + i * un + j, -one);
            }
    m.phi.emplace(0, std::move(p0));
    m.phi.emplace(1, std::move(p1));
    m.phi.emplace(2, std::move(p2));
    m.phi.emplace(3, std::move(p3));
    return m;
}

std::map<int, QMatrix> ComparisonMap::numeric_phi() const
{
    std::map<int, QMatrix> out;
    for (const auto& [p, mat] : phi)
        out[p] = mat.evaluate([](std::uint16_t) { return Rational(); });
    return out;
}

ChainMapVerdict check_comparison_at(const ComparisonMap& m, const MatrixPoint& pt)
{
    auto value = point_assignment(pt, m.cotangent.base);
    return check_chain_map(evaluate_at(m.tangent, value), ext_complex_at(pt), m.numeric_phi());
}

bool is_signed_permutation(const QMatrix& m)
{
    if (m.rows() != m.cols())
        return false;
    std::vector<int> col_count(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& e = m(i, j);
            if (e.is_zero())
                continue;
            if (e != Rational(1) && e != Rational(-1))
                return false;
            ++row_count;
            ++col_count[j];
        }
        if (row_count != 1)
            return false;
    }
    for (int c : col_count)
        if (c != 1)
            return false;
    return true;
}

}  // namespace dcrit
