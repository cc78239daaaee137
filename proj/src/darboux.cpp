#include "dcrit/darboux.hpp"

#include "dcrit/poly_text.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace dcrit {

namespace {

constexpr std::array<Block, 3> kDerhamZero = {Block::dX0, Block::dY0, Block::dZ0};
constexpr std::array<Block, 3> kDerhamMinusOne = {Block::dXm1, Block::dYm1, Block::dZm1};

std::string first_term(const SuperPoly& p)
{
    if (p.is_zero())
        return "0";
    const auto& [m, c] = *p.terms().begin();
    return format_poly(SuperPoly::monomial(p.table(), m, c));
}

Verdict mismatch(const std::string& where, const SuperPoly& diff)
{
    return {false, Failure{where, 0, 0, first_term(diff)}, ""};
}

std::size_t local_index(int n, int i, int j)
{
    return static_cast<std::size_t>((i - 1) * n + (j - 1));
}

}  // namespace

PolyGrid generator_matrix(const TablePtr& t, Block b, bool transposed)
{
    int n = t->rank();
    PolyGrid m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1].push_back(transposed ? SuperPoly::generator(t, b, j, i) : SuperPoly::generator(t, b, i, j));
    return m;
}

PolyGrid grid_mul(const PolyGrid& a, const PolyGrid& b)
{
    std::size_t n = a.size();
    const auto& t = a.at(0).at(0).table();
    PolyGrid r(n, std::vector<SuperPoly>(n, SuperPoly(t)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

PolyGrid grid_commutator(const PolyGrid& a, const PolyGrid& b)
{
    PolyGrid ab = grid_mul(a, b), ba = grid_mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j)
            ab[i][j] -= ba[i][j];
    return ab;
}

SuperPoly build_potential(int n)
{
    if (n < 1)
        throw std::invalid_argument("build_potential: n must be >= 1");
    auto t = GeneratorTable::canonical(n, false);
    auto x = generator_matrix(t, Block::X0);
    auto yz = grid_commutator(generator_matrix(t, Block::Y0), generator_matrix(t, Block::Z0));
    auto m = grid_mul(x, yz);
    SuperPoly w(t);
    for (int i = 0; i < n; ++i)
        w += m[i][i];
    return w;
}

Derivation koszul_derivation(int n, GaugeConvention gauge)
{
    auto t = GeneratorTable::canonical(n, false);
    Derivation d(t, 1, 0);
    PolyGrid dt(static_cast<std::size_t>(n), std::vector<SuperPoly>(static_cast<std::size_t>(n), SuperPoly(t)));
    for (int g = 0; g < 3; ++g) {
        auto c = grid_commutator(generator_matrix(t, kDegreeZero[(g + 1) % 3]),
                                 generator_matrix(t, kDegreeZero[(g + 2) % 3]));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                d.set(t->index(kDegreeMinusOne[g], i, j), c[j - 1][i - 1]);
        auto gauge_term = grid_commutator(generator_matrix(t, kDegreeZero[g]),
                                          generator_matrix(t, kDegreeMinusOne[g], gauge == GaugeConvention::transposed));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dt[i][j] += gauge_term[i][j];
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            d.set(t->index(Block::T, i, j), dt[i - 1][j - 1]);
    return d;
}

Verdict check_derivation_squares_to_zero(const Derivation& d)
{
    const auto& t = *d.table();
    for (std::size_t g = 0; g < t.size(); ++g) {
        auto dd = d.apply(d.image(static_cast<std::uint16_t>(g)));
        if (!dd.is_zero())
            return mismatch("d^2 " + t[g].name, dd);
    }
    return {};
}

namespace {

// Monomials in the negative generators (indices >= first) of total degree
// exactly `degree`.
void enumerate_negative(const GeneratorTable& t, std::uint16_t from, int degree, Monomial& cur,
                        std::vector<Monomial>& out)
{
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t g = from; g < t.size(); ++g) {
        int dg = t[g].degree;
        if (dg >= 0 || dg < degree)
            continue;
        cur.push_back(static_cast<std::uint16_t>(g));
        // odd generators are squarefree, even ones may repeat
        enumerate_negative(t, static_cast<std::uint16_t>(t[g].odd() ? g + 1 : g), degree - dg, cur, out);
        cur.pop_back();
    }
}

}  // namespace

KoszulCdga build_koszul_cdga(int n, int min_degree)
{
    if (n < 1)
        throw std::invalid_argument("build_koszul_cdga: n must be >= 1");
    if (min_degree > 0)
        throw std::invalid_argument("build_koszul_cdga: min_degree must be <= 0");
    auto t = GeneratorTable::canonical(n, false);
    auto d = koszul_derivation(n);
    const auto first_negative = static_cast<std::uint16_t>(3 * n * n);

    std::vector<std::vector<Monomial>> basis;
    std::vector<std::map<Monomial, std::size_t>> where;
    std::vector<std::size_t> ranks;
    for (int p = min_degree; p <= 0; ++p) {
        std::vector<Monomial> b;
        Monomial cur;
        enumerate_negative(*t, first_negative, p, cur, b);
        std::map<Monomial, std::size_t> w;
        for (std::size_t k = 0; k < b.size(); ++k)
            w.emplace(b[k], k);
        ranks.push_back(b.size());
        basis.push_back(std::move(b));
        where.push_back(std::move(w));
    }
    FreeComplex c(t, min_degree, ranks);
    for (int p = min_degree; p <= 0; ++p) {
        auto slot = static_cast<std::size_t>(p - min_degree);
        std::vector<std::string> labels;
        for (const auto& m : basis[slot])
            labels.push_back(m.empty() ? "1" : format_poly(SuperPoly::monomial(t, m, Rational(1))));
        c.set_labels(p, std::move(labels));
        if (p == 0)
            continue;
        auto& comp = c.component(p, p + 1);
        for (std::size_t k = 0; k < basis[slot].size(); ++k) {
            auto image = d.apply(SuperPoly::monomial(t, basis[slot][k], Rational(1)));
            for (const auto& [m, coef] : image.terms()) {
                auto split = std::find_if(m.begin(), m.end(), [&](std::uint16_t g) { return g >= first_negative; });
                Monomial prefix(m.begin(), split), suffix(split, m.end());
                comp.add(where[slot + 1].at(suffix), k, SuperPoly::monomial(t, prefix, coef));
            }
        }
    }
    return {t, std::move(d), std::move(c)};
}

Verdict check_dW_equals_commutators(int n)
{
    auto t = GeneratorTable::canonical(n, false);
    auto w = build_potential(n);
    auto d = koszul_derivation(n);
    for (int g = 0; g < 3; ++g) {
        auto c = grid_commutator(generator_matrix(t, kDegreeZero[(g + 1) % 3]),
                                 generator_matrix(t, kDegreeZero[(g + 2) % 3]));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto& name = (*t)[t->index(kDegreeZero[g], i, j)].name;
                auto partial = w.partial_even(t->index(kDegreeZero[g], i, j));
                if (partial != c[j - 1][i - 1])
                    return mismatch("dW/d" + name + " vs commutator entry", partial - c[j - 1][i - 1]);
                const auto& image = d.image(t->index(kDegreeMinusOne[g], i, j));
                if (image != partial)
                    return mismatch("d(" + (*t)[t->index(kDegreeMinusOne[g], i, j)].name + ") vs dW/d" + name,
                                    image - partial);
            }
    }
    return {};
}

Derivation de_rham_derivation(const TablePtr& derham)
{
    if (!derham->has_derham())
        throw std::invalid_argument("de_rham_derivation: table has no de Rham symbols");
    Derivation dr(derham, 0, 1);
    auto base_count = static_cast<std::uint16_t>(7 * derham->rank() * derham->rank());
    for (std::uint16_t g = 0; g < base_count; ++g)
        dr.set(g, SuperPoly::generator(derham, derham->derham_of(g)));
    return dr;
}

Derivation internal_derivation(const TablePtr& derham)
{
    int n = derham->rank();
    auto base = GeneratorTable::canonical(n, false);
    auto d = koszul_derivation(n);
    auto dr = de_rham_derivation(derham);
    Derivation out(derham, 1, 0);
    for (std::uint16_t g = 0; g < base->size(); ++g) {
        auto image = d.image(g).with_table(derham);
        out.set(derham->derham_of(g), -dr.apply(image));
        out.set(g, std::move(image));
    }
    return out;
}

namespace {

// Infinitesimal adjoint action of E_ab on the generator at (block, i, j).
SuperPoly adjoint_action(const TablePtr& t, Block b, int i, int j, int a, int c)
{
    SuperPoly r(t);
    bool odd_block = b == Block::Xm1 || b == Block::Ym1 || b == Block::Zm1;
    if (!odd_block) {
        if (i == a)
            r += SuperPoly::generator(t, b, c, j);
        if (j == c)
            r -= SuperPoly::generator(t, b, i, a);
    } else {
        // Xm1(i,j) = P(j,i): [E_ac, P](j,i) = [j==a] Xm1(i,c) - [i==c] Xm1(a,j)
        if (j == a)
            r += SuperPoly::generator(t, b, i, c);
        if (i == c)
            r -= SuperPoly::generator(t, b, a, j);
    }
    return r;
}

struct CotangentSlot {
    int degree;
    std::size_t index;
};

CotangentSlot cotangent_slot(int n, std::uint16_t symbol)
{
    auto nn = static_cast<std::size_t>(n * n);
    auto block = static_cast<std::size_t>(symbol) / nn;
    auto local = static_cast<std::size_t>(symbol) % nn;
    switch (static_cast<Block>(block)) {
    case Block::dT: return {-2, local};
    case Block::dXm1: case Block::dYm1: case Block::dZm1:
        return {-1, (block - static_cast<std::size_t>(Block::dXm1)) * nn + local};
    case Block::dX0: case Block::dY0: case Block::dZ0:
        return {0, (block - static_cast<std::size_t>(Block::dX0)) * nn + local};
    case Block::Gv: return {1, local};
    default: throw std::logic_error("cotangent_slot: not a cotangent symbol");
    }
}

}  // namespace

CotangentComplexModel build_cotangent_complex(int n, int coaction_sign)
{
    if (n < 1)
        throw std::invalid_argument("build_cotangent_complex: n must be >= 1");
    auto base = GeneratorTable::canonical(n, false);
    auto derham = GeneratorTable::canonical(n, true);
    auto d = koszul_derivation(n);
    auto dr = de_rham_derivation(derham);
    Derivation D(derham, 1, 0);
    const Rational c(coaction_sign);

    for (std::uint16_t g = 0; g < base->size(); ++g) {
        const auto& gen = (*base)[g];
        auto image = d.image(g).with_table(derham);
        SuperPoly sym_image = -dr.apply(image);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto delta = adjoint_action(derham, gen.block, gen.i, gen.j, a, b);
                if (!delta.is_zero())
                    sym_image += c * (delta * SuperPoly::generator(derham, Block::Gv, a, b));
            }
        D.set(g, std::move(image));
        D.set(derham->derham_of(g), std::move(sym_image));
    }

    auto nn = static_cast<std::size_t>(n * n);
    FreeComplex cx(base, -2, {nn, 3 * nn, 3 * nn, nn});
    cx.set_base(d);
    const auto first_symbol = static_cast<std::uint16_t>(7 * nn);
    auto is_symbol = [&](std::uint16_t g) { return g >= first_symbol; };
    std::vector<std::vector<std::string>> labels(4);
    for (auto s = first_symbol; s < derham->size(); ++s) {
        auto from = cotangent_slot(n, s);
        labels[static_cast<std::size_t>(from.degree + 2)].push_back((*derham)[s].name);
        const auto& image = D.image(s);
        if (image.is_zero())
            continue;
        for (const auto& [sym, coef] : image.split_last(is_symbol)) {
            auto to = cotangent_slot(n, sym);
            cx.component(from.degree, to.degree).add(to.index, from.index, coef.restricted_to(base));
        }
    }
    for (int p = -2; p <= 1; ++p)
        cx.set_labels(p, labels[static_cast<std::size_t>(p + 2)]);
    return {n, base, derham, std::move(D), std::move(cx)};
}

std::size_t cotangent_partner(int n, int p, std::size_t k)
{
    auto nn = static_cast<std::size_t>(n * n);
    if (p == -1 || p == 0) {
        if (k >= 3 * nn)
            throw std::out_of_range("cotangent_partner: index out of range");
        return k;
    }
    if (p == -2 || p == 1) {
        if (k >= nn)
            throw std::out_of_range("cotangent_partner: index out of range");
        auto i = k / static_cast<std::size_t>(n), j = k % static_cast<std::size_t>(n);
        return j * static_cast<std::size_t>(n) + i;
    }
    throw std::invalid_argument("cotangent_partner: degree outside -2..1");
}

Verdict check_self_duality(const CotangentComplexModel& m)
{
    const auto& cx = m.complex;
    auto nn = static_cast<std::size_t>(m.n * m.n);
    std::vector<std::size_t> expected{nn, 3 * nn, 3 * nn, nn};
    if (cx.ranks() != expected)
        return {false, std::nullopt, "ranks differ from (n^2, 3n^2, 3n^2, n^2)"};
    auto a = cx.differential(-2), b = cx.differential(0), h = cx.differential(-1);
    // d^{-2}(l,k) against d^0(partner k, partner l)
    for (std::size_t l = 0; l < a.rows(); ++l)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& lhs = a.at(l, k);
            const auto& rhs = b.at(cotangent_partner(m.n, -2, k), cotangent_partner(m.n, -1, l));
            if (lhs != rhs)
                return {false, Failure{"d^-2 vs transpose of d^0", l + 1, k + 1, first_term(lhs - rhs)}, ""};
        }
    for (std::size_t l = 0; l < h.rows(); ++l)
        for (std::size_t k = 0; k < h.cols(); ++k) {
            const auto& lhs = h.at(l, k);
            const auto& rhs = h.at(cotangent_partner(m.n, -1, k), cotangent_partner(m.n, 0, l));
            if (lhs != rhs)
                return {false, Failure{"d^-1 vs its transpose", l + 1, k + 1, first_term(lhs - rhs)}, ""};
        }
    return {};
}

Verdict check_hessian_block(const CotangentComplexModel& m)
{
    int n = m.n;
    auto nn = static_cast<std::size_t>(n * n);
    const auto& base = m.base;
    const auto& derham = m.derham;
    auto w = build_potential(n);
    auto h = m.complex.differential(-1);
    for (int g = 0; g < 3; ++g)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                auto k = static_cast<std::size_t>(g) * nn + local_index(n, i, j);
                auto first = w.partial_even(base->index(kDegreeZero[g], i, j));
                for (int g2 = 0; g2 < 3; ++g2)
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            auto l = static_cast<std::size_t>(g2) * nn + local_index(n, a, b);
                            auto hess = first.partial_even(base->index(kDegreeZero[g2], a, b));
                            if (h.at(l, k) != -hess)
                                return {false, Failure{"d^-1 vs -Hessian of W", l + 1, k + 1, first_term(h.at(l, k) + hess)}, ""};
                        }
                // (Y0 dZ0)^T + (dY0 Z0)^T - (Z0 dY0)^T - (dZ0 Y0)^T at (i,j), cyclically
                auto y = generator_matrix(derham, kDegreeZero[(g + 1) % 3]);
                auto z = generator_matrix(derham, kDegreeZero[(g + 2) % 3]);
                auto dy = generator_matrix(derham, kDerhamZero[(g + 1) % 3]);
                auto dz = generator_matrix(derham, kDerhamZero[(g + 2) % 3]);
                auto ydz = grid_mul(y, dz), dyz = grid_mul(dy, z), zdy = grid_mul(z, dy), dzy = grid_mul(dz, y);
                SuperPoly formula = ydz[j - 1][i - 1] + dyz[j - 1][i - 1] - zdy[j - 1][i - 1] - dzy[j - 1][i - 1];
                SuperPoly column(derham);
                for (const auto& [key, v] : h.entries())
                    if (key.second == k) {
                        auto g2 = key.first / nn, local = key.first % nn;
                        int a = static_cast<int>(local / static_cast<std::size_t>(n)) + 1;
                        int b = static_cast<int>(local % static_cast<std::size_t>(n)) + 1;
                        column += v.with_table(derham) * SuperPoly::generator(derham, kDerhamZero[g2], a, b);
                    }
                if (column != -formula)
                    return {false, Failure{"d^-1 column vs d_dR of the cdga differential", 0, k + 1, first_term(column + formula)}, ""};
            }
    return {};
}

DeRhamForm build_two_form(int n)
{
    auto t = GeneratorTable::canonical(n, true);
    SuperPoly omega(t);
    for (int g = 0; g < 3; ++g)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                omega += SuperPoly::generator(t, kDerhamMinusOne[g], i, j) * SuperPoly::generator(t, kDerhamZero[g], i, j);
    return {omega, 2, -1};
}

DeRhamForm build_one_form(int n)
{
    auto t = GeneratorTable::canonical(n, true);
    SuperPoly phi(t);
    for (int g = 0; g < 3; ++g)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                phi += SuperPoly::generator(t, kDegreeMinusOne[g], i, j) * SuperPoly::generator(t, kDerhamZero[g], i, j);
    return {phi, 1, -1};
}

SuperPoly build_minus_potential(int n) { return -build_potential(n); }

bool SuperpotentialReport::all_ok() const
{
    return omega_exact.ok && potential_identity.ok && omega_closed.ok && omega_degrees.ok && calculus.ok;
}

namespace {

SuperPoly random_derham_element(std::mt19937_64& rng, const TablePtr& t)
{
    // products of up to three generators, excluding Gv
    auto limit = static_cast<std::size_t>(14 * t->rank() * t->rank());
    SuperPoly sum(t);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < terms; ++s) {
        SuperPoly m = SuperPoly::constant(t, Rational(static_cast<long>(rng() % 5) - 2));
        int factors = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < factors; ++k)
            m = m * SuperPoly::generator(t, static_cast<std::uint16_t>(rng() % limit));
        sum += m;
    }
    return sum;
}

}  // namespace

SuperpotentialReport verify_superpotential_identities(int n, std::uint64_t seed, int samples)
{
    if (n < 1)
        throw std::invalid_argument("verify_superpotential_identities: n must be >= 1");
    auto t = GeneratorTable::canonical(n, true);
    auto dr = de_rham_derivation(t);
    auto d = internal_derivation(t);
    auto omega = build_two_form(n);
    auto phi = build_one_form(n);
    auto Phi = build_minus_potential(n).with_table(t);

    SuperpotentialReport r;
    auto drphi = dr.apply(phi.poly);
    if (drphi != omega.poly)
        r.omega_exact = mismatch("d_dR phi - omega", drphi - omega.poly);
    auto lhs = dr.apply(Phi) + d.apply(phi.poly);
    if (!lhs.is_zero())
        r.potential_identity = mismatch("d_dR Phi + d phi", lhs);
    auto dromega = dr.apply(omega.poly);
    if (!dromega.is_zero())
        r.omega_closed = mismatch("d_dR omega", dromega);
    if (omega.poly.form_degree() != 2 || omega.poly.degree() != -1 ||
        omega.poly.size() != static_cast<std::size_t>(3 * n * n))
        r.omega_degrees = {false, std::nullopt, "omega is not of form degree 2, internal degree -1 with 3n^2 terms"};

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples && r.calculus.ok; ++s) {
        auto a = random_derham_element(rng, t);
        if (auto x = dr.apply(dr.apply(a)); !x.is_zero())
            r.calculus = mismatch("d_dR^2 on sample " + std::to_string(s), x);
        else if (auto y = d.apply(d.apply(a)); !y.is_zero())
            r.calculus = mismatch("d^2 on sample " + std::to_string(s), y);
        else if (auto z = d.apply(dr.apply(a)) + dr.apply(d.apply(a)); !z.is_zero())
            r.calculus = mismatch("d d_dR + d_dR d on sample " + std::to_string(s), z);
    }
    return r;
}

}  // namespace dcrit
