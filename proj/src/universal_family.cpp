#include "dcrit/universal_family.hpp"

#include "dcrit/poly_text.hpp"

#include <stdexcept>

namespace dcrit {

const char* taction_name(TAction a)
{
    switch (a) {
    case TAction::matrix: return "t.e_i = sum_j T(j,i) e_j";
    case TAction::transpose: return "t.e_i = sum_j T(i,j) e_j";
    case TAction::row_sums: return "t.e_i = sum_j T(i,j) e_i";
    case TAction::column_sums: return "t.e_i = sum_j T(j,i) e_i";
    }
    return "?";
}

namespace {

PolyGrid zero_grid(const TablePtr& t, int n)
{
    return PolyGrid(static_cast<std::size_t>(n), std::vector<SuperPoly>(static_cast<std::size_t>(n), SuperPoly(t)));
}

PolyGrid identity_grid(const TablePtr& t, int n)
{
    auto g = zero_grid(t, n);
    for (int i = 0; i < n; ++i)
        g[i][i] = SuperPoly::constant(t, Rational(1));
    return g;
}

PolyGrid t_matrix(const TablePtr& t, int n, TAction a)
{
    auto T = generator_matrix(t, Block::T);
    switch (a) {
    case TAction::matrix: return T;
    case TAction::transpose: return generator_matrix(t, Block::T, true);
    case TAction::row_sums:
    case TAction::column_sums: {
        auto g = zero_grid(t, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g[i][i] += a == TAction::row_sums ? T[i][j] : T[j][i];
        return g;
    }
    }
    throw std::logic_error("t_matrix: unknown variant");
}

std::string grid_position(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

DModuleAction build_universal_family(int n, TAction t_action)
{
    if (n < 1)
        throw std::invalid_argument("build_universal_family: n must be >= 1");
    DModuleAction a;
    a.n = n;
    a.table = GeneratorTable::canonical(n, false);
    a.t_action = t_action;
    for (int g = 0; g < 3; ++g) {
        a.M[static_cast<std::size_t>(g)] = generator_matrix(a.table, kDegreeZero[g]);
        a.M[static_cast<std::size_t>(g + 3)] = generator_matrix(a.table, kDegreeMinusOne[g], true);
    }
    a.M[6] = t_matrix(a.table, n, t_action);
    return a;
}

PolyGrid action_matrix(const DModuleAction& a, const NCElement& e)
{
    auto out = zero_grid(a.table, a.n);
    for (const auto& [w, c] : e.terms()) {
        auto m = identity_grid(a.table, a.n);
        for (auto g : w)
            m = grid_mul(m, a.matrix(g));
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                out[i][j] += c * m[i][j];
    }
    return out;
}

Verdict check_leibniz(const DModuleAction& a, const NCElement& e)
{
    auto d = koszul_derivation(a.n);
    auto lhs = action_matrix(a, e);
    auto rhs = action_matrix(a, nc_differential(e));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            auto diff = d.apply(lhs[i][j]) - rhs[i][j];
            if (!diff.is_zero())
                return {false, Failure{"d(" + e.str() + ") on F at " + grid_position(i, j), static_cast<std::size_t>(i + 1),
                                       static_cast<std::size_t>(j + 1), format_poly(diff)},
                        ""};
        }
    return {};
}

Verdict check_leibniz(const DModuleAction& a, NCGen g) { return check_leibniz(a, NCElement::gen(g)); }

TActionSearch search_t_action(int n)
{
    TActionSearch s;
    // passing variants are counted up to equality of their action matrices
    std::vector<PolyGrid> distinct;
    for (auto v : kTActions) {
        auto fam = build_universal_family(n, v);
        bool ok = check_leibniz(fam, NCGen::t).ok;
        s.results.emplace_back(v, ok);
        if (!ok)
            continue;
        bool seen = false;
        for (const auto& m : distinct)
            seen = seen || m == fam.matrix(NCGen::t);
        if (!seen) {
            distinct.push_back(fam.matrix(NCGen::t));
            if (!s.winner)
                s.winner = v;
        }
    }
    if (distinct.size() != 1)
        s.winner.reset();
    return s;
}

}  // namespace dcrit
