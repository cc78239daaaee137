#pragma once

#include "dcrit/complexes.hpp"
#include "dcrit/darboux.hpp"
#include "dcrit/nc_algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dcrit {

/// Candidate index patterns for the t-action on F_n = A (x) V.
enum class TAction {
    matrix,        // t.e_i = sum_j T(j,i) e_j
    transpose,     // t.e_i = sum_j T(i,j) e_j
    row_sums,      // t.e_i = (sum_j T(i,j)) e_i
    column_sums,   // t.e_i = (sum_j T(j,i)) e_i
};

inline constexpr std::array<TAction, 4> kTActions = {TAction::matrix, TAction::transpose, TAction::row_sums,
                                                     TAction::column_sums};
const char* taction_name(TAction a);

/// Action of the D-generators on F_n: g.e_i = sum_k M_g(k,i) e_k with M_g a
/// matrix over A_n^*. x,y,z act by X0,Y0,Z0, u,v,w by P_X,P_Y,P_Z (so
/// u.e_i = sum_j Xm1(i,j) e_j), and t by the selected pattern.
/// On a general element, g.(sum a_j e_j) = sum (-1)^{|g||a_j|} a_j g.e_j, so
/// a word acts by the ordered matrix product of its letters.
struct DModuleAction {
    int n = 0;
    TablePtr table;
    std::array<PolyGrid, 7> M;
    TAction t_action = TAction::matrix;

    const PolyGrid& matrix(NCGen g) const { return M[static_cast<std::size_t>(g)]; }
};

DModuleAction build_universal_family(int n, TAction t_action = TAction::matrix);

/// Matrix by which an element of D acts.
PolyGrid action_matrix(const DModuleAction& a, const NCElement& e);

/// d(g.e_i) = (dg).e_i + (-1)^{|g|} g.d(e_i) with d(e_i) = 0, entrywise.
Verdict check_leibniz(const DModuleAction& a, NCGen g);
/// Same identity for an arbitrary element of D.
Verdict check_leibniz(const DModuleAction& a, const NCElement& e);

struct TActionSearch {
    std::vector<std::pair<TAction, bool>> results;
    /// Set iff the passing candidates all give the same action matrix.
    std::optional<TAction> winner;
};

/// Tries every candidate t-pattern and keeps the Leibniz survivors.
TActionSearch search_t_action(int n);

}  // namespace dcrit
