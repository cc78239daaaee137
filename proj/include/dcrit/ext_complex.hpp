#pragma once

#include "dcrit/complexes.hpp"
#include "dcrit/darboux.hpp"
#include "dcrit/ginzburg.hpp"
#include "dcrit/matrix_point.hpp"
#include "dcrit/universal_family.hpp"

#include <map>
#include <vector>

namespace dcrit {

/// The complex computing RHom(F, F) over A_n^* in degrees 0..3, built as the
/// fiber of phi -> ad_phi from End(F) to the derivations of D along the
/// action. Bases:
///   0: phi(i,j) = E_ij
///   1: theta_x(i,j), theta_y, theta_z    (derivation of degree 0 with theta(x) = E_ij)
///   2: theta_u(i,j), theta_v, theta_w    (degree 1)
///   3: theta_t(i,j)                      (degree 2)
/// Differential D(phi, theta) = (d phi, -ad_phi - D_Der theta) with
///   ad_phi(g)     = phi M_g - (-1)^{|phi||g|} M_g phi,
///   D_Der theta(g) = d(theta(g)) - (-1)^{|theta|} theta(dg).
/// Coefficients on the derivation summand carry the shift sign
/// a . theta = (-1)^{|a|} a theta, so the total differential obeys the
/// left-module rule of FreeComplex.
struct ExtComplexL {
    int n = 0;
    DModuleAction action;
    FreeComplex complex;
};

ExtComplexL build_ext_complex(int n);

/// L at a point through the bimodule resolution: Hom(P_k, End V) with
/// (delta psi)(s) = psi(alpha(s)) and psi(a (x) s (x) b) = rho(a) psi_s rho(b).
QComplex ext_complex_at(const MatrixPoint& pt, const GinzburgResolution& g = build_ginzburg_resolution());

/// Basis of H^p as columns: kernel vectors of d^p independent modulo the
/// image of d^{p-1}.
std::vector<Vec<Rational>> cohomology_representatives(const QComplex& c, int p);

struct SerrePairing {
    int degree = 0;      // pairing H^degree x H^{3-degree}
    QMatrix matrix;      // dim H^degree x dim H^{3-degree}
    std::size_t rank = 0;
    bool well_defined = true;  // boundaries pair to zero with cycles
};

struct ExtAtPoint {
    std::map<int, std::size_t> dims;
    std::vector<SerrePairing> pairings;  // degrees 0 and 1
    long euler = 0;
    bool pairing_perfect() const;
};

/// Serre pairing on L^k x L^{3-k}: sum_g tr(N_g M_g) with x <-> u, y <-> v,
/// z <-> w for k = 1, and tr(phi theta_t) for k = 0.
QMatrix serre_pairing_matrix(int n, int k);

/// Ext dims of L at a commuting point plus the pairing matrices; throws on a
/// non-commuting point.
ExtAtPoint ext_dims_at(const MatrixPoint& pt);
ExtAtPoint ext_dims_from(const QComplex& c, const std::function<QMatrix(int)>& pairing);

/// The tangent complex shifted into degrees 0..3: bases xi(a,b) | dX0.. |
/// dXm1.. | dT, with differentials the transposes of the cotangent blocks.
FreeComplex build_tangent_complex(const CotangentComplexModel& cot);

/// xi(a,b) -> phi(a,b), d/dX0(i,j) -> theta_x(i,j), d/dXm1(i,j) -> -theta_u(j,i),
/// d/dT(a,b) -> -theta_t(a,b), cyclically in (x,y,z) and (u,v,w).
struct ComparisonMap {
    int n = 0;
    CotangentComplexModel cotangent;
    FreeComplex tangent;
    ExtComplexL ext;
    std::map<int, PolyMatrix> phi;

    ChainMap chain_map() const { return ChainMap{&tangent, &ext.complex, phi}; }
    /// phi evaluated at a point, for use with ext_complex_at.
    std::map<int, QMatrix> numeric_phi() const;
};

ComparisonMap build_comparison_map(int n);

/// Chain-map check at a point, against the bimodule-resolution L.
ChainMapVerdict check_comparison_at(const ComparisonMap& m, const MatrixPoint& pt);

/// True if every entry is 0 or +-1 and each row and column has exactly one
/// nonzero entry.
bool is_signed_permutation(const QMatrix& m);

}  // namespace dcrit
