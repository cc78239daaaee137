#pragma once

#include "dcrit/complexes.hpp"
#include "dcrit/super_poly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dcrit {

inline constexpr std::array<Block, 3> kDegreeZero = {Block::X0, Block::Y0, Block::Z0};
inline constexpr std::array<Block, 3> kDegreeMinusOne = {Block::Xm1, Block::Ym1, Block::Zm1};

/// n x n matrix of generators. For the odd blocks `transposed` gives the
/// matrix P with P(i,j) = Xm1(j,i); dP_X = [Y0,Z0] entrywise.
std::vector<std::vector<SuperPoly>> generator_matrix(const TablePtr& t, Block b, bool transposed = false);

using PolyGrid = std::vector<std::vector<SuperPoly>>;
PolyGrid grid_mul(const PolyGrid& a, const PolyGrid& b);
PolyGrid grid_commutator(const PolyGrid& a, const PolyGrid& b);

/// W = tr(X0 [Y0, Z0]) on the base table of rank n.
SuperPoly build_potential(int n);

/// How the gauge generators are differentiated.
enum class GaugeConvention {
    /// dT = [X0, Xm1^T] + [Y0, Ym1^T] + [Z0, Zm1^T]; squares to zero.
    transposed,
    /// dT = [X0, Xm1] + [Y0, Ym1] + [Z0, Zm1] with no transpose.
    untransposed,
};

/// The cdga differential on the base table:
///   d(Xm1(i,j)) = [Y0,Z0](j,i) = dW/dX0(i,j), cyclically in (X,Y,Z),
///   d(T) as selected by the convention, d = 0 on degree-0 generators.
Derivation koszul_derivation(int n, GaugeConvention gauge = GaugeConvention::transposed);

/// A_n^* as a complex of free A_n-modules, truncated to the monomials in the
/// negative generators of degree >= min_degree.
struct KoszulCdga {
    TablePtr table;
    Derivation d;
    FreeComplex complex;
};

KoszulCdga build_koszul_cdga(int n, int min_degree = -3);

/// d o d on every generator of the table.
Verdict check_derivation_squares_to_zero(const Derivation& d);

/// Every entry of dW, read off by differentiating W, is the matching entry
/// of a commutator: dW/dX0(i,j) = [Y0,Z0](j,i) and cyclically; the same
/// entries are the images d(Xm1(i,j)). Checks the bijection both ways.
Verdict check_dW_equals_commutators(int n);

/// The stacky cotangent complex in degrees -2..1 with bases
///   dT(i,j) | dXm1, dYm1, dZm1 | dX0, dY0, dZ0 | Gv(i,j).
struct CotangentComplexModel {
    int n = 0;
    TablePtr base;     // A_n^*
    TablePtr derham;   // base plus de Rham symbols and Gv
    Derivation D;      // odd derivation on the de Rham table
    FreeComplex complex;
};

/// Coaction coefficient used in D(d_dR g) = -d_dR(d g) + c sum_ab delta_ab(g) Gv(a,b).
inline constexpr int kCoactionSign = -1;

CotangentComplexModel build_cotangent_complex(int n, int coaction_sign = kCoactionSign);

/// Partner of basis index k of degree p under the pairing of degree p with
/// degree -1-p: dXm1(i,j) <-> dX0(i,j) (same block), dT(i,j) <-> Gv(j,i).
std::size_t cotangent_partner(int n, int p, std::size_t k);

/// Adjacent-block self-duality: d^{-2}(l,k) = s d^0(partner k, partner l) and
/// d^{-1}(l,k) = s' d^{-1}(partner k, partner l) with s = s' = +1.
Verdict check_self_duality(const CotangentComplexModel& m);

/// The block -1 -> 0 is minus the Hessian of W and agrees with the
/// d_dR-image of the cdga differential, D(d_dR Xm1(i,j)) = -d_dR([Y0,Z0]^T(i,j)).
Verdict check_hessian_block(const CotangentComplexModel& m);

/// Element of the de Rham algebra of a fixed form degree.
struct DeRhamForm {
    SuperPoly poly;
    int form_degree = 0;
    int internal_degree = 0;
};

/// d_dR: g -> d_dR g on base generators, 0 on symbols and Gv.
Derivation de_rham_derivation(const TablePtr& derham);
/// The cdga differential extended by d(d_dR g) = -d_dR(d g), d(Gv) = 0.
Derivation internal_derivation(const TablePtr& derham);

/// omega = sum_{i,j} d_dR Xm1(i,j) d_dR X0(i,j) + (Y, Z terms).
DeRhamForm build_two_form(int n);
/// phi = sum_{i,j} Xm1(i,j) d_dR X0(i,j) + (Y, Z terms).
DeRhamForm build_one_form(int n);
/// Phi = -W.
SuperPoly build_minus_potential(int n);

struct SuperpotentialReport {
    Verdict omega_exact;        // d_dR phi = omega
    Verdict potential_identity; // d_dR Phi + d phi = 0
    Verdict omega_closed;       // d_dR omega = 0
    Verdict omega_degrees;      // form degree 2, internal degree -1, 3n^2 terms
    Verdict calculus;           // d_dR^2 = 0, d^2 = 0, d d_dR + d_dR d = 0 on samples
    bool all_ok() const;
};

SuperpotentialReport verify_superpotential_identities(int n, std::uint64_t seed = 1, int samples = 40);

}  // namespace dcrit
