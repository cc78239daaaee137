#pragma once

#include "dcrit/ext_complex.hpp"
#include "dcrit/matrix_point.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace dcrit {

/// Dimension of the span of all words in X, Y, Z applied to v. Words are
/// explored breadth-first, applying X, Y, Z in that order. Throws if v is
/// missing.
std::size_t krylov_dimension(const MatrixPoint& pt);
bool is_cyclic(const MatrixPoint& pt);

struct CriticalVerdict {
    bool commuting = false;  // [X,Y] = [Y,Z] = [Z,X] = 0
    bool symbolic = false;   // every entry of dW vanishes at the point
    bool agree() const { return commuting == symbolic; }
    bool ok() const { return commuting && symbolic; }
};

CriticalVerdict is_critical(const MatrixPoint& pt);

/// Finite downward-closed subset of N^3.
struct PlanePartition {
    using Cell = std::array<int, 3>;
    std::set<Cell> cells;

    std::size_t size() const { return cells.size(); }
    bool contains(const Cell& c) const { return cells.count(c) > 0; }
    bool downward_closed() const;
    std::string str() const;
    friend bool operator==(const PlanePartition& a, const PlanePartition& b) { return a.cells == b.cells; }
    friend bool operator<(const PlanePartition& a, const PlanePartition& b) { return a.cells < b.cells; }
};

/// All plane partitions of size n, by adding one addable corner at a time.
std::vector<PlanePartition> enumerate_partitions(int n);
/// Same set from nonincreasing height matrices h(a,b) with sum n.
std::vector<PlanePartition> enumerate_partitions_by_heights(int n);

/// Multiplication by x, y, z on span{x^a y^b z^c : (a,b,c) in pp}, with
/// monomials leaving pp sent to 0. Basis in lexicographic order of cells;
/// v is the monomial 1.
MatrixPoint point_from_partition(const PlanePartition& pp);

/// Random invertible matrix with entries in {-2..2}.
QMatrix random_invertible(std::mt19937_64& rng, int n);
QMatrix matrix_inverse(const QMatrix& m);

/// (P X P^-1, P Y P^-1, P Z P^-1, P v).
MatrixPoint conjugate(const MatrixPoint& pt, const QMatrix& p);

/// Diagonal commuting triple with pairwise distinct joint eigenvalues and
/// v = (1, ..., 1).
MatrixPoint random_diagonal_point(std::mt19937_64& rng, int n);

/// `count` cyclic commuting points of size n: conjugates of random
/// partition points alternating with conjugates of diagonal points.
std::vector<MatrixPoint> sample_cyclic_points(std::mt19937_64& rng, int n, int count);

/// Ext dims from End(V) (x) Lambda^k(C^3)^* with
/// d(phi (x) e_S) = sum_g [G_g, phi] (x) e_g ^ e_S, and pairing
/// tr(phi psi) times the coefficient of e_xyz in e_S ^ e_T. Throws on a
/// non-commuting point.
QComplex koszul_complex_at(const MatrixPoint& pt);
QMatrix koszul_pairing_matrix(int n, int k);
ExtAtPoint koszul_ext_oracle(const MatrixPoint& pt);

/// All partition points of size 1..max_n, followed by `conjugates` random
/// conjugates of those points.
std::vector<MatrixPoint> build_corpus(int max_n, int conjugates, std::uint64_t seed);

nlohmann::json point_to_json(const MatrixPoint& pt);
MatrixPoint point_from_json(const nlohmann::json& j);
nlohmann::json corpus_to_json(const std::vector<MatrixPoint>& pts);
std::vector<MatrixPoint> corpus_from_json(const nlohmann::json& j);

}  // namespace dcrit
