#pragma once

#include "dcrit/dense_matrix.hpp"
#include "dcrit/super_poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dcrit {

/// Sparse matrix with entries in the graded-commutative algebra.
class PolyMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    PolyMatrix(TablePtr table, std::size_t rows, std::size_t cols)
        : table_(std::move(table)), rows_(rows), cols_(cols), zero_(table_) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const TablePtr& table() const { return table_; }
    const std::map<Key, SuperPoly>& entries() const { return entries_; }

    const SuperPoly& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, SuperPoly v);
    void add(std::size_t r, std::size_t c, const SuperPoly& v);

    bool is_zero() const { return entries_.empty(); }
    PolyMatrix transpose() const;
    PolyMatrix operator-() const;
    /// Ordinary matrix product; entries multiplied as (a(i,k) * b(k,j)).
    PolyMatrix operator*(const PolyMatrix& b) const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    /// Entrywise application of a map on the base algebra.
    PolyMatrix map(const std::function<SuperPoly(const SuperPoly&)>& f) const;

    QMatrix evaluate(const std::function<Rational(std::uint16_t)>& value) const;

private:
    TablePtr table_;
    std::size_t rows_, cols_;
    std::map<Key, SuperPoly> entries_;
    SuperPoly zero_;
};

/// Location of a nonzero entry, 1-based row/column, used in verdicts.
struct Failure {
    std::string where;
    std::size_t row = 0, col = 0;
    std::string value;
};

struct Verdict {
    bool ok = true;
    std::optional<Failure> failure;
    std::string detail;
};

void to_json(nlohmann::json& j, const Verdict& v);

/// Bounded, cohomologically indexed complex of finite free modules over the
/// algebra of `table`. Components go from degree p to degree q >= p + 1;
/// the matrix of a component has rank(q) rows and rank(p) columns and its
/// (l, k) entry is the coefficient of e_l in D(e_k). Entries of the p -> q
/// component have cohomological degree p + 1 - q.
///
/// With a base derivation d the total differential is
///   D(a e_k) = d(a) e_k + (-1)^{|a|} a D(e_k).
class FreeComplex {
public:
    FreeComplex(TablePtr table, int lo, std::vector<std::size_t> ranks);

    const TablePtr& table() const { return table_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int p) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    void set_base(Derivation d);
    const std::optional<Derivation>& base() const { return base_; }

    /// Component p -> q, created empty on first access.
    PolyMatrix& component(int p, int q);
    const PolyMatrix* find_component(int p, int q) const;
    const std::map<std::pair<int, int>, PolyMatrix>& components() const { return maps_; }
    /// Adjacent component p -> p+1 (zero matrix if unset).
    PolyMatrix differential(int p) const;

    void set_labels(int p, std::vector<std::string> labels);
    const std::vector<std::string>& labels(int p) const;

    long euler_characteristic() const;

private:
    TablePtr table_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::optional<Derivation> base_;
    std::map<std::pair<int, int>, PolyMatrix> maps_;
    std::vector<std::vector<std::string>> labels_;
};

/// D o D = 0 on every basis vector, and d o d = 0 on the base generators
/// when a base derivation is present. Reports the first nonzero entry.
Verdict check_d_squared(const FreeComplex& c);

/// Complex of finite dimensional vector spaces over K (adjacent maps only).
template <class K>
struct ScalarComplex {
    int lo = 0;
    std::vector<std::size_t> ranks;
    std::vector<DenseMatrix<K>> d;  // d[k] : degree lo+k -> lo+k+1

    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
};

using QComplex = ScalarComplex<Rational>;
using FpComplex = ScalarComplex<Fp>;

/// Substitutes values for degree-0 generators (negative-degree generators go
/// to 0). Only the adjacent components survive.
QComplex evaluate_at(const FreeComplex& c, const std::function<Rational(std::uint16_t)>& value);
/// Convenience overload: values indexed by generator; throws if a degree-0
/// generator is missing.
QComplex evaluate_at(const FreeComplex& c, const std::map<std::uint16_t, Rational>& values);

FpComplex reduce_mod(const QComplex& c, std::uint64_t prime);

template <class K>
Verdict check_d_squared(const ScalarComplex<K>& c, const K& zero);

/// dim H^k for each degree; throws if d o d != 0.
std::map<int, std::size_t> homology_dims(const QComplex& c);
std::map<int, std::size_t> homology_dims(const FpComplex& c, std::uint64_t prime);

/// Map of complexes over the same table; phi[p] has target rank(p) rows and
/// source rank(p) columns with degree-0 entries.
struct ChainMap {
    const FreeComplex* source = nullptr;
    const FreeComplex* target = nullptr;
    std::map<int, PolyMatrix> phi;
};

struct ChainMapVerdict {
    Verdict commutes;
    /// Filled in point mode: invertibility of each phi^p.
    std::map<int, bool> invertible;
    bool all_invertible() const;
};

void to_json(nlohmann::json& j, const ChainMapVerdict& v);

/// Symbolic mode: phi^{p+1} d_s^p = d_t^p phi^p for the adjacent components.
/// Invertibility is reported for the degrees where phi^p has constant entries.
ChainMapVerdict check_chain_map(const ChainMap& f);
/// Point mode: the same squares after evaluation, plus invertibility.
ChainMapVerdict check_chain_map(const ChainMap& f, const std::function<Rational(std::uint16_t)>& value);

/// Squares and invertibility for maps of scalar complexes with equal ranges.
ChainMapVerdict check_chain_map(const QComplex& source, const QComplex& target, const std::map<int, QMatrix>& phi);

nlohmann::json complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const nlohmann::json& j, const TablePtr& table);

}  // namespace dcrit
