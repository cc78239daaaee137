#pragma once

#include "dcrit/dense_matrix.hpp"
#include "dcrit/generators.hpp"

#include <functional>
#include <optional>
#include <string>

namespace dcrit {

/// Classical point: three n x n matrices and an optional marked vector.
struct MatrixPoint {
    int n = 0;
    QMatrix X, Y, Z;
    std::optional<Vec<Rational>> v;
    std::string provenance = "manual";  // partition | random-conjugate | diagonal | manual

    MatrixPoint() = default;
    MatrixPoint(int n_, QMatrix x, QMatrix y, QMatrix z, std::optional<Vec<Rational>> v_ = std::nullopt);

    /// 0 -> X, 1 -> Y, 2 -> Z.
    const QMatrix& matrix(int g) const;
    static MatrixPoint origin(int n);
};

/// [A, B] = AB - BA.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Values of the degree-0 generators of `table` at the point (0 for every
/// other generator).
std::function<Rational(std::uint16_t)> point_assignment(const MatrixPoint& pt, const TablePtr& table);

}  // namespace dcrit
