#include "dcrit/matrix_point.hpp"

#include <stdexcept>

namespace dcrit {

MatrixPoint::MatrixPoint(int n_, QMatrix x, QMatrix y, QMatrix z, std::optional<Vec<Rational>> v_)
    : n(n_), X(std::move(x)), Y(std::move(y)), Z(std::move(z)), v(std::move(v_))
{
    auto un = static_cast<std::size_t>(n);
    for (const auto* m : {&X, &Y, &Z})
        if (m->rows() != un || m->cols() != un)
            throw std::invalid_argument("MatrixPoint: matrices must be n x n");
    if (v && v->size() != un)
        throw std::invalid_argument("MatrixPoint: vector must have length n");
}

const QMatrix& MatrixPoint::matrix(int g) const
{
    switch (g) {
    case 0: return X;
    case 1: return Y;
    case 2: return Z;
    default: throw std::out_of_range("MatrixPoint::matrix: index must be 0, 1 or 2");
    }
}

MatrixPoint MatrixPoint::origin(int n)
{
    auto un = static_cast<std::size_t>(n);
    QMatrix zero(un, un, Rational());
    Vec<Rational> v(un, Rational());
    if (n > 0)
        v[0] = 1;
    return MatrixPoint(n, zero, zero, zero, v);
}

QMatrix commutator(const QMatrix& a, const QMatrix& b)
{
    return a.mul(b, Rational()) - b.mul(a, Rational());
}

std::function<Rational(std::uint16_t)> point_assignment(const MatrixPoint& pt, const TablePtr& table)
{
    if (table->rank() != pt.n)
        throw std::invalid_argument("point_assignment: rank mismatch");
    return [pt, table](std::uint16_t g) -> Rational {
        const auto& gen = (*table)[g];
        int b = static_cast<int>(gen.block);
        if (b > 2)
            return Rational();
        return pt.matrix(b)(static_cast<std::size_t>(gen.i - 1), static_cast<std::size_t>(gen.j - 1));
    };
}

}  // namespace dcrit
