#pragma once

#include "dcrit/scalar.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcrit {

template <class K>
using Vec = std::vector<K>;

/// Row-major dense matrix over an exact field.
template <class K>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<K> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("DenseMatrix: entries length != rows * cols");
    }

    static DenseMatrix identity(std::size_t n, const K& zero, const K& one)
    {
        DenseMatrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<K>& entries() const { return data_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    DenseMatrix transpose() const
    {
        if (data_.empty())
            return DenseMatrix(cols_, rows_, std::vector<K>{});
        DenseMatrix t(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b)
    {
        check_shape(a, b);
        DenseMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] += b.data_[k];
        return r;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b)
    {
        check_shape(a, b);
        DenseMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] -= b.data_[k];
        return r;
    }

    /// Product with an explicit zero (needed when an inner dimension is 0).
    DenseMatrix mul(const DenseMatrix& b, const K& zero) const
    {
        if (cols_ != b.rows_)
            throw std::invalid_argument("DenseMatrix: product shape mismatch");
        DenseMatrix r(rows_, b.cols_, zero);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a * b(k, j);
            }
        return r;
    }

    Vec<K> apply(const Vec<K>& x, const K& zero) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("DenseMatrix: vector length mismatch");
        Vec<K> y(rows_, zero);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += (*this)(i, j) * x[j];
        return y;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? ", " : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    static void check_shape(const DenseMatrix& a, const DenseMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("DenseMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

using QMatrix = DenseMatrix<Rational>;
using FpMatrix = DenseMatrix<Fp>;

/// Row echelon form together with its pivot columns.
template <class K>
struct Echelon {
    DenseMatrix<K> form;
    std::vector<std::size_t> pivots;
};

// Fraction-free (Bareiss) elimination over Q; rows are cleared of
// denominators first so intermediate entries stay integral.
Echelon<Rational> row_echelon(const QMatrix& m);
// Plain Gaussian elimination over F_p.
Echelon<Fp> row_echelon(const FpMatrix& m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis of {x : m x = 0}; exactly cols - rank vectors.
std::vector<Vec<Rational>> kernel_basis(const QMatrix& m);
std::vector<Vec<Fp>> kernel_basis(const FpMatrix& m, std::uint64_t prime);

/// A solution of m x = b if one exists.
std::optional<Vec<Rational>> solve(const QMatrix& m, const Vec<Rational>& b);
std::optional<Vec<Fp>> solve(const FpMatrix& m, const Vec<Fp>& b, std::uint64_t prime);

FpMatrix reduce_mod(const QMatrix& m, std::uint64_t prime);

/// Matrix whose columns are the given vectors (all of length `rows`).
template <class K>
DenseMatrix<K> columns_to_matrix(const std::vector<Vec<K>>& cols, std::size_t rows, const K& zero)
{
    DenseMatrix<K> m(rows, cols.size(), zero);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("columns_to_matrix: length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

}  // namespace dcrit
