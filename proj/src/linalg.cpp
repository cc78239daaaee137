#include "dcrit/dense_matrix.hpp"

#include <utility>

namespace dcrit {

Echelon<Rational> row_echelon(const QMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<mpz_class> a(R * C);
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < C; ++j)
            a[i * C + j] = m(i, j).num() * (l / m(i, j).den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * C + j]; };

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && at(p, c) == 0)
            ++p;
        if (p == R)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j)
                std::swap(at(p, j), at(r, j));
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        pivots.push_back(c);
        ++r;
    }
    std::vector<Rational> out;
    out.reserve(R * C);
    for (auto& x : a)
        out.emplace_back(x);
    return {QMatrix(R, C, std::move(out)), std::move(pivots)};
}

Echelon<Fp> row_echelon(const FpMatrix& m)
{
    FpMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a(p, c).is_zero())
            ++p;
        if (p == R)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j)
                std::swap(a(p, j), a(r, j));
        Fp inv = a(r, c).inverse();
        for (std::size_t i = r + 1; i < R; ++i) {
            if (a(i, c).is_zero())
                continue;
            Fp f = a(i, c) * inv;
            for (std::size_t j = c; j < C; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }
std::size_t rank(const FpMatrix& m) { return row_echelon(m).pivots.size(); }

namespace {

// Back substitution on an echelon form; x carries the values at non-pivot columns.
template <class K>
Vec<K> back_substitute(const Echelon<K>& e, const Vec<K>& rhs, Vec<K> x)
{
    const auto& f = e.form;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        K acc = rhs[k];
        for (std::size_t j = pc + 1; j < f.cols(); ++j)
            if (!f(k, j).is_zero())
                acc -= f(k, j) * x[j];
        x[pc] = acc / f(k, pc);
    }
    return x;
}

template <class K>
std::vector<Vec<K>> kernel_from(const Echelon<K>& e, std::size_t cols, const K& zero, const K& one)
{
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    Vec<K> rhs(e.pivots.size(), zero);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec<K> x(cols, zero);
        x[f] = one;
        basis.push_back(back_substitute(e, rhs, std::move(x)));
    }
    return basis;
}

template <class K>
std::optional<Vec<K>> solve_from(const DenseMatrix<K>& m, const Vec<K>& b, const K& zero)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length != rows");
    const std::size_t C = m.cols();
    DenseMatrix<K> aug(m.rows(), C + 1, zero);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < C; ++j)
            aug(i, j) = m(i, j);
        aug(i, C) = b[i];
    }
    auto e = row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == C)
        return std::nullopt;
    Vec<K> rhs(e.pivots.size(), zero);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        rhs[k] = e.form(k, C);
    Echelon<K> lhs{DenseMatrix<K>(m.rows(), C, zero), e.pivots};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < C; ++j)
            lhs.form(i, j) = e.form(i, j);
    return back_substitute(lhs, rhs, Vec<K>(C, zero));
}

}  // namespace

std::vector<Vec<Rational>> kernel_basis(const QMatrix& m)
{
    return kernel_from(row_echelon(m), m.cols(), Rational(0), Rational(1));
}

std::vector<Vec<Fp>> kernel_basis(const FpMatrix& m, std::uint64_t prime)
{
    return kernel_from(row_echelon(m), m.cols(), Fp(0, prime), Fp(1, prime));
}

std::optional<Vec<Rational>> solve(const QMatrix& m, const Vec<Rational>& b)
{
    return solve_from(m, b, Rational(0));
}

std::optional<Vec<Fp>> solve(const FpMatrix& m, const Vec<Fp>& b, std::uint64_t prime)
{
    return solve_from(m, b, Fp(0, prime));
}

FpMatrix reduce_mod(const QMatrix& m, std::uint64_t prime)
{
    std::vector<Fp> d;
    d.reserve(m.entries().size());
    for (const auto& x : m.entries())
        d.push_back(Fp::from_rational(x, prime));
    return FpMatrix(m.rows(), m.cols(), std::move(d));
}

}  // namespace dcrit
