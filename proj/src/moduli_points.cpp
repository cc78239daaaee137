#include "dcrit/moduli_points.hpp"

#include "dcrit/darboux.hpp"
#include "dcrit/json_util.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace dcrit {

namespace {

const Rational kZero;

void require_commuting(const MatrixPoint& pt, const char* who)
{
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}})
        if (!commutator(pt.matrix(a), pt.matrix(b)).is_zero())
            throw std::invalid_argument(std::string(who) + ": the point is not a commuting triple");
}

std::size_t column_rank(const std::vector<Vec<Rational>>& cols, std::size_t rows)
{
    if (cols.empty() || rows == 0)
        return 0;
    return rank(columns_to_matrix(cols, rows, kZero));
}

}  // namespace

std::size_t krylov_dimension(const MatrixPoint& pt)
{
    if (!pt.v)
        throw std::invalid_argument("is_cyclic: the point has no marked vector");
    auto un = static_cast<std::size_t>(pt.n);
    std::vector<Vec<Rational>> span;
    std::deque<Vec<Rational>> queue;
    auto offer = [&](Vec<Rational> w) {
        span.push_back(w);
        if (column_rank(span, un) < span.size()) {
            span.pop_back();
            return;
        }
        queue.push_back(std::move(w));
    };
    offer(*pt.v);
    while (!queue.empty() && span.size() < un) {
        auto w = std::move(queue.front());
        queue.pop_front();
        for (int g = 0; g < 3; ++g)
            offer(pt.matrix(g).apply(w, kZero));
    }
    return span.size();
}

bool is_cyclic(const MatrixPoint& pt) { return krylov_dimension(pt) == static_cast<std::size_t>(pt.n); }

CriticalVerdict is_critical(const MatrixPoint& pt)
{
    CriticalVerdict out;
    out.commuting = true;
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}})
        out.commuting = out.commuting && commutator(pt.matrix(a), pt.matrix(b)).is_zero();

    SuperPoly w = build_potential(pt.n);
    const auto& table = w.table();
    auto value = point_assignment(pt, table);
    out.symbolic = true;
    for (auto b : kDegreeZero)
        for (int i = 1; i <= pt.n; ++i)
            for (int j = 1; j <= pt.n; ++j)
                if (!w.partial_even(table->index(b, i, j)).evaluate(value).is_zero())
                    out.symbolic = false;
    return out;
}

bool PlanePartition::downward_closed() const
{
    for (const auto& c : cells)
        for (int k = 0; k < 3; ++k) {
            if (c[k] == 0)
                continue;
            Cell d = c;
            --d[k];
            if (!contains(d))
                return false;
        }
    return true;
}

std::string PlanePartition::str() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& c : cells) {
        os << (first ? "" : ",") << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<PlanePartition> enumerate_partitions(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions: n must be >= 1");
    std::set<PlanePartition> level;
    level.insert(PlanePartition{{{0, 0, 0}}});
    for (int size = 1; size < n; ++size) {
        std::set<PlanePartition> next;
        for (const auto& pp : level)
            for (const auto& c : pp.cells)
                for (int k = 0; k < 3; ++k) {
                    PlanePartition::Cell cand = c;
                    ++cand[k];
                    if (pp.contains(cand))
                        continue;
                    PlanePartition grown = pp;
                    grown.cells.insert(cand);
                    if (grown.downward_closed())
                        next.insert(std::move(grown));
                }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

namespace {

void fill_heights(int n, int cell, int remaining, std::vector<int>& h, std::vector<PlanePartition>& out)
{
    if (remaining == 0) {
        PlanePartition pp;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < h[static_cast<std::size_t>(a * n + b)]; ++c)
                    pp.cells.insert({a, b, c});
        out.push_back(std::move(pp));
        return;
    }
    if (cell == n * n)
        return;
    int a = cell / n, b = cell % n;
    int cap = remaining;
    if (a > 0)
        cap = std::min(cap, h[static_cast<std::size_t>((a - 1) * n + b)]);
    if (b > 0)
        cap = std::min(cap, h[static_cast<std::size_t>(a * n + b - 1)]);
    for (int v = cap; v >= 0; --v) {
        h[static_cast<std::size_t>(cell)] = v;
        fill_heights(n, cell + 1, remaining - v, h, out);
    }
    h[static_cast<std::size_t>(cell)] = 0;
}

}  // namespace

std::vector<PlanePartition> enumerate_partitions_by_heights(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions_by_heights: n must be >= 1");
    std::vector<int> h(static_cast<std::size_t>(n * n), 0);
    std::vector<PlanePartition> out;
    fill_heights(n, 0, n, h, out);
    std::sort(out.begin(), out.end());
    return out;
}

MatrixPoint point_from_partition(const PlanePartition& pp)
{
    if (pp.cells.empty() || !pp.downward_closed())
        throw std::invalid_argument("point_from_partition: not a nonempty plane partition");
    std::map<PlanePartition::Cell, std::size_t> index;
    for (const auto& c : pp.cells)
        index.emplace(c, index.size());
    auto un = pp.size();
    std::array<QMatrix, 3> m;
    for (int g = 0; g < 3; ++g) {
        m[static_cast<std::size_t>(g)] = QMatrix(un, un, kZero);
        for (const auto& [c, col] : index) {
            auto target = c;
            ++target[static_cast<std::size_t>(g)];
            if (auto it = index.find(target); it != index.end())
                m[static_cast<std::size_t>(g)](it->second, col) = 1;
        }
    }
    Vec<Rational> v(un, kZero);
    v[index.at({0, 0, 0})] = 1;
    MatrixPoint pt(static_cast<int>(un), m[0], m[1], m[2], v);
    pt.provenance = "partition";
    return pt;
}

QMatrix matrix_inverse(const QMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_inverse: matrix is not square");
    auto n = m.rows();
    QMatrix inv(n, n, kZero);
    for (std::size_t j = 0; j < n; ++j) {
        Vec<Rational> e(n, kZero);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x)
            throw std::invalid_argument("matrix_inverse: matrix is singular");
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = (*x)[i];
    }
    return inv;
}

QMatrix random_invertible(std::mt19937_64& rng, int n)
{
    auto un = static_cast<std::size_t>(n);
    for (;;) {
        QMatrix p(un, un, kZero);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j)
                p(i, j) = static_cast<long>(rng() % 5) - 2;
        if (rank(p) == un)
            return p;
    }
}

MatrixPoint conjugate(const MatrixPoint& pt, const QMatrix& p)
{
    QMatrix inv = matrix_inverse(p);
    auto conj = [&](const QMatrix& a) { return p.mul(a, kZero).mul(inv, kZero); };
    std::optional<Vec<Rational>> v;
    if (pt.v)
        v = p.apply(*pt.v, kZero);
    MatrixPoint out(pt.n, conj(pt.X), conj(pt.Y), conj(pt.Z), v);
    out.provenance = pt.provenance;
    return out;
}

MatrixPoint random_diagonal_point(std::mt19937_64& rng, int n)
{
    auto un = static_cast<std::size_t>(n);
    std::set<std::array<long, 3>> used;
    std::array<QMatrix, 3> m{QMatrix(un, un, kZero), QMatrix(un, un, kZero), QMatrix(un, un, kZero)};
    for (std::size_t i = 0; i < un; ++i) {
        std::array<long, 3> e{};
        do {
            for (auto& x : e)
                x = static_cast<long>(rng() % 7) - 3;
        } while (!used.insert(e).second);
        for (std::size_t g = 0; g < 3; ++g)
            m[g](i, i) = e[g];
    }
    MatrixPoint pt(n, m[0], m[1], m[2], Vec<Rational>(un, Rational(1)));
    pt.provenance = "diagonal";
    return pt;
}

std::vector<MatrixPoint> sample_cyclic_points(std::mt19937_64& rng, int n, int count)
{
    auto parts = enumerate_partitions(n);
    std::vector<MatrixPoint> out;
    for (int k = 0; k < count; ++k) {
        MatrixPoint src = k % 2 == 0 ? point_from_partition(parts[rng() % parts.size()]) : random_diagonal_point(rng, n);
        MatrixPoint pt = conjugate(src, random_invertible(rng, n));
        pt.provenance = "random-conjugate";
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

// Subsets of {x, y, z} by size, each listed in increasing order.
const std::array<std::vector<std::vector<int>>, 4> kWedgeBasis = {{
    {{}},
    {{0}, {1}, {2}},
    {{0, 1}, {0, 2}, {1, 2}},
    {{0, 1, 2}},
}};

std::size_t subset_index(int k, const std::vector<int>& s)
{
    const auto& basis = kWedgeBasis[static_cast<std::size_t>(k)];
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), s) - basis.begin());
}

// Sign of the permutation sorting `seq` (which has distinct entries).
int sort_sign(std::vector<int> seq)
{
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j])
                sign = -sign;
    return sign;
}

}  // namespace

QComplex koszul_complex_at(const MatrixPoint& pt)
{
    require_commuting(pt, "koszul_complex_at");
    auto un = static_cast<std::size_t>(pt.n);
    auto nn = un * un;
    QComplex c;
    c.lo = 0;
    for (int k = 0; k <= 3; ++k)
        c.ranks.push_back(kWedgeBasis[static_cast<std::size_t>(k)].size() * nn);
    for (int k = 0; k < 3; ++k) {
        QMatrix d(c.ranks[static_cast<std::size_t>(k) + 1], c.ranks[static_cast<std::size_t>(k)], kZero);
        const auto& src = kWedgeBasis[static_cast<std::size_t>(k)];
        for (std::size_t s = 0; s < src.size(); ++s)
            for (int g = 0; g < 3; ++g) {
                if (std::count(src[s].begin(), src[s].end(), g))
                    continue;
                std::vector<int> seq{g};
                seq.insert(seq.end(), src[s].begin(), src[s].end());
                int sign = sort_sign(seq);
                std::sort(seq.begin(), seq.end());
                std::size_t t = subset_index(k + 1, seq);
                const QMatrix& G = pt.matrix(g);
                // [G, E_ij] = sum_a G(a,i) E_aj - sum_b G(j,b) E_ib
                for (std::size_t i = 0; i < un; ++i)
                    for (std::size_t j = 0; j < un; ++j) {
                        std::size_t col = s * nn + i * un + j;
                        for (std::size_t a = 0; a < un; ++a) {
                            if (!G(a, i).is_zero())
                                d(t * nn + a * un + j, col) += sign * G(a, i);
                            if (!G(j, a).is_zero())
                                d(t * nn + i * un + a, col) -= sign * G(j, a);
                        }
                    }
            }
        c.d.push_back(std::move(d));
    }
    return c;
}

QMatrix koszul_pairing_matrix(int n, int k)
{
    auto un = static_cast<std::size_t>(n);
    auto nn = un * un;
    const auto& left = kWedgeBasis[static_cast<std::size_t>(k)];
    const auto& right = kWedgeBasis[static_cast<std::size_t>(3 - k)];
    QMatrix m(left.size() * nn, right.size() * nn, kZero);
    for (std::size_t s = 0; s < left.size(); ++s)
        for (std::size_t t = 0; t < right.size(); ++t) {
            std::vector<int> seq = left[s];
            seq.insert(seq.end(), right[t].begin(), right[t].end());
            std::vector<int> sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;
            int sign = sort_sign(seq);
            // tr(E_ij E_kl) = [j == k][i == l]
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = 0; j < un; ++j)
                    m(s * nn + i * un + j, t * nn + j * un + i) = sign;
        }
    return m;
}

ExtAtPoint koszul_ext_oracle(const MatrixPoint& pt)
{
    return ext_dims_from(koszul_complex_at(pt), [&](int k) { return koszul_pairing_matrix(pt.n, k); });
}

std::vector<MatrixPoint> build_corpus(int max_n, int conjugates, std::uint64_t seed)
{
    std::vector<MatrixPoint> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& pp : enumerate_partitions(n))
            out.push_back(point_from_partition(pp));
    const std::size_t base = out.size();
    std::mt19937_64 rng(seed);
    for (int k = 0; k < conjugates; ++k) {
        MatrixPoint src;
        if (k % 2 == 0) {
            src = out[rng() % base];
        } else {
            src = random_diagonal_point(rng, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n)));
        }
        MatrixPoint pt = conjugate(src, random_invertible(rng, src.n));
        pt.provenance = "random-conjugate";
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

nlohmann::json matrix_to_json(const QMatrix& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const nlohmann::json& j, std::size_t n, const char* name)
{
    if (!j.is_array() || j.size() != n)
        throw std::invalid_argument(std::string("point JSON: ") + name + " must be an n x n array");
    QMatrix m(n, n, kZero);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw std::invalid_argument(std::string("point JSON: ") + name + " must be an n x n array");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

}  // namespace

nlohmann::json point_to_json(const MatrixPoint& pt)
{
    nlohmann::json j;
    j["n"] = pt.n;
    j["X"] = matrix_to_json(pt.X);
    j["Y"] = matrix_to_json(pt.Y);
    j["Z"] = matrix_to_json(pt.Z);
    if (pt.v) {
        auto v = nlohmann::json::array();
        for (const auto& x : *pt.v)
            v.push_back(rational_to_json(x));
        j["v"] = std::move(v);
    }
    j["provenance"] = pt.provenance;
    return j;
}

MatrixPoint point_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw std::invalid_argument("point JSON: missing or invalid n");
    int n = j["n"].get<int>();
    auto un = static_cast<std::size_t>(n);
    for (const char* key : {"X", "Y", "Z"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("point JSON: missing ") + key);
    std::optional<Vec<Rational>> v;
    if (j.contains("v") && !j["v"].is_null()) {
        if (!j["v"].is_array() || j["v"].size() != un)
            throw std::invalid_argument("point JSON: v must have length n");
        Vec<Rational> vec;
        for (const auto& x : j["v"])
            vec.push_back(rational_from_json(x));
        v = std::move(vec);
    }
    MatrixPoint pt(n, matrix_from_json(j["X"], un, "X"), matrix_from_json(j["Y"], un, "Y"),
                   matrix_from_json(j["Z"], un, "Z"), v);
    pt.provenance = j.value("provenance", std::string("manual"));
    return pt;
}

nlohmann::json corpus_to_json(const std::vector<MatrixPoint>& pts)
{
    nlohmann::json j;
    j["schema"] = "dcrit.points/1";
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts)
        j["points"].push_back(point_to_json(p));
    return j;
}

std::vector<MatrixPoint> corpus_from_json(const nlohmann::json& j)
{
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("points"))
            throw std::invalid_argument("corpus JSON: missing points");
        arr = &j["points"];
    }
    if (!arr->is_array())
        throw std::invalid_argument("corpus JSON: points must be an array");
    std::vector<MatrixPoint> out;
    for (const auto& p : *arr)
        out.push_back(point_from_json(p));
    return out;
}

}  // namespace dcrit
