#include "dcrit/complexes.hpp"

#include "dcrit/poly_text.hpp"

#include <sstream>
#include <stdexcept>

namespace dcrit {

const SuperPoly& PolyMatrix::at(std::size_t r, std::size_t c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero_ : it->second;
}

void PolyMatrix::set(std::size_t r, std::size_t c, SuperPoly v)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("PolyMatrix::set: index out of range");
    require_same_table(table_, v.table());
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_.insert_or_assign({r, c}, std::move(v));
}

void PolyMatrix::add(std::size_t r, std::size_t c, const SuperPoly& v)
{
    if (v.is_zero())
        return;
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("PolyMatrix::add: index out of range");
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        require_same_table(table_, v.table());
        entries_.emplace(Key{r, c}, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        entries_.erase(it);
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(table_, cols_, rows_);
    for (const auto& [k, v] : entries_)
        t.entries_.emplace(Key{k.second, k.first}, v);
    return t;
}

PolyMatrix PolyMatrix::operator-() const
{
    PolyMatrix r = *this;
    for (auto& [k, v] : r.entries_)
        v = -v;
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& b) const
{
    if (cols_ != b.rows_)
        throw std::invalid_argument("PolyMatrix: product shape mismatch");
    std::vector<std::vector<std::pair<std::size_t, const SuperPoly*>>> brow(b.rows_);
    for (const auto& [k, v] : b.entries_)
        brow[k.first].emplace_back(k.second, &v);
    PolyMatrix r(table_, rows_, b.cols_);
    for (const auto& [k, v] : entries_)
        for (const auto& [j, w] : brow[k.second])
            r.add(k.first, j, v * *w);
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix r = a;
    for (const auto& [k, v] : b.entries_)
        r.add(k.first, k.second, v);
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

bool operator==(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::map(const std::function<SuperPoly(const SuperPoly&)>& f) const
{
    PolyMatrix r(table_, rows_, cols_);
    for (const auto& [k, v] : entries_)
        r.set(k.first, k.second, f(v));
    return r;
}

QMatrix PolyMatrix::evaluate(const std::function<Rational(std::uint16_t)>& value) const
{
    QMatrix m(rows_, cols_, Rational());
    for (const auto& [k, v] : entries_)
        m(k.first, k.second) = v.evaluate(value);
    return m;
}

void to_json(nlohmann::json& j, const Verdict& v)
{
    j = nlohmann::json{{"ok", v.ok}};
    if (!v.detail.empty())
        j["detail"] = v.detail;
    if (v.failure)
        j["failure"] = {{"where", v.failure->where},
                        {"row", v.failure->row},
                        {"col", v.failure->col},
                        {"value", v.failure->value}};
}

FreeComplex::FreeComplex(TablePtr table, int lo, std::vector<std::size_t> ranks)
    : table_(std::move(table)), lo_(lo), ranks_(std::move(ranks)), labels_(ranks_.size())
{
    if (ranks_.empty())
        throw std::invalid_argument("FreeComplex: empty degree range");
}

std::size_t FreeComplex::rank(int p) const
{
    if (p < lo_ || p > hi())
        return 0;
    return ranks_[static_cast<std::size_t>(p - lo_)];
}

void FreeComplex::set_base(Derivation d)
{
    require_same_table(table_, d.table());
    if (d.degree() != 1 || d.form_degree() != 0)
        throw std::invalid_argument("FreeComplex::set_base: base derivation must have degree 1");
    base_ = std::move(d);
}

PolyMatrix& FreeComplex::component(int p, int q)
{
    if (q <= p || p < lo_ || q > hi())
        throw std::invalid_argument("FreeComplex::component: bad degree pair");
    auto it = maps_.find({p, q});
    if (it == maps_.end())
        it = maps_.emplace(std::pair{p, q}, PolyMatrix(table_, rank(q), rank(p))).first;
    return it->second;
}

const PolyMatrix* FreeComplex::find_component(int p, int q) const
{
    auto it = maps_.find({p, q});
    return it == maps_.end() ? nullptr : &it->second;
}

PolyMatrix FreeComplex::differential(int p) const
{
    if (const auto* m = find_component(p, p + 1))
        return *m;
    return PolyMatrix(table_, rank(p + 1), rank(p));
}

void FreeComplex::set_labels(int p, std::vector<std::string> labels)
{
    if (labels.size() != rank(p))
        throw std::invalid_argument("FreeComplex::set_labels: wrong count");
    labels_.at(static_cast<std::size_t>(p - lo_)) = std::move(labels);
}

const std::vector<std::string>& FreeComplex::labels(int p) const
{
    return labels_.at(static_cast<std::size_t>(p - lo_));
}

long FreeComplex::euler_characteristic() const
{
    long e = 0;
    for (int p = lo_; p <= hi(); ++p)
        e += ((p & 1) ? -1 : 1) * static_cast<long>(rank(p));
    return e;
}

namespace {

std::string component_name(int p, int q)
{
    return "degree " + std::to_string(p) + " -> " + std::to_string(q);
}

}  // namespace

Verdict check_d_squared(const FreeComplex& c)
{
    const auto& table = c.table();
    if (c.base()) {
        for (std::size_t g = 0; g < table->size(); ++g) {
            auto dd = c.base()->apply(c.base()->image(static_cast<std::uint16_t>(g)));
            if (!dd.is_zero())
                return {false, Failure{"base d^2 on " + (*table)[g].name, 0, 0, format_poly(dd)}, ""};
        }
    }
    // Composites D o D, grouped by (source degree, target degree).
    std::map<std::pair<int, int>, PolyMatrix> acc;
    auto slot = [&](int p, int r) -> PolyMatrix& {
        auto it = acc.find({p, r});
        if (it == acc.end())
            it = acc.emplace(std::pair{p, r}, PolyMatrix(table, c.rank(r), c.rank(p))).first;
        return it->second;
    };
    for (const auto& [pq, a] : c.components()) {
        auto [p, q] = pq;
        if (c.base())
            for (const auto& [k, v] : a.entries())
                slot(p, q).add(k.first, k.second, c.base()->apply(v));
        const bool a_odd = ((p + 1 - q) & 1) != 0;
        for (const auto& [qr, b] : c.components()) {
            if (qr.first != q)
                continue;
            int r = qr.second;
            std::vector<std::vector<std::pair<std::size_t, const SuperPoly*>>> bcol(b.cols());
            for (const auto& [kb, vb] : b.entries())
                bcol[kb.second].emplace_back(kb.first, &vb);
            auto& out = slot(p, r);
            for (const auto& [ka, va] : a.entries()) {
                for (const auto& [m, vb] : bcol[ka.first]) {
                    SuperPoly prod = va * *vb;
                    out.add(m, ka.second, a_odd ? -prod : prod);
                }
            }
        }
    }
    for (const auto& [pr, m] : acc) {
        if (m.is_zero())
            continue;
        const auto& [k, v] = *m.entries().begin();
        return {false, Failure{"D^2 " + component_name(pr.first, pr.second), k.first + 1, k.second + 1, format_poly(v)}, ""};
    }
    return {};
}

QComplex evaluate_at(const FreeComplex& c, const std::function<Rational(std::uint16_t)>& value)
{
    QComplex out;
    out.lo = c.lo();
    out.ranks = c.ranks();
    for (int p = c.lo(); p < c.hi(); ++p)
        out.d.push_back(c.differential(p).evaluate(value));
    return out;
}

QComplex evaluate_at(const FreeComplex& c, const std::map<std::uint16_t, Rational>& values)
{
    const auto& t = *c.table();
    for (std::size_t g = 0; g < t.size(); ++g)
        if (t[g].degree == 0 && t[g].form_degree == 0 && !values.count(static_cast<std::uint16_t>(g)))
            throw std::invalid_argument("evaluate_at: no value for " + t[g].name);
    return evaluate_at(c, [&](std::uint16_t g) { return values.at(g); });
}

FpComplex reduce_mod(const QComplex& c, std::uint64_t prime)
{
    FpComplex out;
    out.lo = c.lo;
    out.ranks = c.ranks;
    for (const auto& m : c.d)
        out.d.push_back(reduce_mod(m, prime));
    return out;
}

template <class K>
Verdict check_d_squared(const ScalarComplex<K>& c, const K& zero)
{
    for (std::size_t k = 0; k + 1 < c.d.size(); ++k) {
        auto m = c.d[k + 1].mul(c.d[k], zero);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) {
                    int p = c.lo + static_cast<int>(k);
                    return {false, Failure{"d^2 " + component_name(p, p + 2), i + 1, j + 1, m(i, j).str()}, ""};
                }
    }
    return {};
}

template Verdict check_d_squared(const ScalarComplex<Rational>&, const Rational&);
template Verdict check_d_squared(const ScalarComplex<Fp>&, const Fp&);

namespace {

template <class K, class RankFn>
std::map<int, std::size_t> homology_impl(const ScalarComplex<K>& c, const K& zero, RankFn rank_of)
{
    if (!check_d_squared(c, zero).ok)
        throw std::invalid_argument("homology_dims: d o d != 0");
    std::vector<std::size_t> rk(c.d.size());
    for (std::size_t k = 0; k < c.d.size(); ++k)
        rk[k] = rank_of(c.d[k]);
    std::map<int, std::size_t> out;
    for (std::size_t k = 0; k < c.ranks.size(); ++k) {
        std::size_t outgoing = k < rk.size() ? rk[k] : 0;
        std::size_t incoming = k > 0 ? rk[k - 1] : 0;
        out[c.lo + static_cast<int>(k)] = c.ranks[k] - outgoing - incoming;
    }
    return out;
}

}  // namespace

std::map<int, std::size_t> homology_dims(const QComplex& c)
{
    return homology_impl(c, Rational(), [](const QMatrix& m) { return rank(m); });
}

std::map<int, std::size_t> homology_dims(const FpComplex& c, std::uint64_t prime)
{
    return homology_impl(c, Fp(0, prime), [](const FpMatrix& m) { return rank(m); });
}

bool ChainMapVerdict::all_invertible() const
{
    for (const auto& [p, ok] : invertible)
        if (!ok)
            return false;
    return true;
}

void to_json(nlohmann::json& j, const ChainMapVerdict& v)
{
    j = nlohmann::json{{"commutes", v.commutes}};
    if (!v.invertible.empty()) {
        nlohmann::json inv = nlohmann::json::object();
        for (const auto& [p, ok] : v.invertible)
            inv[std::to_string(p)] = ok;
        j["invertible"] = inv;
    }
}

namespace {

void check_shapes(const ChainMap& f)
{
    if (!f.source || !f.target)
        throw std::invalid_argument("check_chain_map: missing complex");
    const auto& s = *f.source;
    const auto& t = *f.target;
    if (s.lo() != t.lo() || s.hi() != t.hi())
        throw std::invalid_argument("check_chain_map: degree ranges differ");
    require_same_table(s.table(), t.table());
    for (const auto& [p, m] : f.phi)
        if (m.rows() != t.rank(p) || m.cols() != s.rank(p))
            throw std::invalid_argument("check_chain_map: phi^" + std::to_string(p) + " has the wrong shape");
}

PolyMatrix phi_at(const ChainMap& f, int p)
{
    auto it = f.phi.find(p);
    if (it != f.phi.end())
        return it->second;
    return PolyMatrix(f.source->table(), f.target->rank(p), f.source->rank(p));
}

bool constant_entries(const PolyMatrix& m)
{
    for (const auto& [k, v] : m.entries())
        for (const auto& [mono, c] : v.terms())
            if (!mono.empty())
                return false;
    return true;
}

}  // namespace

ChainMapVerdict check_chain_map(const ChainMap& f)
{
    check_shapes(f);
    ChainMapVerdict out;
    for (int p = f.source->lo(); p <= f.source->hi(); ++p) {
        auto m = phi_at(f, p);
        if (constant_entries(m)) {
            auto q = m.evaluate([](std::uint16_t) { return Rational(); });
            out.invertible[p] = q.rows() == q.cols() && rank(q) == q.rows();
        }
    }
    for (int p = f.source->lo(); p < f.source->hi(); ++p) {
        auto diff = phi_at(f, p + 1) * f.source->differential(p) - f.target->differential(p) * phi_at(f, p);
        if (!diff.is_zero()) {
            const auto& [k, v] = *diff.entries().begin();
            out.commutes = {false, Failure{"square at " + component_name(p, p + 1), k.first + 1, k.second + 1, format_poly(v)}, ""};
            return out;
        }
    }
    return out;
}

ChainMapVerdict check_chain_map(const QComplex& source, const QComplex& target, const std::map<int, QMatrix>& phi)
{
    if (source.lo != target.lo || source.ranks.size() != target.ranks.size())
        throw std::invalid_argument("check_chain_map: degree ranges differ");
    ChainMapVerdict out;
    for (std::size_t k = 0; k < source.ranks.size(); ++k) {
        int p = source.lo + static_cast<int>(k);
        auto it = phi.find(p);
        if (it == phi.end() || it->second.rows() != target.ranks[k] || it->second.cols() != source.ranks[k])
            throw std::invalid_argument("check_chain_map: phi^" + std::to_string(p) + " missing or misshapen");
        out.invertible[p] = it->second.rows() == it->second.cols() && rank(it->second) == it->second.rows();
    }
    for (std::size_t k = 0; k + 1 < source.ranks.size(); ++k) {
        int p = source.lo + static_cast<int>(k);
        auto diff = phi.at(p + 1).mul(source.d[k], Rational()) - target.d[k].mul(phi.at(p), Rational());
        for (std::size_t i = 0; i < diff.rows(); ++i)
            for (std::size_t j = 0; j < diff.cols(); ++j)
                if (!diff(i, j).is_zero()) {
                    out.commutes = {false, Failure{"square at " + component_name(p, p + 1), i + 1, j + 1, diff(i, j).str()}, ""};
                    return out;
                }
    }
    return out;
}

ChainMapVerdict check_chain_map(const ChainMap& f, const std::function<Rational(std::uint16_t)>& value)
{
    check_shapes(f);
    std::map<int, QMatrix> phi;
    for (int p = f.source->lo(); p <= f.source->hi(); ++p)
        phi[p] = phi_at(f, p).evaluate(value);
    return check_chain_map(evaluate_at(*f.source, value), evaluate_at(*f.target, value), phi);
}

nlohmann::json complex_to_json(const FreeComplex& c)
{
    nlohmann::json j;
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    j["ranks"] = c.ranks();
    j["components"] = nlohmann::json::array();
    for (const auto& [pq, m] : c.components()) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [k, v] : m.entries())
            entries.push_back({k.first, k.second, format_poly(v)});
        j["components"].push_back({{"from", pq.first}, {"to", pq.second}, {"entries", entries}});
    }
    return j;
}

FreeComplex complex_from_json(const nlohmann::json& j, const TablePtr& table)
{
    FreeComplex c(table, j.at("lo").get<int>(), j.at("ranks").get<std::vector<std::size_t>>());
    if (j.contains("hi") && j.at("hi").get<int>() != c.hi())
        throw std::invalid_argument("complex_from_json: hi does not match ranks");
    for (const auto& comp : j.at("components")) {
        auto& m = c.component(comp.at("from").get<int>(), comp.at("to").get<int>());
        for (const auto& e : comp.at("entries"))
            m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), parse_poly(table, e.at(2).get<std::string>()));
    }
    return c;
}

}  // namespace dcrit
