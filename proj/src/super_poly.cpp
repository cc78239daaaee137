#include "dcrit/super_poly.hpp"

#include "dcrit/poly_text.hpp"

#include <stdexcept>

namespace dcrit {

void require_same_table(const TablePtr& a, const TablePtr& b)
{
    if (a.get() != b.get())
        throw std::invalid_argument("SuperPoly: mismatched generator tables");
}

int monomial_degree(const GeneratorTable& t, const Monomial& m)
{
    int d = 0;
    for (auto g : m)
        d += t[g].degree;
    return d;
}

int monomial_form_degree(const GeneratorTable& t, const Monomial& m)
{
    int d = 0;
    for (auto g : m)
        d += t[g].form_degree;
    return d;
}

bool monomial_odd(const GeneratorTable& t, const Monomial& m)
{
    bool odd = false;
    for (auto g : m)
        odd ^= t[g].odd();
    return odd;
}

int multiply_monomials(const GeneratorTable& t, const Monomial& a, const Monomial& b, Monomial& out)
{
    out.clear();
    out.reserve(a.size() + b.size());
    // Sign: each odd generator of b jumps over the odd generators of a that
    // sort after it.
    std::size_t odd_a_remaining = 0;
    for (auto g : a)
        odd_a_remaining += t[g].odd() ? 1 : 0;
    int sign = 1;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && a[ia] <= b[ib])) {
            if (ib < b.size() && a[ia] == b[ib] && t[a[ia]].odd())
                return 0;
            if (t[a[ia]].odd())
                --odd_a_remaining;
            out.push_back(a[ia++]);
        } else {
            if (t[b[ib]].odd() && (odd_a_remaining & 1))
                sign = -sign;
            out.push_back(b[ib++]);
        }
    }
    return sign;
}

SuperPoly SuperPoly::constant(TablePtr table, const Rational& c)
{
    SuperPoly p(std::move(table));
    p.add_term({}, c);
    return p;
}

SuperPoly SuperPoly::generator(TablePtr table, std::uint16_t index)
{
    if (index >= table->size())
        throw std::out_of_range("SuperPoly::generator: index out of range");
    SuperPoly p(std::move(table));
    p.add_term({index}, Rational(1));
    return p;
}

SuperPoly SuperPoly::generator(TablePtr table, Block b, int i, int j)
{
    auto k = table->index(b, i, j);
    return generator(std::move(table), k);
}

SuperPoly SuperPoly::monomial(TablePtr table, const Monomial& m, const Rational& c)
{
    SuperPoly p(std::move(table));
    p.add_term(m, c);
    return p;
}

void SuperPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<int> SuperPoly::degree() const
{
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int k = monomial_degree(*table_, m);
        if (d && *d != k)
            return std::nullopt;
        d = k;
    }
    return d ? d : std::optional<int>(0);
}

std::optional<int> SuperPoly::form_degree() const
{
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int k = monomial_form_degree(*table_, m);
        if (d && *d != k)
            return std::nullopt;
        d = k;
    }
    return d ? d : std::optional<int>(0);
}

bool SuperPoly::odd() const
{
    std::optional<bool> p;
    for (const auto& [m, c] : terms_) {
        bool k = monomial_odd(*table_, m);
        if (p && *p != k)
            throw std::logic_error("SuperPoly::odd: inhomogeneous parity");
        p = k;
    }
    return p.value_or(false);
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o)
{
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o)
{
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_)
        x *= c;
    return *this;
}

SuperPoly SuperPoly::operator-() const
{
    SuperPoly r = *this;
    for (auto& [m, x] : r.terms_)
        x = -x;
    return r;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b)
{
    require_same_table(a.table_, b.table_);
    SuperPoly r(a.table_);
    Monomial m;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            int s = multiply_monomials(*a.table_, ma, mb, m);
            if (s == 0)
                continue;
            Rational c = ca * cb;
            if (s < 0)
                c = -c;
            r.add_term(m, c);
        }
    return r;
}

bool operator==(const SuperPoly& a, const SuperPoly& b)
{
    require_same_table(a.table_, b.table_);
    return a.terms_ == b.terms_;
}

SuperPoly SuperPoly::with_table(TablePtr larger) const
{
    if (larger->size() < table_->size())
        throw std::invalid_argument("SuperPoly::with_table: target table is smaller");
    for (std::size_t k = 0; k < table_->size(); ++k)
        if ((*larger)[k].name != (*table_)[k].name)
            throw std::invalid_argument("SuperPoly::with_table: tables are not prefix-compatible");
    SuperPoly r(std::move(larger));
    r.terms_ = terms_;
    return r;
}

SuperPoly SuperPoly::restricted_to(TablePtr smaller) const
{
    SuperPoly r(std::move(smaller));
    const auto limit = r.table_->size();
    for (const auto& [m, c] : terms_) {
        for (auto g : m)
            if (g >= limit || (*r.table_)[g].name != (*table_)[g].name)
                throw std::invalid_argument("SuperPoly::restricted_to: generator " + (*table_)[g].name +
                                            " is not in the target table");
        r.terms_.emplace(m, c);
    }
    return r;
}

Rational SuperPoly::evaluate(const std::function<Rational(std::uint16_t)>& value) const
{
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (auto g : m) {
            const auto& gen = (*table_)[g];
            if (gen.degree != 0 || gen.form_degree != 0) {
                t = Rational();
                break;
            }
            t *= value(g);
            if (t.is_zero())
                break;
        }
        total += t;
    }
    return total;
}

std::map<std::uint16_t, SuperPoly> SuperPoly::split_last(const std::function<bool(std::uint16_t)>& is_symbol) const
{
    std::map<std::uint16_t, SuperPoly> out;
    for (const auto& [m, c] : terms_) {
        if (m.empty() || !is_symbol(m.back()))
            throw std::logic_error("split_last: term without a trailing module symbol");
        for (std::size_t k = 0; k + 1 < m.size(); ++k)
            if (is_symbol(m[k]))
                throw std::logic_error("split_last: term with more than one module symbol");
        Monomial prefix(m.begin(), m.end() - 1);
        auto it = out.try_emplace(m.back(), SuperPoly(table_)).first;
        it->second.add_term(prefix, c);
    }
    return out;
}

SuperPoly SuperPoly::partial_even(std::uint16_t gen) const
{
    if ((*table_)[gen].odd())
        throw std::invalid_argument("partial_even: generator is odd");
    SuperPoly r(table_);
    for (const auto& [m, c] : terms_) {
        long e = 0;
        Monomial rest;
        for (auto g : m) {
            if (g == gen && e == 0) {
                ++e;
                continue;
            }
            if (g == gen)
                ++e;
            rest.push_back(g);
        }
        if (e == 0)
            continue;
        // even generator: removing one copy needs no sign
        r.add_term(rest, c * Rational(e));
    }
    return r;
}

std::string SuperPoly::str() const { return format_poly(*this); }

Derivation::Derivation(TablePtr table, int degree, int form_degree)
    : table_(std::move(table)), degree_(degree), form_(form_degree)
{
    images_.reserve(table_->size());
    for (std::size_t k = 0; k < table_->size(); ++k)
        images_.emplace_back(table_);
}

void Derivation::set(std::uint16_t gen, SuperPoly image)
{
    require_same_table(table_, image.table());
    if (gen >= images_.size())
        throw std::out_of_range("Derivation::set: generator out of range");
    const auto& g = (*table_)[gen];
    if (!image.is_zero()) {
        auto d = image.degree();
        auto f = image.form_degree();
        if (!d || !f || *d != g.degree + degree_ || *f != g.form_degree + form_)
            throw std::invalid_argument("Derivation::set: image of " + g.name +
                                        " is not homogeneous of the required degree");
    }
    images_[gen] = std::move(image);
}

SuperPoly Derivation::apply(const SuperPoly& a) const
{
    require_same_table(table_, a.table());
    const auto& t = *table_;
    SuperPoly r(table_);
    const bool dodd = odd();
    Monomial left, tmp, full;
    for (const auto& [m, c] : a.terms()) {
        bool prefix_odd = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const SuperPoly& img = images_[m[i]];
            if (!img.is_zero()) {
                Monomial pre(m.begin(), m.begin() + static_cast<long>(i));
                Monomial post(m.begin() + static_cast<long>(i) + 1, m.end());
                Rational base = (dodd && prefix_odd) ? -c : c;
                for (const auto& [mi, ci] : img.terms()) {
                    int s1 = multiply_monomials(t, pre, mi, tmp);
                    if (s1 == 0)
                        continue;
                    int s2 = multiply_monomials(t, tmp, post, full);
                    if (s2 == 0)
                        continue;
                    Rational coef = base * ci;
                    if (s1 * s2 < 0)
                        coef = -coef;
                    r.add_term(full, coef);
                }
            }
            prefix_odd ^= t[m[i]].odd();
        }
    }
    return r;
}

}  // namespace dcrit
