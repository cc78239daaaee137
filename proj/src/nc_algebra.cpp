#include "dcrit/nc_algebra.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dcrit {

int nc_degree(NCGen g)
{
    switch (g) {
    case NCGen::x: case NCGen::y: case NCGen::z: return 0;
    case NCGen::u: case NCGen::v: case NCGen::w: return -1;
    case NCGen::t: return -2;
    }
    return 0;
}

char nc_letter(NCGen g) { return "xyzuvwt"[static_cast<int>(g)]; }

int word_degree(const NCWord& w)
{
    int d = 0;
    for (auto g : w)
        d += nc_degree(g);
    return d;
}

NCElement NCElement::one() { return word({}); }
NCElement NCElement::gen(NCGen g) { return word({g}); }

NCElement NCElement::word(const NCWord& w, const Rational& c)
{
    NCElement e;
    e.add_term(w, c);
    return e;
}

void NCElement::add_term(const NCWord& w, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NCElement& NCElement::operator+=(const NCElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NCElement NCElement::operator-() const
{
    NCElement r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

NCElement operator*(const Rational& c, const NCElement& a)
{
    NCElement r;
    for (const auto& [w, x] : a.terms_)
        r.add_term(w, c * x);
    return r;
}

NCElement nc_mul(const NCElement& a, const NCElement& b)
{
    NCElement r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NCElement nc_generator_differential(NCGen g)
{
    using G = NCGen;
    auto comm = [](G a, G b) { return NCElement::word({a, b}) - NCElement::word({b, a}); };
    switch (g) {
    case G::x: case G::y: case G::z: return {};
    case G::u: return comm(G::y, G::z);
    case G::v: return comm(G::z, G::x);
    case G::w: return comm(G::x, G::y);
    case G::t: return comm(G::x, G::u) + comm(G::y, G::v) + comm(G::z, G::w);
    }
    return {};
}

NCElement nc_differential(const NCElement& a)
{
    NCElement r;
    for (const auto& [w, c] : a.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            NCElement dg = nc_generator_differential(w[i]);
            if (!dg.is_zero()) {
                Rational s = (prefix_degree & 1) ? -c : c;
                for (const auto& [wd, cd] : dg.terms()) {
                    NCWord full(w.begin(), w.begin() + static_cast<long>(i));
                    full.insert(full.end(), wd.begin(), wd.end());
                    full.insert(full.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                    r.add_term(full, s * cd);
                }
            }
            prefix_degree += nc_degree(w[i]);
        }
    }
    return r;
}

std::string NCElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        first = false;
        if (w.empty()) {
            os << a;
            continue;
        }
        if (!a.is_one())
            os << a << '*';
        for (std::size_t k = 0; k < w.size(); ++k)
            os << (k ? "*" : "") << nc_letter(w[k]);
    }
    return os.str();
}

NCElement NCElement::parse(const std::string& text)
{
    NCElement out;
    std::size_t k = 0;
    auto skip = [&] {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k])))
            ++k;
    };
    skip();
    if (k == text.size())
        throw std::invalid_argument("NCElement::parse: empty input");
    while (k < text.size()) {
        int sign = 1;
        skip();
        while (k < text.size() && (text[k] == '+' || text[k] == '-')) {
            if (text[k] == '-')
                sign = -sign;
            ++k;
            skip();
        }
        Rational c(sign);
        NCWord w;
        bool any = false;
        while (k < text.size() && text[k] != '+' && text[k] != '-') {
            char ch = text[k];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
                ++k;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t e = k;
                while (e < text.size() && (std::isdigit(static_cast<unsigned char>(text[e])) || text[e] == '/'))
                    ++e;
                c *= Rational::parse(text.substr(k, e - k));
                k = e;
                any = true;
                continue;
            }
            auto pos = std::string("xyzuvwt").find(ch);
            if (pos == std::string::npos)
                throw std::invalid_argument(std::string("NCElement::parse: bad character '") + ch + "'");
            w.push_back(static_cast<NCGen>(pos));
            any = true;
            ++k;
        }
        if (!any)
            throw std::invalid_argument("NCElement::parse: empty term");
        out.add_term(w, c);
    }
    return out;
}

}  // namespace dcrit
