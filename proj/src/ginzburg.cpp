#include "dcrit/ginzburg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dcrit {

const char* gslot_name(GSlot s)
{
    switch (s) {
    case GSlot::one: return "1";
    case GSlot::x: return "x";
    case GSlot::y: return "y";
    case GSlot::z: return "z";
    case GSlot::xs: return "x*";
    case GSlot::ys: return "y*";
    case GSlot::zs: return "z*";
    case GSlot::R: return "R";
    }
    return "?";
}

int gslot_degree(GSlot s)
{
    switch (s) {
    case GSlot::one: return 0;
    case GSlot::x: case GSlot::y: case GSlot::z: return -1;
    case GSlot::xs: case GSlot::ys: case GSlot::zs: return -2;
    case GSlot::R: return -3;
    }
    return 0;
}

BimoduleElement BimoduleElement::generator(GSlot s)
{
    BimoduleElement e;
    e.add("", s, "", Rational(1));
    return e;
}

void BimoduleElement::add(const std::string& left, GSlot s, const std::string& right, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{left, s, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return *this;
}

BimoduleElement BimoduleElement::reduced() const
{
    BimoduleElement r;
    for (const auto& [k, c] : terms_) {
        auto [l, s, rt] = k;
        std::sort(l.begin(), l.end());
        std::sort(rt.begin(), rt.end());
        r.add(l, s, rt, c);
    }
    return r;
}

std::string BimoduleElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (a.sign() < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        if (!a.is_one())
            os << a << '*';
        const auto& [l, s, r] = k;
        os << (l.empty() ? "1" : l) << "(x)" << gslot_name(s) << "(x)" << (r.empty() ? "1" : r);
    }
    return os.str();
}

GinzburgResolution build_ginzburg_resolution()
{
    GinzburgResolution g;
    const GSlot e[3] = {GSlot::x, GSlot::y, GSlot::z};
    const GSlot es[3] = {GSlot::xs, GSlot::ys, GSlot::zs};
    const char letter[3] = {'x', 'y', 'z'};
    for (int k = 0; k < 3; ++k) {
        std::string a(1, letter[k]);
        BimoduleElement a0;
        a0.add(a, GSlot::one, "", Rational(1));
        a0.add("", GSlot::one, a, Rational(-1));
        g.alpha[e[k]] = a0;

        // 1 (x) x* (x) 1 -> y(x)z(x)1 + 1(x)y(x)z - z(x)y(x)1 - 1(x)z(x)y, cyclically
        int p = (k + 1) % 3, q = (k + 2) % 3;
        std::string sp(1, letter[p]), sq(1, letter[q]);
        BimoduleElement a1;
        a1.add(sp, e[q], "", Rational(1));
        a1.add("", e[p], sq, Rational(1));
        a1.add(sq, e[p], "", Rational(-1));
        a1.add("", e[q], sp, Rational(-1));
        g.alpha[es[k]] = a1;
    }
    BimoduleElement a2;
    for (int k = 0; k < 3; ++k) {
        std::string a(1, letter[k]);
        a2.add("", es[k], a, Rational(1));
        a2.add(a, es[k], "", Rational(-1));
    }
    g.alpha[GSlot::R] = a2;
    return g;
}

BimoduleElement apply_alpha(const GinzburgResolution& g, const BimoduleElement& e)
{
    BimoduleElement out;
    for (const auto& [k, c] : e.terms()) {
        const auto& [l, s, r] = k;
        if (s == GSlot::one)
            throw std::invalid_argument("apply_alpha: degree-0 generators have no alpha image");
        for (const auto& [ki, ci] : g.image(s).terms()) {
            const auto& [li, si, ri] = ki;
            out.add(l + li, si, ri + r, c * ci);
        }
    }
    return out;
}

std::map<std::string, Rational> multiply_out(const BimoduleElement& e)
{
    std::map<std::string, Rational> out;
    for (const auto& [k, c] : e.terms()) {
        const auto& [l, s, r] = k;
        if (s != GSlot::one)
            throw std::invalid_argument("multiply_out: slot is not C (x) C");
        std::string w = l + r;
        std::sort(w.begin(), w.end());
        auto& v = out[w];
        v += c;
        if (v.is_zero())
            out.erase(w);
    }
    return out;
}

std::array<GinzburgCheck, 7> check_ginzburg_complex(const GinzburgResolution& g)
{
    std::array<GinzburgCheck, 7> out;
    std::size_t k = 0;
    for (auto s : {GSlot::xs, GSlot::ys, GSlot::zs, GSlot::R}) {
        auto composite = apply_alpha(g, g.image(s));
        auto red = composite.reduced();
        out[k++] = {std::string(s == GSlot::R ? "alpha^-1 o alpha^-2 on " : "alpha^0 o alpha^-1 on ") + gslot_name(s),
                    red.is_zero(), composite.str(), red.str()};
    }
    for (auto s : {GSlot::x, GSlot::y, GSlot::z}) {
        auto prod = multiply_out(g.image(s));
        out[k++] = {std::string("multiplication o alpha^0 on ") + gslot_name(s), prod.empty(), g.image(s).str(),
                    prod.empty() ? "0" : "nonzero"};
    }
    return out;
}

}  // namespace dcrit
