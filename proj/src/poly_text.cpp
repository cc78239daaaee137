#include "dcrit/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dcrit {

std::string format_poly(const SuperPoly& p)
{
    if (p.is_zero())
        return "0";
    const auto& t = *p.table();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
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
        if (m.empty()) {
            os << a;
            continue;
        }
        if (!a.is_one())
            os << a << " * ";
        for (std::size_t k = 0; k < m.size();) {
            std::size_t e = 1;
            while (k + e < m.size() && m[k + e] == m[k])
                ++e;
            if (k)
                os << '*';
            os << t[m[k]].name;
            if (e > 1)
                os << '^' << e;
            k += e;
        }
    }
    return os.str();
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

bool looks_numeric(const std::string& s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/')
            return false;
    return true;
}

SuperPoly parse_term(const TablePtr& table, const std::string& term)
{
    SuperPoly acc = SuperPoly::constant(table, Rational(1));
    std::size_t depth = 0, start = 0;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k <= term.size(); ++k) {
        if (k == term.size() || (term[k] == '*' && depth == 0)) {
            factors.push_back(trim(std::string_view(term).substr(start, k - start)));
            start = k + 1;
        } else if (term[k] == '(') {
            ++depth;
        } else if (term[k] == ')') {
            if (depth == 0)
                throw std::invalid_argument("parse_poly: unbalanced ')'");
            --depth;
        }
    }
    for (const auto& f : factors) {
        if (f.empty())
            throw std::invalid_argument("parse_poly: empty factor in '" + term + "'");
        if (looks_numeric(f)) {
            acc *= Rational::parse(f);
            continue;
        }
        std::string name = f;
        long exp = 1;
        if (auto caret = f.rfind('^'); caret != std::string::npos && f.find(')', caret) == std::string::npos) {
            name = trim(std::string_view(f).substr(0, caret));
            std::string e = trim(std::string_view(f).substr(caret + 1));
            if (e.empty() || !looks_numeric(e) || e.find('/') != std::string::npos)
                throw std::invalid_argument("parse_poly: bad exponent in '" + f + "'");
            exp = std::stol(e);
        }
        auto g = SuperPoly::generator(table, table->index_of(name));
        for (long k = 0; k < exp; ++k)
            acc = acc * g;
    }
    return acc;
}

}  // namespace

SuperPoly parse_poly(const TablePtr& table, std::string_view text)
{
    std::string s = trim(text);
    if (s.empty())
        throw std::invalid_argument("parse_poly: empty input");
    SuperPoly result(table);
    std::size_t depth = 0, start = 0;
    int sign = 1;
    auto flush = [&](std::size_t end) {
        std::string term = trim(std::string_view(s).substr(start, end - start));
        if (term.empty())
            throw std::invalid_argument("parse_poly: empty term in '" + s + "'");
        SuperPoly t = parse_term(table, term);
        if (sign < 0)
            t = -t;
        result += t;
    };
    std::size_t k = 0;
    if (s[0] == '-' || s[0] == '+') {
        sign = s[0] == '-' ? -1 : 1;
        start = k = 1;
    }
    for (; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
        } else if ((ch == '+' || ch == '-') && depth == 0) {
            flush(k);
            sign = ch == '-' ? -1 : 1;
            start = k + 1;
        }
    }
    flush(s.size());
    return result;
}

}  // namespace dcrit
