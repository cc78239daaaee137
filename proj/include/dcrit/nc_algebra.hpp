#pragma once

#include "dcrit/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dcrit {

/// Generators of the free dga resolving k[x,y,z]: x,y,z in degree 0,
/// u,v,w in degree -1, t in degree -2.
enum class NCGen : std::uint8_t { x, y, z, u, v, w, t };

inline constexpr std::array<NCGen, 7> kNCGens = {NCGen::x, NCGen::y, NCGen::z, NCGen::u,
                                                 NCGen::v, NCGen::w, NCGen::t};

int nc_degree(NCGen g);
char nc_letter(NCGen g);

using NCWord = std::vector<NCGen>;

/// Element of the free (noncommutative) graded algebra on x,y,z,u,v,w,t.
class NCElement {
public:
    using Terms = std::map<NCWord, Rational>;

    NCElement() = default;
    static NCElement one();
    static NCElement gen(NCGen g);
    static NCElement word(const NCWord& w, const Rational& c = Rational(1));
    /// Parses e.g. "x*u - u*x + 2*y*z"; letters may also be juxtaposed ("xu").
    static NCElement parse(const std::string& text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const NCWord& w, const Rational& c);

    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    NCElement operator-() const;
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(const Rational& c, const NCElement& a);
    friend bool operator==(const NCElement& a, const NCElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCElement& a, const NCElement& b) { return !(a == b); }

    std::string str() const;

private:
    Terms terms_;
};

int word_degree(const NCWord& w);

/// Word concatenation extended bilinearly.
NCElement nc_mul(const NCElement& a, const NCElement& b);

/// d on generators: dx=dy=dz=0, du=yz-zy, dv=zx-xz, dw=xy-yx,
/// dt=(xu-ux)+(yv-vy)+(zw-wz).
NCElement nc_generator_differential(NCGen g);

/// Degree +1 derivation of the free algebra extending the generator rule.
NCElement nc_differential(const NCElement& a);

}  // namespace dcrit
