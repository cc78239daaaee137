#pragma once

#include "dcrit/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>

namespace dcrit {

/// Free generators of the terms of the bimodule resolution of C = k[x,y,z]:
///   degree -3: R (= 1 (x) 1 of (C (x) C)^R)
///   degree -2: x*, y*, z*      (C (x) E* (x) C)
///   degree -1: x, y, z         (C (x) E (x) C)
///   degree  0: one             (C (x) C)
enum class GSlot : std::uint8_t { one, x, y, z, xs, ys, zs, R };

const char* gslot_name(GSlot s);
int gslot_degree(GSlot s);

/// Sum of c * (left word) (x) slot (x) (right word); words over {x,y,z}.
class BimoduleElement {
public:
    using Key = std::tuple<std::string, GSlot, std::string>;

    static BimoduleElement generator(GSlot s);
    void add(const std::string& left, GSlot s, const std::string& right, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BimoduleElement& operator+=(const BimoduleElement& o);
    /// Rewrites every word to sorted order with xy = yx, yz = zy, zx = xz.
    BimoduleElement reduced() const;
    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

struct GinzburgResolution {
    /// Images of the free generators: alpha0 on x,y,z, alpha^{-1} on x*,y*,z*,
    /// alpha^{-2} on R.
    std::map<GSlot, BimoduleElement> alpha;

    const BimoduleElement& image(GSlot s) const { return alpha.at(s); }
};

GinzburgResolution build_ginzburg_resolution();

/// Bimodule extension: a (x) s (x) b -> a alpha(s) b.
BimoduleElement apply_alpha(const GinzburgResolution& g, const BimoduleElement& e);

/// Multiplication C (x) C -> C on slot-one terms, as sorted monomials.
std::map<std::string, Rational> multiply_out(const BimoduleElement& e);

struct GinzburgCheck {
    std::string name;
    bool ok = false;
    std::string unreduced;  // composite before rewriting
    std::string residue;    // after rewriting, "0" on success
};

/// alpha0 o alpha^{-1} on x*,y*,z*, alpha^{-1} o alpha^{-2} on R, and
/// multiplication o alpha0 on x,y,z.
std::array<GinzburgCheck, 7> check_ginzburg_complex(const GinzburgResolution& g);

}  // namespace dcrit
