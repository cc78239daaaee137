#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dcrit {

/// Families of generators. Declaration order is the global generator order;
/// inside a family generators are ordered by (i, j) lexicographically.
enum class Block : std::uint8_t {
    X0, Y0, Z0,        // degree 0 matrix coordinates
    Xm1, Ym1, Zm1,     // degree -1, d(Xm1(i,j)) = [Y0,Z0]^T(i,j)
    T,                 // degree -2 gauge generators
    dX0, dY0, dZ0,     // de Rham symbols of the above (form degree 1)
    dXm1, dYm1, dZm1,
    dT,
    Gv,                // dual of gl_n, degree 1, form degree 1
    Custom,
};

const char* block_name(Block b);
int block_degree(Block b);
int block_form_degree(Block b);

struct Generator {
    std::string name;
    int degree = 0;       // cohomological degree
    int form_degree = 0;  // number of de Rham symbols (0 or 1)
    Block block = Block::Custom;
    int i = 0, j = 0;     // 1-based matrix position, 0 for custom generators

    /// Parity under the total-degree Koszul rule.
    bool odd() const { return ((degree + form_degree) & 1) != 0; }
};

class GeneratorTable;
using TablePtr = std::shared_ptr<const GeneratorTable>;

class GeneratorTable {
public:
    /// Table for rank n: X0..T (7n^2 generators), optionally followed by the
    /// de Rham symbols and the gl_n dual (8n^2 more). Base generators keep
    /// the same indices in both tables.
    static TablePtr canonical(int n, bool with_derham);
    /// Arbitrary named generators; order of the list is the global order.
    static TablePtr custom(std::vector<Generator> gens);

    int rank() const { return n_; }
    bool has_derham() const { return derham_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t k) const { return gens_[k]; }
    const std::vector<Generator>& generators() const { return gens_; }

    /// Index of block generator (i, j), 1-based.
    std::uint16_t index(Block b, int i, int j) const;
    /// Index by printed name; throws if unknown.
    std::uint16_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return by_name_.count(name) != 0; }

    /// Index of the de Rham symbol of base generator k.
    std::uint16_t derham_of(std::uint16_t k) const;

private:
    GeneratorTable() = default;
    void finish();

    int n_ = 0;
    bool derham_ = false;
    std::vector<Generator> gens_;
    std::map<std::string, std::uint16_t> by_name_;
};

}  // namespace dcrit
