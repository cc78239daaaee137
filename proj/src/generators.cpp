#include "dcrit/generators.hpp"

#include <mutex>
#include <stdexcept>

namespace dcrit {

const char* block_name(Block b)
{
    switch (b) {
    case Block::X0: return "X0";
    case Block::Y0: return "Y0";
    case Block::Z0: return "Z0";
    case Block::Xm1: return "Xm1";
    case Block::Ym1: return "Ym1";
    case Block::Zm1: return "Zm1";
    case Block::T: return "T";
    case Block::dX0: return "dX0";
    case Block::dY0: return "dY0";
    case Block::dZ0: return "dZ0";
    case Block::dXm1: return "dXm1";
    case Block::dYm1: return "dYm1";
    case Block::dZm1: return "dZm1";
    case Block::dT: return "dT";
    case Block::Gv: return "Gv";
    case Block::Custom: return "?";
    }
    return "?";
}

int block_degree(Block b)
{
    switch (b) {
    case Block::Xm1: case Block::Ym1: case Block::Zm1:
    case Block::dXm1: case Block::dYm1: case Block::dZm1:
        return -1;
    case Block::T: case Block::dT:
        return -2;
    case Block::Gv:
        return 1;
    default:
        return 0;
    }
}

int block_form_degree(Block b) { return static_cast<int>(b) >= static_cast<int>(Block::dX0) ? 1 : 0; }

TablePtr GeneratorTable::canonical(int n, bool with_derham)
{
    if (n < 1)
        throw std::invalid_argument("GeneratorTable: rank must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, TablePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, with_derham);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    auto t = std::shared_ptr<GeneratorTable>(new GeneratorTable());
    t->n_ = n;
    t->derham_ = with_derham;
    const int last = with_derham ? static_cast<int>(Block::Gv) : static_cast<int>(Block::T);
    for (int b = 0; b <= last; ++b) {
        auto blk = static_cast<Block>(b);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Generator g;
                g.name = std::string(block_name(blk)) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                g.degree = block_degree(blk);
                g.form_degree = block_form_degree(blk);
                g.block = blk;
                g.i = i;
                g.j = j;
                t->gens_.push_back(std::move(g));
            }
    }
    t->finish();
    cache[key] = t;
    return t;
}

TablePtr GeneratorTable::custom(std::vector<Generator> gens)
{
    auto t = std::shared_ptr<GeneratorTable>(new GeneratorTable());
    t->gens_ = std::move(gens);
    t->finish();
    return t;
}

void GeneratorTable::finish()
{
    if (gens_.size() > 65535)
        throw std::invalid_argument("GeneratorTable: too many generators");
    for (std::size_t k = 0; k < gens_.size(); ++k)
        if (!by_name_.emplace(gens_[k].name, static_cast<std::uint16_t>(k)).second)
            throw std::invalid_argument("GeneratorTable: duplicate name " + gens_[k].name);
}

std::uint16_t GeneratorTable::index(Block b, int i, int j) const
{
    if (n_ == 0 || i < 1 || j < 1 || i > n_ || j > n_)
        throw std::out_of_range("GeneratorTable::index: bad position");
    const int bi = static_cast<int>(b);
    if (bi >= static_cast<int>(Block::dX0) && !derham_)
        throw std::out_of_range("GeneratorTable::index: table has no de Rham symbols");
    return static_cast<std::uint16_t>(bi * n_ * n_ + (i - 1) * n_ + (j - 1));
}

std::uint16_t GeneratorTable::index_of(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw std::invalid_argument("unknown generator '" + name + "'");
    return it->second;
}

std::uint16_t GeneratorTable::derham_of(std::uint16_t k) const
{
    if (!derham_ || k >= 7 * n_ * n_)
        throw std::out_of_range("GeneratorTable::derham_of: not a base generator");
    return static_cast<std::uint16_t>(k + 7 * n_ * n_);
}

}  // namespace dcrit
