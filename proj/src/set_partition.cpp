#include "branchcov/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace branchcov {

SetPartition::SetPartition(std::size_t d, std::vector<Block> blocks)
    : d_(d), blocks_(std::move(blocks)), owner_(d, d)
{
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("set partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (auto x : blocks_[i]) {
            if (x < 1 || x > d)
                throw std::invalid_argument("set partition element out of range");
            if (owner_[x - 1] != d)
                throw std::invalid_argument("set partition blocks overlap");
            owner_[x - 1] = i;
        }
    if (std::find(owner_.begin(), owner_.end(), d) != owner_.end())
        throw std::invalid_argument("set partition blocks do not cover {1..d}");
}

SetPartition SetPartition::singletons(std::size_t d)
{
    std::vector<Block> blocks;
    for (std::size_t x = 1; x <= d; ++x)
        blocks.push_back({x});
    return SetPartition(d, std::move(blocks));
}

SetPartition SetPartition::single_block(std::size_t d)
{
    Block all(d);
    std::iota(all.begin(), all.end(), std::size_t{1});
    return SetPartition(d, {all});
}

std::size_t SetPartition::block_index(std::size_t x) const
{
    if (x < 1 || x > d_)
        throw std::out_of_range("point outside {1..d}");
    return owner_[x - 1];
}

bool SetPartition::refines(const SetPartition& coarser) const
{
    if (coarser.d_ != d_)
        return false;
    for (const auto& block : blocks_) {
        auto target = coarser.block_index(block.front());
        for (auto x : block)
            if (coarser.block_index(x) != target)
                return false;
    }
    return true;
}

std::string SetPartition::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            out += ",";
        out += "{";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(blocks_[i][j]);
        }
        out += "}";
    }
    return out + "}";
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

SetPartition join(const SetPartition& a, const SetPartition& b)
{
    if (a.degree() != b.degree())
        throw std::invalid_argument("join: degree mismatch");
    const auto d = a.degree();
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto* part : {&a, &b})
        for (const auto& block : part->blocks())
            for (auto x : block)
                parent[find_root(parent, x - 1)] = find_root(parent, block.front() - 1);
    std::vector<std::vector<std::size_t>> grouped(d);
    for (std::size_t x = 0; x < d; ++x)
        grouped[find_root(parent, x)].push_back(x + 1);
    std::vector<SetPartition::Block> blocks;
    for (auto& g : grouped)
        if (!g.empty())
            blocks.push_back(std::move(g));
    return SetPartition(d, std::move(blocks));
}

} // namespace branchcov
