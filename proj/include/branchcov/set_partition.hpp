#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace branchcov {

/// A set partition of {1,...,d}.
///
/// Stored canonically: each block sorted ascending, blocks sorted by their
/// minimum element. Two SetPartitions compare equal iff they are the same
/// partition.
class SetPartition {
public:
    using Block = std::vector<std::size_t>;

    SetPartition() = default;

    /// Validates disjointness and coverage of {1,...,d}; canonicalizes order.
    SetPartition(std::size_t d, std::vector<Block> blocks);

    static SetPartition singletons(std::size_t d);
    static SetPartition single_block(std::size_t d);

    std::size_t degree() const noexcept { return d_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    /// Index (into blocks()) of the block containing x (1-based).
    std::size_t block_index(std::size_t x) const;

    /// True iff every block of *this is contained in a block of `coarser`.
    bool refines(const SetPartition& coarser) const;

    std::string to_string() const;

    bool operator==(const SetPartition&) const = default;

private:
    std::size_t d_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::size_t> owner_; // owner_[x-1] = block index
};

/// Join in the partition lattice: the finest partition coarser than both.
SetPartition join(const SetPartition& a, const SetPartition& b);

} // namespace branchcov
