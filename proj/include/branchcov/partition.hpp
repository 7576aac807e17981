#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace branchcov {

/// An integer partition, stored as weakly decreasing positive parts.
///
/// Partitions index conjugacy classes of S_d (via cycle type) and the cells
/// of the local branched-cover complex.
class Partition {
public:
    using Part = unsigned;

    /// The empty partition of 0.
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<Part> parts);

    /// Sorts `parts` decreasingly; zero parts are rejected.
    static Partition from_unsorted(std::vector<Part> parts);

    /// Parses "4,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    static Partition ones(std::size_t d);
    /// The hook (k, 1^{d-k}).
    static Partition hook(Part k, std::size_t d);

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    std::size_t multiplicity(Part k) const noexcept;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on parts; `enumerate_partitions` lists in the reverse of this order.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<Part> parts_;
    std::size_t degree_ = 0;
};

/// All partitions of d, in reverse lexicographic order: (d) first, (1^d) last.
std::vector<Partition> enumerate_partitions(std::size_t d);

/// N(λ) = d - (number of parts).
std::size_t absolute_length(const Partition& lam);

/// λ + 1: append a part equal to 1.
Partition add_one(const Partition& lam);

/// Sum of the parts >= 2, i.e. the size of the support of a representative.
std::size_t support_size(const Partition& lam);

/// Cycle type of a product of disjoint-support representatives of `lam` and `mu`
/// inside S_d, or nullopt when the supports cannot be disjoint.
std::optional<Partition> disjoint_union(const Partition& lam, const Partition& mu, std::size_t d);

/// One hook (λ_i, 1^{d-λ_i}) per part λ_i >= 2, in the order of the parts.
std::vector<Partition> hook_decomposition(const Partition& lam);

/// True iff `finer` refines `coarser`: the parts of `finer` can be grouped so
/// the group sums are exactly the parts of `coarser`. Throws on degree mismatch.
bool refines(const Partition& finer, const Partition& coarser);

/// Order of the centralizer of a permutation of cycle type λ: ∏_k k^{a_k} a_k!.
/// Throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t centralizer_order(const Partition& lam);

/// d! / centralizer_order(λ).
std::uint64_t class_size(const Partition& lam);

std::uint64_t factorial(std::size_t n);

/// Number of partitions of n by Euler's pentagonal-number recurrence.
/// Shares no code with `enumerate_partitions`.
std::uint64_t partition_count(std::size_t n);

} // namespace branchcov
