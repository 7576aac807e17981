#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "branchcov/partition.hpp"
#include "branchcov/set_partition.hpp"

namespace branchcov {

class DegreeMismatch : public std::invalid_argument {
public:
    DegreeMismatch(std::size_t a, std::size_t b, const char* where);
};

/// A permutation of {1,...,d}.
///
/// The degree is part of the value; operations on permutations of different
/// degrees throw DegreeMismatch. Points are 1-based at the interface and
/// 0-based in `images()`.
class Perm {
public:
    using Point = std::uint8_t;
    static constexpr std::size_t max_degree = 255;

    /// Identity of degree d (d >= 1).
    static Perm identity(std::size_t d);

    /// One-line notation: `images[i-1]` is the image of i.
    static Perm from_one_line(std::span<const std::size_t> images);

    /// Disjoint cycles on {1,...,d}; omitted points are fixed.
    static Perm from_cycles(std::size_t d, const std::vector<std::vector<std::size_t>>& cycles);

    /// Accepts cycle notation "(1 2)(3 4)" / "()" or one-line "2 1 4 3 5".
    /// Cycle notation needs `d`; for one-line input a given `d` must agree.
    static Perm parse(std::string_view text, std::optional<std::size_t> d = std::nullopt);

    std::size_t degree() const noexcept { return images_.size(); }

    /// Image of x, 1-based.
    std::size_t operator()(std::size_t x) const { return std::size_t{images_.at(x - 1)} + 1; }

    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    /// Cycles in 1-based points, each starting at its minimum, sorted by minimum.
    std::vector<std::vector<std::size_t>> cycles(bool include_fixed_points = false) const;

    /// Cycle notation with fixed points omitted; "()" for the identity.
    std::string to_string() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    explicit Perm(std::vector<Point> images) : images_(std::move(images)) {}
    std::vector<Point> images_;
};

/// compose(p, q)(x) = p(q(x)): q is applied first.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// tau * p * tau^{-1}, i.e. p with its points relabelled through tau.
Perm conjugate(const Perm& p, const Perm& tau);

Partition cycle_type(const Perm& p);
std::size_t cycle_count(const Perm& p);
/// N(p) = d - #cycles: the minimal number of transpositions with product p.
std::size_t absolute_length(const Perm& p);

/// Orbits on {1..d} of the group generated by `gens`.
SetPartition orbits(std::size_t d, std::span<const Perm> gens);

/// Restriction of p to a p-invariant block, renumbered 1..|block| in
/// increasing order of the block's elements.
Perm restrict_to(const Perm& p, std::span<const std::size_t> block);

/// Number of cycles of p contained in `block` (block must be p-invariant).
std::size_t cycle_count_in(const Perm& p, std::span<const std::size_t> block);

/// Cycles of lengths λ_1 >= λ_2 >= ... on consecutive points starting at 1.
Perm canonical_representative(const Partition& lam);

namespace detail {
void class_enumerate_impl(const Partition& lam, void* ctx, void (*emit)(void*, std::span<const Perm::Point>));
Perm perm_from_images(std::span<const Perm::Point> images);
} // namespace detail

/// Calls `visit(images)` once per permutation of cycle type λ, with 0-based
/// images. Enumeration order is deterministic.
template <class Visitor>
void for_each_in_class(const Partition& lam, Visitor&& visit)
{
    detail::class_enumerate_impl(lam, &visit, [](void* ctx, std::span<const Perm::Point> images) {
        (*static_cast<std::remove_reference_t<Visitor>*>(ctx))(images);
    });
}

/// Every permutation of cycle type λ exactly once (d!/z_λ of them).
std::vector<Perm> class_enumerate(const Partition& lam);

} // namespace branchcov
