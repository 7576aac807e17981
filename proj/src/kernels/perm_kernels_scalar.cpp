#include "branchcov/kernels/perm_kernels.hpp"

#include <stdexcept>

namespace branchcov::kernels {

PackedPerm pack(std::span<const std::uint8_t> images)
{
    if (images.size() > packed_degree)
        throw std::invalid_argument("pack: degree exceeds 16");
    PackedPerm out{};
    for (std::size_t x = 0; x < packed_degree; ++x)
        out.bytes[x] = x < images.size() ? images[x] : static_cast<std::uint8_t>(x);
    return out;
}

FixProfile fix_profile(const PackedPerm& p)
{
    FixProfile profile{};
    PackedPerm power = p;
    for (std::size_t k = 0; k < packed_degree; ++k) {
        std::uint8_t fixed = 0;
        for (std::size_t x = 0; x < packed_degree; ++x)
            fixed += power.bytes[x] == x;
        profile[k] = fixed;
        PackedPerm next;
        for (std::size_t x = 0; x < packed_degree; ++x)
            next.bytes[x] = p.bytes[power.bytes[x]];
        power = next;
    }
    return profile;
}

namespace detail {

std::uint64_t count_profile_matches_scalar(const PackedPerm& left, std::span<const PackedPerm> right,
                                           const FixProfile& target)
{
    std::uint64_t count = 0;
    for (const auto& r : right) {
        PackedPerm product;
        for (std::size_t x = 0; x < packed_degree; ++x)
            product.bytes[x] = left.bytes[r.bytes[x]];
        count += fix_profile(product) == target;
    }
    return count;
}

} // namespace detail

} // namespace branchcov::kernels
