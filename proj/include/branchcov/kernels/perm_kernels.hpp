#pragma once

// Batch kernels for the brute-force factorization counter.
//
// A permutation of degree <= 16 is packed into 16 bytes, padded with fixed
// points. Composition is then a byte shuffle (pshufb / vqtbl1q), and cycle
// type is tested through the fixed-point profile
//     profile[k-1] = #fix(p^k),  k = 1..16,
// which determines the cycle type of a permutation of S_16 by Moebius
// inversion of  #fix(p^k) = sum_{j | k} j * a_j.
//
// Every ISA variant computes the same function as the scalar reference; the
// active variant is chosen once at runtime (override: BRANCHCOV_ISA).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace branchcov::kernels {

inline constexpr std::size_t packed_degree = 16;

struct alignas(16) PackedPerm {
    std::array<std::uint8_t, packed_degree> bytes;
    bool operator==(const PackedPerm&) const = default;
};

using FixProfile = std::array<std::uint8_t, packed_degree>;

enum class Isa { scalar, ssse3, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Images are 0-based; degree must be <= 16.
PackedPerm pack(std::span<const std::uint8_t> images);

/// ISAs usable on this machine; always contains Isa::scalar.
std::vector<Isa> available_isas();

/// Best available ISA, unless BRANCHCOV_ISA names another available one.
Isa active_isa();

FixProfile fix_profile(const PackedPerm& p);

/// Number of i with fix_profile(left ∘ right[i]) == target, where
/// (left ∘ right[i])(x) = left(right[i](x)).
std::uint64_t count_profile_matches(const PackedPerm& left, std::span<const PackedPerm> right,
                                    const FixProfile& target, Isa isa);

inline std::uint64_t count_profile_matches(const PackedPerm& left, std::span<const PackedPerm> right,
                                           const FixProfile& target)
{
    return count_profile_matches(left, right, target, active_isa());
}

namespace detail {
std::uint64_t count_profile_matches_scalar(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&);
std::uint64_t count_profile_matches_ssse3(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&);
std::uint64_t count_profile_matches_avx2(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&);
std::uint64_t count_profile_matches_neon(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&);
bool cpu_has_ssse3();
bool cpu_has_avx2();
bool cpu_has_neon();
} // namespace detail

} // namespace branchcov::kernels
