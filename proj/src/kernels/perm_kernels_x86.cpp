#include "branchcov/kernels/perm_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace branchcov::kernels::detail {

namespace {

__attribute__((target("ssse3,popcnt"))) inline __m128i identity128()
{
    return _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
}

__attribute__((target("ssse3,popcnt"))) bool matches128(__m128i tau, const FixProfile& target)
{
    const __m128i id = identity128();
    __m128i power = tau;
    for (std::size_t k = 0; k < packed_degree; ++k) {
        auto mask = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(power, id)));
        if (static_cast<unsigned>(_mm_popcnt_u32(mask)) != target[k])
            return false;
        power = _mm_shuffle_epi8(tau, power);
    }
    return true;
}

} // namespace

__attribute__((target("ssse3,popcnt"))) std::uint64_t
count_profile_matches_ssse3(const PackedPerm& left, std::span<const PackedPerm> right, const FixProfile& target)
{
    const __m128i l = _mm_load_si128(reinterpret_cast<const __m128i*>(left.bytes.data()));
    std::uint64_t count = 0;
    for (const auto& r : right) {
        __m128i rv = _mm_load_si128(reinterpret_cast<const __m128i*>(r.bytes.data()));
        count += matches128(_mm_shuffle_epi8(l, rv), target);
    }
    return count;
}

// Two candidates per 256-bit register; vpshufb shuffles within 128-bit lanes,
// which is exactly one packed permutation per lane.
__attribute__((target("avx2,popcnt"))) std::uint64_t
count_profile_matches_avx2(const PackedPerm& left, std::span<const PackedPerm> right, const FixProfile& target)
{
    const __m256i l2 = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(left.bytes.data())));
    const __m256i id2 = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                         0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
    std::uint64_t count = 0;
    std::size_t i = 0;
    for (; i + 2 <= right.size(); i += 2) {
        static_assert(sizeof(PackedPerm) == 16);
        __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right[i].bytes.data()));
        const __m256i tau = _mm256_shuffle_epi8(l2, rv);
        __m256i power = tau;
        bool lo = true, hi = true;
        for (std::size_t k = 0; k < packed_degree && (lo || hi); ++k) {
            auto mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(power, id2)));
            lo = lo && static_cast<unsigned>(_mm_popcnt_u32(mask & 0xFFFFu)) == target[k];
            hi = hi && static_cast<unsigned>(_mm_popcnt_u32(mask >> 16)) == target[k];
            power = _mm256_shuffle_epi8(tau, power);
        }
        count += static_cast<std::uint64_t>(lo) + static_cast<std::uint64_t>(hi);
    }
    if (i < right.size())
        count += count_profile_matches_ssse3(left, right.subspan(i), target);
    return count;
}

bool cpu_has_ssse3()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("ssse3") && __builtin_cpu_supports("popcnt");
}

bool cpu_has_avx2()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

} // namespace branchcov::kernels::detail

#else

#include <stdexcept>

namespace branchcov::kernels::detail {

std::uint64_t count_profile_matches_ssse3(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&)
{
    throw std::logic_error("SSSE3 kernel not compiled for this target");
}

std::uint64_t count_profile_matches_avx2(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&)
{
    throw std::logic_error("AVX2 kernel not compiled for this target");
}

bool cpu_has_ssse3() { return false; }
bool cpu_has_avx2() { return false; }

} // namespace branchcov::kernels::detail

#endif
