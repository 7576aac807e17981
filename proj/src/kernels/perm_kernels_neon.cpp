#include "branchcov/kernels/perm_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace branchcov::kernels::detail {

std::uint64_t count_profile_matches_neon(const PackedPerm& left, std::span<const PackedPerm> right,
                                         const FixProfile& target)
{
    static constexpr std::uint8_t id_bytes[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    const uint8x16_t id = vld1q_u8(id_bytes);
    const uint8x16_t l = vld1q_u8(left.bytes.data());
    std::uint64_t count = 0;
    for (const auto& r : right) {
        const uint8x16_t tau = vqtbl1q_u8(l, vld1q_u8(r.bytes.data()));
        uint8x16_t power = tau;
        bool ok = true;
        for (std::size_t k = 0; k < packed_degree && ok; ++k) {
            ok = vaddvq_u8(vshrq_n_u8(vceqq_u8(power, id), 7)) == target[k];
            power = vqtbl1q_u8(tau, power);
        }
        count += ok;
    }
    return count;
}

bool cpu_has_neon() { return true; }

} // namespace branchcov::kernels::detail

#else

#include <stdexcept>

namespace branchcov::kernels::detail {

std::uint64_t count_profile_matches_neon(const PackedPerm&, std::span<const PackedPerm>, const FixProfile&)
{
    throw std::logic_error("NEON kernel not compiled for this target");
}

bool cpu_has_neon() { return false; }

} // namespace branchcov::kernels::detail

#endif
