#include "branchcov/kernels/perm_kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace branchcov::kernels {

std::string_view isa_name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::ssse3: return "ssse3";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out{Isa::scalar};
    if (detail::cpu_has_ssse3())
        out.push_back(Isa::ssse3);
    if (detail::cpu_has_avx2())
        out.push_back(Isa::avx2);
    if (detail::cpu_has_neon())
        out.push_back(Isa::neon);
    return out;
}

namespace {

Isa select_isa()
{
    auto isas = available_isas();
    if (const char* forced = std::getenv("BRANCHCOV_ISA")) {
        for (auto isa : isas)
            if (isa_name(isa) == forced)
                return isa;
        throw std::runtime_error(std::string("BRANCHCOV_ISA=") + forced + " is not available on this CPU");
    }
    return isas.back();
}

} // namespace

Isa active_isa()
{
    static const Isa isa = select_isa();
    return isa;
}

std::uint64_t count_profile_matches(const PackedPerm& left, std::span<const PackedPerm> right,
                                    const FixProfile& target, Isa isa)
{
    switch (isa) {
    case Isa::scalar: return detail::count_profile_matches_scalar(left, right, target);
    case Isa::ssse3: return detail::count_profile_matches_ssse3(left, right, target);
    case Isa::avx2: return detail::count_profile_matches_avx2(left, right, target);
    case Isa::neon: return detail::count_profile_matches_neon(left, right, target);
    }
    throw std::invalid_argument("unknown ISA");
}

} // namespace branchcov::kernels
