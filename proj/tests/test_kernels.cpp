#include <doctest.h>

#include <vector>

#include "branchcov/kernels/perm_kernels.hpp"
#include "branchcov/perm.hpp"
#include "branchcov/random.hpp"

using namespace branchcov;
using namespace branchcov::kernels;

namespace {

PackedPerm packed(const Perm& p)
{
    return pack(p.images());
}

} // namespace

TEST_CASE("scalar is always available and listed first")
{
    auto isas = available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == Isa::scalar);
    CHECK(isa_name(Isa::avx2) == "avx2");
}

TEST_CASE("fixed-point profile separates cycle types up to degree 16")
{
    for (std::size_t d : {8u, 10u, 12u}) {
        auto classes = enumerate_partitions(d);
        std::vector<FixProfile> profiles;
        for (const auto& lam : classes)
            profiles.push_back(fix_profile(packed(canonical_representative(lam))));
        for (std::size_t i = 0; i < profiles.size(); ++i)
            for (std::size_t j = i + 1; j < profiles.size(); ++j)
                CHECK(profiles[i] != profiles[j]);
    }
}

TEST_CASE("every available variant matches the scalar reference")
{
    for (std::size_t d : {3u, 7u, 11u, 16u}) {
        auto rng = make_rng(11, "kernels", d);
        std::vector<Perm> right_perms;
        std::vector<PackedPerm> right;
        // odd length exercises the tail paths
        for (int i = 0; i < 301; ++i) {
            right_perms.push_back(random_perm(rng, d));
            right.push_back(packed(right_perms.back()));
        }
        for (int trial = 0; trial < 20; ++trial) {
            auto left = random_perm(rng, d);
            auto target_type = cycle_type(random_perm(rng, d));
            auto target = fix_profile(packed(canonical_representative(target_type)));
            std::uint64_t direct = 0;
            for (const auto& r : right_perms)
                direct += cycle_type(compose(left, r)) == target_type;
            for (auto isa : available_isas())
                CHECK(count_profile_matches(packed(left), right, target, isa) == direct);
        }
    }
}

TEST_CASE("empty input and unsupported variants")
{
    PackedPerm id = pack(Perm::identity(4).images());
    std::vector<PackedPerm> none;
    for (auto isa : available_isas())
        CHECK(count_profile_matches(id, none, fix_profile(id), isa) == 0);
    CHECK_THROWS(pack(Perm::identity(17).images()));
}
