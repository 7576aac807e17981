#include <doctest.h>

#include "branchcov/cells.hpp"
#include "oracles.hpp"

using namespace branchcov;

TEST_CASE("cell inventory")
{
    auto two = cell_list(2);
    REQUIRE(two.size() == 2);
    for (const auto& c : two)
        CHECK(c.isotropy_order == 2);
    auto one = cell_list(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].dim == 0);
    CHECK(one[0].isotropy_order == 1);
    for (std::size_t d = 1; d <= 10; ++d)
        for (const auto& c : cell_list(d)) {
            CHECK(c.dim == 2 * absolute_length(c.lam));
            CHECK(c.isotropy_order * class_size(c.lam) == factorial(d));
        }
}

TEST_CASE("betti numbers")
{
    auto b4 = betti(4);
    CHECK(b4[0] == 1);
    CHECK(b4[1] == 0);
    CHECK(b4[2] == 1);
    CHECK(b4[4] == 2);
    CHECK(b4[6] == 1);
    CHECK(b4[8] == 0);
    CHECK(betti(6)[6] == 3);
    CHECK(betti(12)[8] == 5);
    for (std::size_t d = 1; d <= 14; ++d) {
        auto b = betti(d);
        std::uint64_t total = 0;
        for (std::size_t k = 0; k <= b.top_degree(); k += 2)
            total += b[k];
        CHECK(total == oracle::partitions(static_cast<int>(d)));
        CHECK(b[2 * (d - 1)] == 1);
        CHECK(b[2 * d] == 0);
        for (std::size_t m = 0; 2 * m <= d; ++m)
            CHECK(b[2 * m] == oracle::partitions(static_cast<int>(m)));
    }
}

TEST_CASE("stable betti")
{
    CHECK(stable_betti(0) == 1);
    CHECK(stable_betti(4) == 5);
    for (std::size_t m = 0; m < 40; ++m)
        CHECK(stable_betti(m) == oracle::partitions(static_cast<int>(m)));
}

TEST_CASE("stability range is sharp")
{
    for (std::size_t d = 1; d <= 14; ++d) {
        auto r = stability_check(d);
        CHECK(r.ok());
        CHECK(r.injective);
        CHECK(r.complement_has_no_ones);
        CHECK(r.min_new_length == (d + 2) / 2);
        CHECK(r.expected_min == (d + 2) / 2);
        // one degree past the range must differ
        CHECK(betti(d)[2 * r.min_new_length] != betti(d + 1)[2 * r.min_new_length]);
    }
}
