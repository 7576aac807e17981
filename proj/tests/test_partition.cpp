#include <doctest.h>

#include <set>

#include "branchcov/partition.hpp"
#include "branchcov/set_partition.hpp"
#include "oracles.hpp"

using namespace branchcov;

TEST_CASE("partition parsing and canonical form")
{
    auto lam = Partition::from_unsorted({1, 4, 1});
    CHECK(lam.to_string() == "4,1,1");
    CHECK(lam.degree() == 6);
    CHECK(lam.length() == 3);
    CHECK(lam.multiplicity(1) == 2);
    CHECK(Partition::ones(3).to_string() == "1,1,1");
    CHECK(Partition::hook(3, 5).to_string() == "3,1,1");
    CHECK(Partition::parse("4,1,1") == lam);
    CHECK_THROWS(Partition::parse("1,4"));
    CHECK_THROWS(Partition::parse("3,x"));
    CHECK_THROWS(Partition::parse("0,2"));
}

TEST_CASE("enumeration matches partition counts")
{
    for (std::size_t d = 1; d <= 14; ++d) {
        auto all = enumerate_partitions(d);
        CHECK(all.size() == oracle::partitions(static_cast<int>(d)));
        CHECK(all.size() == partition_count(d));
        std::set<Partition> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(all[i - 1] > all[i]);
        for (const auto& lam : all)
            CHECK(lam.degree() == d);
    }
    for (std::size_t n = 0; n <= 60; ++n)
        CHECK(partition_count(n) == oracle::partitions(static_cast<int>(n)));
}

TEST_CASE("class sizes sum to d!")
{
    for (std::size_t d = 1; d <= 12; ++d) {
        std::uint64_t total = 0;
        for (const auto& lam : enumerate_partitions(d)) {
            CHECK(class_size(lam) * centralizer_order(lam) == factorial(d));
            total += class_size(lam);
        }
        CHECK(total == factorial(d));
    }
    CHECK(centralizer_order(Partition::parse("2,2,1")) == 8);
    CHECK(class_size(Partition::parse("2,1,1")) == 6);
}

TEST_CASE("absolute length, add_one and support")
{
    auto lam = Partition::parse("3,2,1,1");
    CHECK(absolute_length(lam) == 3);
    CHECK(support_size(lam) == 5);
    CHECK(add_one(lam).to_string() == "3,2,1,1,1");
    CHECK(absolute_length(add_one(lam)) == absolute_length(lam));
}

TEST_CASE("disjoint union respects the degree")
{
    auto a = Partition::parse("2,1,1,1");
    auto b = Partition::parse("3,1,1");
    auto u = disjoint_union(a, b, 5);
    REQUIRE(u.has_value());
    CHECK(u->to_string() == "3,2");
    CHECK(absolute_length(*u) == absolute_length(a) + absolute_length(b));
    CHECK_FALSE(disjoint_union(Partition::parse("3,1"), Partition::parse("3,1"), 4).has_value());
}

TEST_CASE("hook decomposition recovers the partition")
{
    for (std::size_t d = 1; d <= 9; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            auto hooks = hook_decomposition(lam);
            std::size_t total = 0;
            for (const auto& h : hooks) {
                CHECK(h.degree() == d);
                CHECK(h.length() >= 1);
                CHECK((h.length() == 1 || h[1] == 1));
                total += absolute_length(h);
            }
            CHECK(total == absolute_length(lam));
        }
}

TEST_CASE("refinement of integer partitions")
{
    CHECK(refines(Partition::parse("1,1,1"), Partition::parse("3")));
    CHECK(refines(Partition::parse("2,1,1"), Partition::parse("2,2")));
    CHECK_FALSE(refines(Partition::parse("2,2"), Partition::parse("3,1")));
    CHECK(refines(Partition::parse("3,2,1"), Partition::parse("3,3")));
}

TEST_CASE("set partitions are canonical and join like union-find")
{
    SetPartition a(4, {{3, 1}, {4}, {2}});
    CHECK(a.to_string() == "{{1,3},{2},{4}}");
    CHECK(a.block_index(3) == 0);
    SetPartition b(4, {{1}, {2, 4}, {3}});
    auto j = join(a, b);
    CHECK(j.size() == 2);
    CHECK(a.refines(j));
    CHECK(b.refines(j));
    CHECK_FALSE(j.refines(a));
    CHECK(join(a, SetPartition::single_block(4)) == SetPartition::single_block(4));
    CHECK(join(a, SetPartition::singletons(4)) == a);
    CHECK_THROWS(SetPartition(3, {{1, 2}}));
}

TEST_CASE("fixed absolute length counts partitions with bounded part count")
{
    for (std::size_t d = 1; d <= 14; ++d) {
        std::vector<std::uint64_t> by_length(d, 0);
        for (const auto& lam : enumerate_partitions(d))
            ++by_length[absolute_length(lam)];
        for (std::size_t m = 0; m < d; ++m)
            CHECK(by_length[m] == oracle::partitions_with_at_most_parts(static_cast<int>(m),
                                                                        static_cast<int>(d - m)));
    }
}

TEST_CASE("listed examples")
{
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK(disjoint_union(Partition::parse("2,1,1,1"), Partition::parse("2,1,1,1"), 5)->to_string() == "2,2,1");
    CHECK_FALSE(disjoint_union(Partition::parse("2,1"), Partition::parse("2,1"), 3).has_value());
    auto hooks = hook_decomposition(Partition::parse("3,2,2"));
    REQUIRE(hooks.size() == 3);
    CHECK(hooks[0].to_string() == "3,1,1,1,1");
    CHECK(hooks[1].to_string() == "2,1,1,1,1,1");
    CHECK(hook_decomposition(Partition::ones(5)).empty());
}
