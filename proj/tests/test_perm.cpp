#include <doctest.h>

#include <set>

#include "branchcov/perm.hpp"
#include "branchcov/random.hpp"
#include "oracles.hpp"

using namespace branchcov;

TEST_CASE("parsing and printing")
{
    auto p = Perm::parse("(1 2 3)(4 5)", 6);
    CHECK(p.degree() == 6);
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p(6) == 6);
    CHECK(p.to_string() == "(1 2 3)(4 5)");
    CHECK(Perm::identity(3).to_string() == "()");
    CHECK(Perm::parse("2,3,1") == Perm::parse("(1 2 3)", 3));
    CHECK_THROWS(Perm::parse("(1 1)", 3));
    CHECK_THROWS(Perm::parse("(1 4)", 3));
}

TEST_CASE("composition applies the right factor first")
{
    auto p = Perm::parse("(1 2)", 3);
    auto q = Perm::parse("(2 3)", 3);
    auto pq = compose(p, q);
    CHECK(pq(2) == p(q(2)));
    CHECK(pq == Perm::parse("(1 2 3)", 3));
    CHECK_THROWS_AS(compose(p, Perm::identity(4)), DegreeMismatch);
}

TEST_CASE("group laws on random permutations")
{
    auto rng = make_rng(7, "perm-laws", 9);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_perm(rng, 9), b = random_perm(rng, 9), c = random_perm(rng, 9);
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
        CHECK(compose(a, inverse(a)).is_identity());
        CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
        CHECK(absolute_length(a) == 9 - cycle_count(a));
        CHECK(absolute_length(compose(a, b)) <= absolute_length(a) + absolute_length(b));
    }
}

TEST_CASE("cycle type agrees with an independent walk")
{
    oracle::for_each_perm(6, [](const oracle::Images& img) {
        std::vector<std::size_t> one_line;
        for (int x : img)
            one_line.push_back(static_cast<std::size_t>(x) + 1);
        auto p = Perm::from_one_line(one_line);
        auto expected = oracle::cycle_lengths(img);
        auto got = cycle_type(p);
        std::vector<int> parts(got.parts().begin(), got.parts().end());
        CHECK(parts == expected);
    });
}

TEST_CASE("class enumeration lists each class exactly once")
{
    for (std::size_t d = 1; d <= 7; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            auto members = class_enumerate(lam);
            CHECK(members.size() == class_size(lam));
            std::set<Perm> unique(members.begin(), members.end());
            CHECK(unique.size() == members.size());
            for (const auto& p : members)
                CHECK(cycle_type(p) == lam);
            CHECK(cycle_type(canonical_representative(lam)) == lam);
        }
}

TEST_CASE("orbits, restriction and block cycle counts")
{
    std::vector<Perm> gens{Perm::parse("(1 2)", 5), Perm::parse("(3 4)", 5)};
    auto o = orbits(5, gens);
    CHECK(o.to_string() == "{{1,2},{3,4},{5}}");
    auto p = Perm::parse("(1 2)(3 4 5)", 5);
    std::vector<std::size_t> block{3, 4, 5};
    CHECK(restrict_to(p, block) == Perm::parse("(1 2 3)", 3));
    CHECK(cycle_count_in(p, block) == 1);
    std::vector<std::size_t> bad{1, 3};
    CHECK_THROWS(restrict_to(p, bad));
}
