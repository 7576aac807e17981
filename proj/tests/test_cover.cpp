#include <doctest.h>

#include "branchcov/cover.hpp"
#include "branchcov/random.hpp"

using namespace branchcov;

namespace {

Perm P(const char* text, std::size_t d)
{
    return Perm::parse(text, d);
}

ComponentSignature sig(const char* pi, std::size_t d, std::vector<SetPartition::Block> blocks,
                       std::vector<std::uint64_t> g)
{
    return {P(pi, d), SetPartition(d, std::move(blocks)), std::move(g)};
}

} // namespace

TEST_CASE("boundary monodromy")
{
    CHECK(boundary_monodromy(BranchTuple(3, {})).is_identity());
    CHECK(boundary_monodromy(BranchTuple(2, {P("(1 2)", 2), P("(1 2)", 2)})).is_identity());
    CHECK(boundary_monodromy(BranchTuple(3, {P("(1 2)", 3), P("(2 3)", 3)})) == P("(1 3 2)", 3));
    CHECK(boundary_monodromy(BranchTuple(3, {P("(1 2 3)", 3), P("(1 2)", 3)})) == P("(2 3)", 3));
    CHECK_THROWS(BranchTuple(3, {Perm::identity(3)}));
}

TEST_CASE("component signatures of small covers")
{
    CHECK(component_signature(BranchTuple::parse("d=2; (1 2); (1 2)")) == sig("()", 2, {{1, 2}}, {0}));
    CHECK(component_signature(BranchTuple::parse("d=3; (1 2 3)")) == sig("(1 2 3)", 3, {{1, 2, 3}}, {0}));
    CHECK(component_signature(BranchTuple::parse("d=2; (1 2); (1 2); (1 2); (1 2)")) ==
          sig("()", 2, {{1, 2}}, {1}));
    CHECK(component_signature(BranchTuple(4, {})) == sig("()", 4, {{1}, {2}, {3}, {4}}, {0, 0, 0, 0}));
}

TEST_CASE("locality")
{
    CHECK_FALSE(is_local(BranchTuple::parse("d=2; (1 2); (1 2)")));
    CHECK(is_local(BranchTuple::parse("d=3; (1 2); (1 3)")));
    CHECK(is_local(BranchTuple::parse("d=6; (1 2 3 4 5 6)")));
}

TEST_CASE("realize produces the documented tuples")
{
    CHECK(realize(sig("(1 2)", 2, {{1, 2}}, {1})) == BranchTuple::parse("d=2; (1 2); (1 2); (1 2)"));
    CHECK(realize(sig("()", 3, {{1}, {2}, {3}}, {0, 0, 0})).size() == 0);
    CHECK(realize(sig("()", 4, {{1, 2, 3, 4}}, {0})) ==
          BranchTuple::parse("d=4; (1 2); (1 2); (2 3); (2 3); (3 4); (3 4)"));
}

TEST_CASE("realize round trip on random signatures")
{
    for (std::size_t d = 1; d <= 6; ++d) {
        auto rng = make_rng(3, "realize", d);
        for (int trial = 0; trial < 200; ++trial) {
            auto s = random_signature(rng, d, 3);
            CHECK(component_signature(realize(s)) == s);
        }
    }
}

TEST_CASE("signature validation")
{
    CHECK_THROWS(sig("(1 2)", 3, {{1}, {2, 3}}, {0, 0}));
    CHECK_THROWS(sig("()", 2, {{1}, {2}}, {1, 0}));
    CHECK_THROWS(sig("()", 2, {{1, 2}}, {0, 0}));
}

TEST_CASE("hurwitz moves preserve the signature")
{
    for (std::size_t d = 2; d <= 6; ++d) {
        auto rng = make_rng(5, "hurwitz", d);
        for (int trial = 0; trial < 200; ++trial) {
            auto t = random_tuple(rng, d, 5);
            if (t.size() < 2)
                continue;
            auto i = uniform_index(rng, t.size() - 1);
            auto moved = hurwitz_move(t, i);
            CHECK(component_signature(moved) == component_signature(t));
            CHECK(is_local(moved) == is_local(t));
        }
    }
}

TEST_CASE("hurwitz point validation")
{
    auto ok = validate_hurwitz_point(BranchTuple::parse("d=2; (1 2)"), P("(1 2)", 2), 0);
    CHECK(ok.valid);
    auto genus = validate_hurwitz_point(BranchTuple::parse("d=2; (1 2)"), P("(1 2)", 2), 1);
    CHECK_FALSE(genus.valid);
    CHECK(genus.failed_condition == 3);
    auto disconnected = validate_hurwitz_point(BranchTuple::parse("d=4; (1 2); (3 4)"), P("(1 2)(3 4)", 4), 0);
    CHECK_FALSE(disconnected.valid);
    CHECK(disconnected.failed_condition == 4);
    auto wrong_pi = validate_hurwitz_point(BranchTuple::parse("d=2; (1 2)"), Perm::identity(2), 0);
    CHECK(wrong_pi.failed_condition == 1);
}

TEST_CASE("text and json forms round trip")
{
    auto t = BranchTuple::parse("d=3; (1 2); (1 3)");
    CHECK(t.to_json().dump() == R"({"branches":[[[1,2]],[[1,3]]],"d":3})");
    CHECK(BranchTuple::from_json(t.to_json()) == t);
    CHECK(BranchTuple::parse(t.to_string()) == t);
    auto s = sig("(1 2)", 3, {{1, 2}, {3}}, {2, 0});
    CHECK(ComponentSignature::from_json(s.to_json()) == s);
    CHECK(perm_from_json(3, perm_to_json(P("(1 3 2)", 3))) == P("(1 3 2)", 3));
}
