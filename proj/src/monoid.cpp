#include "branchcov/monoid.hpp"

#include <numeric>

namespace branchcov {

ComponentSignature unit_signature(std::size_t d)
{
    return ComponentSignature(Perm::identity(d), SetPartition::singletons(d), std::vector<std::uint64_t>(d, 0));
}

Perm long_cycle(std::size_t d)
{
    std::vector<std::size_t> cycle(d);
    std::iota(cycle.begin(), cycle.end(), std::size_t{1});
    return Perm::from_cycles(d, {cycle});
}

namespace {

Perm product_monodromy(const ComponentSignature& a, const ComponentSignature& b, MonodromyOrder order)
{
    return order == MonodromyOrder::left_first ? compose(b.pi(), a.pi()) : compose(a.pi(), b.pi());
}

std::vector<std::int64_t> block_genus(const ComponentSignature& a, const ComponentSignature& b,
                                      const Perm& pi, const SetPartition& joined, GenusRule rule)
{
    // per joined block: |S| + Σb + Σb' - B, and Σ(g-1) over both factors
    std::vector<std::int64_t> boundary_excess(joined.size(), 0);
    std::vector<std::int64_t> genus_sum(joined.size(), 0);
    for (std::size_t s = 0; s < joined.size(); ++s) {
        const auto& block = joined.blocks()[s];
        boundary_excess[s] = static_cast<std::int64_t>(block.size()) -
                             static_cast<std::int64_t>(cycle_count_in(pi, block));
    }
    for (const auto* factor : {&a, &b}) {
        const auto& blocks = factor->blocks().blocks();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            auto s = joined.block_index(blocks[i].front());
            boundary_excess[s] += static_cast<std::int64_t>(cycle_count_in(factor->pi(), blocks[i]));
            genus_sum[s] += static_cast<std::int64_t>(factor->genus()[i]) - 1;
        }
    }
    std::vector<std::int64_t> out(joined.size());
    for (std::size_t s = 0; s < joined.size(); ++s) {
        if (rule == GenusRule::euler) {
            if (boundary_excess[s] % 2 != 0)
                throw GenusError("non-integral genus in multiply");
            out[s] = 1 + boundary_excess[s] / 2 + genus_sum[s];
        } else {
            out[s] = 1 + static_cast<std::int64_t>(joined.blocks()[s].size()) + genus_sum[s];
        }
    }
    return out;
}

} // namespace

std::vector<std::int64_t> product_block_genus(const ComponentSignature& a, const ComponentSignature& b,
                                              GenusRule rule, MonodromyOrder order)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch(a.degree(), b.degree(), "multiply");
    auto pi = product_monodromy(a, b, order);
    auto joined = join(a.blocks(), b.blocks());
    return block_genus(a, b, pi, joined, rule);
}

ComponentSignature multiply(const ComponentSignature& a, const ComponentSignature& b, GenusRule rule,
                            MonodromyOrder order)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch(a.degree(), b.degree(), "multiply");
    auto pi = product_monodromy(a, b, order);
    auto joined = join(a.blocks(), b.blocks());
    auto signed_genus = block_genus(a, b, pi, joined, rule);
    std::vector<std::uint64_t> genus;
    for (auto g : signed_genus) {
        if (g < 0)
            throw GenusError("negative genus in multiply");
        genus.push_back(static_cast<std::uint64_t>(g));
    }
    return ComponentSignature(std::move(pi), std::move(joined), std::move(genus));
}

ComponentSignature conjugate_component(const ComponentSignature& a, const Perm& tau)
{
    if (tau.degree() != a.degree())
        throw DegreeMismatch(tau.degree(), a.degree(), "conjugate_component");
    std::vector<SetPartition::Block> blocks;
    for (const auto& block : a.blocks().blocks()) {
        SetPartition::Block moved;
        for (auto x : block)
            moved.push_back(tau(x));
        blocks.push_back(std::move(moved));
    }
    SetPartition F(a.degree(), blocks);
    std::vector<std::uint64_t> genus(F.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        genus[F.block_index(blocks[i].front())] = a.genus()[i];
    return ComponentSignature(conjugate(a.pi(), tau), std::move(F), std::move(genus));
}

bool commutation_check(const ComponentSignature& a, const ComponentSignature& b)
{
    return multiply(a, b) == multiply(b, conjugate_component(a, b.pi()));
}

ComponentSignature stabilize(const ComponentSignature& a, std::size_t new_degree)
{
    if (new_degree < a.degree())
        throw std::invalid_argument("stabilize: target degree below current degree");
    auto pi = Perm::from_cycles(new_degree, a.pi().cycles());
    auto blocks = a.blocks().blocks();
    auto genus = a.genus();
    for (std::size_t x = a.degree() + 1; x <= new_degree; ++x) {
        blocks.push_back({x});
        genus.push_back(0);
    }
    // appended singletons have larger minima, so block order is unchanged
    return ComponentSignature(std::move(pi), SetPartition(new_degree, std::move(blocks)), std::move(genus));
}

bool is_good(const ComponentSignature& a)
{
    if (cycle_count(a.pi()) != 1)
        return false;
    auto g = static_cast<std::int64_t>(a.genus().front());
    return static_cast<std::int64_t>(a.degree()) > 2 * g - 1;
}

namespace {

/// Disjoint union of disks with boundary monodromy pi: one block per cycle, genus 0.
ComponentSignature disk_cover(const Perm& pi)
{
    auto blocks = pi.cycles(true);
    auto count = blocks.size();
    return ComponentSignature(pi, SetPartition(pi.degree(), std::move(blocks)), std::vector<std::uint64_t>(count, 0));
}

} // namespace

GoodWitness make_good(const ComponentSignature& s)
{
    const auto d = s.degree();
    if (is_good(s))
        return {unit_signature(d), std::nullopt, s};
    auto v = disk_cover(compose(long_cycle(d), inverse(s.pi())));
    auto sv = multiply(s, v);
    auto g = sv.genus().front();
    if (is_good(sv))
        return {v, std::nullopt, sv};
    const auto big = static_cast<std::size_t>(2 * g);
    std::vector<std::size_t> tail;
    for (std::size_t x = d; x <= big; ++x)
        tail.push_back(x);
    auto w = disk_cover(Perm::from_cycles(big, {tail}));
    auto result = multiply(stabilize(sv, big), w);
    return {v, w, result};
}

std::pair<ComponentSignature, ComponentSignature> ore_witness_1(const ComponentSignature& s,
                                                                const ComponentSignature& t)
{
    if (s.degree() != t.degree())
        throw DegreeMismatch(s.degree(), t.degree(), "ore_witness_1");
    return {t, conjugate_component(s, t.pi())};
}

ComponentSignature ore_witness_2(const ComponentSignature& r, const ComponentSignature& s,
                                 const ComponentSignature& t)
{
    if (multiply(r, s) != multiply(r, t))
        throw PreconditionError("ore_witness_2: rs != rt");
    const auto d = s.degree();
    return ComponentSignature(long_cycle(d), SetPartition::single_block(d), {0});
}

} // namespace branchcov
