#include "branchcov/random.hpp"

#include <numeric>
#include <optional>

namespace branchcov {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(seed ^ mix(stream));
}

std::uint64_t stream_id(std::string_view suite, std::size_t d) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : suite) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h ^ (static_cast<std::uint64_t>(d) << 1);
}

Rng make_rng(std::uint64_t seed, std::string_view suite, std::size_t d)
{
    return Rng(derive_seed(seed, stream_id(suite, d)));
}

std::size_t uniform_index(Rng& rng, std::size_t n)
{
    // rejection sampling keeps the draw exactly uniform
    const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return static_cast<std::size_t>(x % n);
}

Perm random_perm(Rng& rng, std::size_t d)
{
    std::vector<std::size_t> images(d);
    std::iota(images.begin(), images.end(), std::size_t{1});
    for (std::size_t i = d; i > 1; --i)
        std::swap(images[i - 1], images[uniform_index(rng, i)]);
    return Perm::from_one_line(images);
}

Perm random_nonidentity_perm(Rng& rng, std::size_t d)
{
    for (;;) {
        auto p = random_perm(rng, d);
        if (!p.is_identity())
            return p;
    }
}

namespace {

Perm random_cycle(Rng& rng, std::size_t d, std::size_t length)
{
    std::vector<std::size_t> points(d);
    std::iota(points.begin(), points.end(), std::size_t{1});
    for (std::size_t i = 0; i < length; ++i)
        std::swap(points[i], points[i + uniform_index(rng, d - i)]);
    points.resize(length);
    return Perm::from_cycles(d, {points});
}

} // namespace

BranchTuple random_tuple(Rng& rng, std::size_t d, std::size_t max_length)
{
    std::vector<Perm> branches;
    if (d >= 2) {
        auto length = uniform_index(rng, max_length + 1);
        for (std::size_t i = 0; i < length; ++i) {
            switch (uniform_index(rng, 3)) {
            case 0: branches.push_back(random_cycle(rng, d, 2)); break;
            case 1: branches.push_back(random_cycle(rng, d, 2 + uniform_index(rng, d - 1))); break;
            default: branches.push_back(random_nonidentity_perm(rng, d)); break;
            }
        }
    }
    return BranchTuple(d, std::move(branches));
}

ComponentSignature random_signature(Rng& rng, std::size_t d, std::uint64_t max_genus)
{
    return random_signature_with(rng, random_perm(rng, d), max_genus);
}

ComponentSignature random_signature_with(Rng& rng, const Perm& pi, std::uint64_t max_genus)
{
    const auto d = pi.degree();
    auto cycles = pi.cycles(true);
    // assign whole cycles to random labels
    std::vector<std::vector<std::size_t>> grouped(cycles.size());
    for (auto& c : cycles) {
        auto label = uniform_index(rng, cycles.size());
        grouped[label].insert(grouped[label].end(), c.begin(), c.end());
    }
    std::vector<SetPartition::Block> blocks;
    for (auto& g : grouped)
        if (!g.empty())
            blocks.push_back(std::move(g));
    SetPartition F(d, std::move(blocks));
    std::vector<std::uint64_t> genus;
    for (const auto& block : F.blocks())
        genus.push_back(block.size() == 1 ? 0 : uniform_index(rng, max_genus + 1));
    return ComponentSignature(pi, std::move(F), std::move(genus));
}

std::int64_t euler_characteristic(const ComponentSignature& sig)
{
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < sig.blocks().size(); ++i) {
        const auto& block = sig.blocks().blocks()[i];
        chi += 2 - 2 * static_cast<std::int64_t>(sig.genus()[i]) -
               static_cast<std::int64_t>(cycle_count_in(sig.pi(), block));
    }
    return chi;
}

namespace {

/// Adds `extra` to the genus of the first non-singleton block, if any.
std::optional<ComponentSignature> add_genus(const ComponentSignature& sig, std::uint64_t extra)
{
    auto genus = sig.genus();
    for (std::size_t i = 0; i < genus.size(); ++i)
        if (sig.blocks().blocks()[i].size() > 1) {
            genus[i] += extra;
            return ComponentSignature(sig.pi(), sig.blocks(), std::move(genus));
        }
    return std::nullopt;
}

} // namespace

OreTriple random_ore_triple(Rng& rng, std::size_t d, std::uint64_t max_genus)
{
    auto r_pi = d >= 2 ? random_cycle(rng, d, d) : Perm::identity(d);
    ComponentSignature r(r_pi, SetPartition::single_block(d),
                         {d >= 2 ? static_cast<std::uint64_t>(uniform_index(rng, max_genus + 1)) : 0});
    for (;;) {
        auto s = random_signature(rng, d, max_genus);
        auto t = random_signature_with(rng, s.pi(), max_genus);
        auto diff = euler_characteristic(s) - euler_characteristic(t);
        if (diff == 0)
            return {r, s, t};
        auto adjusted = diff > 0 ? add_genus(s, static_cast<std::uint64_t>(diff / 2))
                                 : add_genus(t, static_cast<std::uint64_t>(-diff / 2));
        if (!adjusted)
            continue;
        if (diff > 0)
            return {r, *adjusted, t};
        return {r, s, *adjusted};
    }
}

} // namespace branchcov
