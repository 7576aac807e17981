#pragma once

// Seeded generators for the randomized property suites. A run is fully
// determined by its 64-bit seed: each (suite, degree) pair draws from its own
// std::mt19937_64 seeded with derive_seed(seed, stream).

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "branchcov/cover.hpp"

namespace branchcov {

using Rng = std::mt19937_64;

/// splitmix64 finalizer applied to seed and stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;
/// Stream id from a suite name and degree (FNV-1a of the name, mixed with d).
std::uint64_t stream_id(std::string_view suite, std::size_t d) noexcept;

Rng make_rng(std::uint64_t seed, std::string_view suite, std::size_t d);

/// Index in [0, n) without std::uniform_int_distribution, so draws are the
/// same across standard libraries.
std::size_t uniform_index(Rng& rng, std::size_t n);

Perm random_perm(Rng& rng, std::size_t d);
/// Uniform over S_d minus the identity; d >= 2.
Perm random_nonidentity_perm(Rng& rng, std::size_t d);
/// 0..max_length entries; each entry is a random transposition, a random
/// cycle, or a uniform non-identity permutation.
BranchTuple random_tuple(Rng& rng, std::size_t d, std::size_t max_length);
/// Uniform pi, cycles grouped into blocks at random, genus 0..max_genus on
/// non-singleton blocks.
ComponentSignature random_signature(Rng& rng, std::size_t d, std::uint64_t max_genus = 3);
/// Random grouping of the cycles of a fixed pi, genus as in random_signature.
ComponentSignature random_signature_with(Rng& rng, const Perm& pi, std::uint64_t max_genus = 3);

/// Euler characteristic of the covering surface: Σ_T (2 - 2 g(T) - b(T)).
std::int64_t euler_characteristic(const ComponentSignature& sig);

struct OreTriple {
    ComponentSignature r, s, t;
};

/// r connected with d-cycle monodromy; s, t share pi and Euler
/// characteristic, which forces r*s == r*t.
OreTriple random_ore_triple(Rng& rng, std::size_t d, std::uint64_t max_genus = 3);

} // namespace branchcov
