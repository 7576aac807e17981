#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "branchcov/perm.hpp"
#include "branchcov/set_partition.hpp"

namespace branchcov {

/// Raised when a genus computation does not produce a nonnegative integer.
/// On valid input this never happens; it guards the bookkeeping.
class GenusError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Local monodromies (σ_1, ..., σ_k) of a branched cover of the disk, read in
/// the order the boundary loop crosses the branch points. Every entry is a
/// non-identity permutation of the common degree d.
class BranchTuple {
public:
    BranchTuple(std::size_t d, std::vector<Perm> branches);

    /// "d=3; (1 2); (1 3)". Entries may also be one-line.
    static BranchTuple parse(std::string_view text);
    static BranchTuple from_json(const nlohmann::json& j);

    std::size_t degree() const noexcept { return d_; }
    const std::vector<Perm>& branches() const noexcept { return branches_; }
    std::size_t size() const noexcept { return branches_.size(); }

    std::string to_string() const;
    nlohmann::json to_json() const;

    bool operator==(const BranchTuple&) const = default;

private:
    std::size_t d_;
    std::vector<Perm> branches_;
};

/// Tuple concatenation: the branch points of `a` followed by those of `b`.
BranchTuple concat(const BranchTuple& a, const BranchTuple& b);

/// Label (π, F, g) of a connected component of the moduli of branched covers
/// of the square relative to three quarters of its boundary: boundary
/// monodromy, sheets grouped by connected component, genus per component.
class ComponentSignature {
public:
    /// Checks that every block of F is a union of cycles of pi and that
    /// singleton blocks have genus 0. `genus[i]` belongs to `blocks.blocks()[i]`.
    ComponentSignature(Perm pi, SetPartition blocks, std::vector<std::uint64_t> genus);

    /// {"d":4,"pi":[[1,2,3,4]],"F":[[1,2,3,4]],"g":[3]}
    static ComponentSignature from_json(const nlohmann::json& j);

    std::size_t degree() const noexcept { return pi_.degree(); }
    const Perm& pi() const noexcept { return pi_; }
    const SetPartition& blocks() const noexcept { return blocks_; }
    const std::vector<std::uint64_t>& genus() const noexcept { return genus_; }

    nlohmann::json to_json() const;
    std::string to_string() const;

    bool operator==(const ComponentSignature&) const = default;

private:
    Perm pi_;
    SetPartition blocks_;
    std::vector<std::uint64_t> genus_;
};

/// σ_∂: applies σ_1 first, then σ_2, ..., then σ_k.
Perm boundary_monodromy(const BranchTuple& t);

/// Components are the orbits of the monodromy group; genus per component is
/// read off from Riemann–Hurwitz:  2 - 2g(T) - b_T = |T| - Σ_i N(σ_i|_T).
ComponentSignature component_signature(const BranchTuple& t);

/// True iff every component of the cover is a disk. Computed both as
/// ΣN(σ_i) == d - r and as ΣN(σ_i) == N(σ_∂); throws std::logic_error if the
/// two criteria ever disagree.
bool is_local(const BranchTuple& t);

/// A tuple whose component signature is `sig`. Per block: the restriction of
/// pi (if nontrivial), then g + b - 1 doubled transpositions, the first b - 1
/// of which join the b cycles of pi in that block.
BranchTuple realize(const ComponentSignature& sig);

/// The adjacent Hurwitz move at position i: (σ_i, σ_{i+1}) becomes
/// (σ_{i+1}, σ_{i+1} σ_i σ_{i+1}^{-1}) in composition notation, which keeps the
/// boundary monodromy fixed.
BranchTuple hurwitz_move(const BranchTuple& t, std::size_t i);

struct HurwitzCheck {
    bool valid = false;
    /// First failing condition (1..4), empty when valid.
    std::optional<int> failed_condition;
    std::string diagnosis;
};

/// Checks that `t` describes a degree-d branched cover of P^1 of genus
/// `target_genus` with monodromy `target_pi` at infinity:
///   (i)   boundary monodromy equals target_pi,
///   (ii)  all local monodromies are nontrivial,
///   (iii) 2g - 2 = -2d + Σ N(σ_i) + N(target_pi),
///   (iv)  the monodromy group is transitive.
HurwitzCheck validate_hurwitz_point(const BranchTuple& t, const Perm& target_pi, std::uint64_t target_genus);

/// JSON helpers shared with the CLI: a permutation as its list of nontrivial cycles.
nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(std::size_t d, const nlohmann::json& j);

} // namespace branchcov
