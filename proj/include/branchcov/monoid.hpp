#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "branchcov/cover.hpp"

namespace branchcov {

/// Which genus rule `multiply` applies to each block S of F ∨ F'.
enum class GenusRule {
    /// Euler-characteristic gluing (the default, verified against `realize`):
    ///   g(S) = 1 + (|S| + Σ b(T) + Σ b'(T') - B(S)) / 2 + Σ (g(T) - 1) + Σ (g'(T') - 1)
    euler,
    /// The shorter form  g(S) - 1 = |S| + Σ (g(T) - 1) + Σ (g'(T') - 1),
    /// without boundary-circle terms. Kept for comparison only; it disagrees
    /// with the gluing count already on two annuli.
    no_boundary_terms,
};

/// Which factor's branch points the boundary loop crosses first.
enum class MonodromyOrder {
    left_first,  ///< pi = compose(b.pi, a.pi)  (default)
    right_first, ///< pi = compose(a.pi, b.pi)
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (id, singletons, 0): the trivial cover of degree d.
ComponentSignature unit_signature(std::size_t d);

/// Product in π0 of the stacking monoid: place the covers side by side and
/// glue. Throws DegreeMismatch, or GenusError if the selected rule yields a
/// non-integral or negative genus.
ComponentSignature multiply(const ComponentSignature& a, const ComponentSignature& b,
                            GenusRule rule = GenusRule::euler,
                            MonodromyOrder order = MonodromyOrder::left_first);

/// Signed per-block genus under `rule`, blocks in F ∨ F' order. Unlike
/// `multiply` this never throws on a bad genus.
std::vector<std::int64_t> product_block_genus(const ComponentSignature& a, const ComponentSignature& b,
                                              GenusRule rule, MonodromyOrder order = MonodromyOrder::left_first);

/// a^tau: relabel sheets through tau (pi becomes tau pi tau^{-1}).
ComponentSignature conjugate_component(const ComponentSignature& a, const Perm& tau);

/// a * b == b * a^{pi(b)}.
bool commutation_check(const ComponentSignature& a, const ComponentSignature& b);

/// Adds trivial sheets up to degree `new_degree`.
ComponentSignature stabilize(const ComponentSignature& a, std::size_t new_degree);

/// Boundary monodromy is a d-cycle and d > 2g - 1.
bool is_good(const ComponentSignature& a);

struct GoodWitness {
    ComponentSignature v;
    std::optional<ComponentSignature> w; ///< only when s*v is not yet good
    ComponentSignature result;
};

/// Cofinality witness: v makes s*v have boundary monodromy (1 2 ... d); if
/// s*v has genus g with d <= 2g - 1, w is the disk cover of degree 2g with
/// boundary monodromy (d d+1 ... 2g) and result = stabilize(s*v, 2g) * w.
/// When s is already good, v is the unit and result = s.
GoodWitness make_good(const ComponentSignature& s);

/// (u, v) = (t, s^{pi(t)}), so that s*u == t*v.
std::pair<ComponentSignature, ComponentSignature> ore_witness_1(const ComponentSignature& s,
                                                                const ComponentSignature& t);

/// Given r*s == r*t, returns the connected disk cover u with boundary
/// monodromy (1 2 ... d), for which s*u == t*u. Throws PreconditionError
/// ("rs != rt") otherwise.
ComponentSignature ore_witness_2(const ComponentSignature& r, const ComponentSignature& s,
                                 const ComponentSignature& t);

/// (1 2 ... d) as a permutation of degree d.
Perm long_cycle(std::size_t d);

} // namespace branchcov
