#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "branchcov/partition.hpp"

namespace branchcov {

/// One orbicell e_λ of the local branched-cover complex of degree d.
struct CellDescriptor {
    Partition lam;
    std::size_t dim = 0;                 ///< 2 N(λ)
    std::uint64_t isotropy_order = 0;    ///< |μ_k^{a_k} ⋊ S_{a_k}| multiplied over k
    bool orientable = true;
};

std::vector<CellDescriptor> cell_list(std::size_t d);

/// Rational Betti numbers of the complex. Every cell is even-dimensional, so
/// the cellular differential is zero and b_{2m} counts cells with N(λ) = m.
struct BettiTable {
    std::size_t d = 0;
    std::vector<std::uint64_t> even; ///< even[m] = b_{2m}, m = 0..d-1

    /// b_k for any k >= 0 (0 for odd k and out-of-range k).
    std::uint64_t operator[](std::size_t k) const;
    std::size_t top_degree() const { return even.empty() ? 0 : 2 * (even.size() - 1); }
};

BettiTable betti(std::size_t d);

/// p(m), via the pentagonal recurrence; equals betti(d)[2m] whenever 2m <= d.
std::uint64_t stable_betti(std::size_t m);

struct StabilityReport {
    std::size_t d = 0;
    bool injective = false;            ///< add_one is injective and preserves N
    bool complement_has_no_ones = false;
    std::size_t min_new_length = 0;    ///< min N over partitions of d+1 not of the form λ+1
    std::size_t expected_min = 0;      ///< ceil((d+1)/2)
    std::size_t stable_below = 0;      ///< betti(d)[k] == betti(d+1)[k] checked for k < stable_below
    bool betti_agree = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

StabilityReport stability_check(std::size_t d);

} // namespace branchcov
