#include "branchcov/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace branchcov {

std::vector<CellDescriptor> cell_list(std::size_t d)
{
    if (d < 1)
        throw std::invalid_argument("cell_list: d must be positive");
    std::vector<CellDescriptor> cells;
    for (auto& lam : enumerate_partitions(d)) {
        CellDescriptor cell;
        cell.dim = 2 * absolute_length(lam);
        cell.isotropy_order = centralizer_order(lam);
        cell.lam = std::move(lam);
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::uint64_t BettiTable::operator[](std::size_t k) const
{
    if (k % 2 != 0 || k / 2 >= even.size())
        return 0;
    return even[k / 2];
}

BettiTable betti(std::size_t d)
{
    if (d < 1)
        throw std::invalid_argument("betti: d must be positive");
    BettiTable table{d, std::vector<std::uint64_t>(d, 0)};
    for (const auto& lam : enumerate_partitions(d))
        ++table.even[absolute_length(lam)];
    return table;
}

std::uint64_t stable_betti(std::size_t m)
{
    return partition_count(m);
}

StabilityReport stability_check(std::size_t d)
{
    if (d < 1)
        throw std::invalid_argument("stability_check: d must be positive");
    StabilityReport report;
    report.d = d;
    report.expected_min = (d + 2) / 2;

    auto small = enumerate_partitions(d);
    auto large = enumerate_partitions(d + 1);
    std::set<Partition> image;
    report.injective = true;
    for (const auto& lam : small) {
        auto up = add_one(lam);
        if (absolute_length(up) != absolute_length(lam))
            report.injective = false;
        if (!image.insert(up).second)
            report.injective = false;
    }
    if (!report.injective)
        report.violations.push_back("add_one is not a dimension-preserving injection");

    report.complement_has_no_ones = true;
    report.min_new_length = d + 1;
    for (const auto& mu : large) {
        bool has_one = mu.multiplicity(1) > 0;
        bool in_image = image.count(mu) > 0;
        if (has_one != in_image)
            report.complement_has_no_ones = false;
        if (!in_image)
            report.min_new_length = std::min(report.min_new_length, absolute_length(mu));
    }
    if (!report.complement_has_no_ones)
        report.violations.push_back("complement of the image is not the set of partitions without parts equal to 1");
    if (report.min_new_length != report.expected_min)
        report.violations.push_back("minimal N over new cells is " + std::to_string(report.min_new_length) +
                                    ", expected " + std::to_string(report.expected_min));

    report.stable_below = 2 * report.expected_min;
    auto lower = betti(d);
    auto upper = betti(d + 1);
    report.betti_agree = true;
    for (std::size_t k = 0; k < report.stable_below; ++k)
        if (lower[k] != upper[k]) {
            report.betti_agree = false;
            report.violations.push_back("b_" + std::to_string(k) + " changes from d=" + std::to_string(d) +
                                        " to d=" + std::to_string(d + 1));
        }
    return report;
}

} // namespace branchcov
