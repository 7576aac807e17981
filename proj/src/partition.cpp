#include "branchcov/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

namespace branchcov {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        degree_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<Part> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<Part> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto field = trim(text.substr(pos, comma - pos));
        Part value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("malformed partition: \"" + std::string(text) + "\"");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::ones(std::size_t d)
{
    return Partition(std::vector<Part>(d, 1));
}

Partition Partition::hook(Part k, std::size_t d)
{
    if (k == 0 || k > d)
        throw std::invalid_argument("hook length must lie in 1..d");
    std::vector<Part> parts{k};
    parts.resize(d - k + 1, 1);
    return Partition(std::move(parts));
}

std::size_t Partition::multiplicity(Part k) const noexcept
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::vector<Partition> enumerate_partitions(std::size_t d)
{
    std::vector<Partition> out;
    std::vector<Partition::Part> current;
    std::function<void(std::size_t, Partition::Part)> rec = [&](std::size_t rest, Partition::Part cap) {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (auto k = static_cast<Partition::Part>(std::min<std::size_t>(rest, cap)); k >= 1; --k) {
            current.push_back(k);
            rec(rest - k, k);
            current.pop_back();
        }
    };
    rec(d, static_cast<Partition::Part>(d));
    return out;
}

std::size_t absolute_length(const Partition& lam)
{
    return lam.degree() - lam.length();
}

Partition add_one(const Partition& lam)
{
    std::vector<Partition::Part> parts(lam.parts().begin(), lam.parts().end());
    parts.push_back(1);
    return Partition(std::move(parts));
}

std::size_t support_size(const Partition& lam)
{
    std::size_t s = 0;
    for (auto p : lam.parts())
        if (p >= 2)
            s += p;
    return s;
}

std::optional<Partition> disjoint_union(const Partition& lam, const Partition& mu, std::size_t d)
{
    if (lam.degree() != d || mu.degree() != d)
        throw std::invalid_argument("disjoint_union: partitions must have degree d");
    if (support_size(lam) + support_size(mu) > d)
        return std::nullopt;
    std::vector<Partition::Part> parts;
    for (auto p : lam.parts())
        if (p >= 2)
            parts.push_back(p);
    for (auto p : mu.parts())
        if (p >= 2)
            parts.push_back(p);
    parts.resize(parts.size() + d - support_size(lam) - support_size(mu), 1);
    return Partition::from_unsorted(std::move(parts));
}

std::vector<Partition> hook_decomposition(const Partition& lam)
{
    std::vector<Partition> hooks;
    for (auto p : lam.parts())
        if (p >= 2)
            hooks.push_back(Partition::hook(p, lam.degree()));
    return hooks;
}

bool refines(const Partition& finer, const Partition& coarser)
{
    if (finer.degree() != coarser.degree())
        throw std::invalid_argument("refines: degree mismatch");
    if (finer.length() < coarser.length())
        return false;
    std::vector<long> room(coarser.parts().begin(), coarser.parts().end());
    auto parts = finer.parts();
    // Exact bin packing; parts are placed largest first.
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == parts.size())
            return true;
        for (std::size_t b = 0; b < room.size(); ++b) {
            if (room[b] < static_cast<long>(parts[i]))
                continue;
            bool seen = false;
            for (std::size_t c = 0; c < b; ++c)
                if (room[c] == room[b]) {
                    seen = true;
                    break;
                }
            if (seen)
                continue;
            room[b] -= parts[i];
            if (place(i + 1))
                return true;
            room[b] += parts[i];
        }
        return false;
    };
    return place(0);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw std::overflow_error("64-bit overflow in partition arithmetic");
    return a * b;
}

} // namespace

std::uint64_t factorial(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f = checked_mul(f, k);
    return f;
}

std::uint64_t centralizer_order(const Partition& lam)
{
    std::uint64_t z = 1;
    auto parts = lam.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        std::size_t a = j - i;
        for (std::size_t r = 0; r < a; ++r)
            z = checked_mul(z, parts[i]);
        z = checked_mul(z, factorial(a));
        i = j;
    }
    return z;
}

std::uint64_t class_size(const Partition& lam)
{
    return factorial(lam.degree()) / centralizer_order(lam);
}

std::uint64_t partition_count(std::size_t n)
{
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (std::int64_t k = 1;; ++k) {
            auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
            if (g1 > m)
                break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[m - g1];
            auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
            if (g2 <= m)
                total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return static_cast<std::uint64_t>(p[n]);
}

} // namespace branchcov
