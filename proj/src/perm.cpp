#include "branchcov/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace branchcov {

DegreeMismatch::DegreeMismatch(std::size_t a, std::size_t b, const char* where)
    : std::invalid_argument(std::string(where) + ": degree mismatch (" + std::to_string(a) + " vs " +
                            std::to_string(b) + ")")
{
}

namespace {

void require_degree(std::size_t d)
{
    if (d < 1 || d > Perm::max_degree)
        throw std::invalid_argument("permutation degree must lie in 1.." + std::to_string(Perm::max_degree));
}

std::vector<std::size_t> parse_numbers(std::string_view text)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == ',' || c == '\t') {
            ++i;
            continue;
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc())
            throw std::invalid_argument("malformed permutation text: \"" + std::string(text) + "\"");
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

} // namespace

Perm Perm::identity(std::size_t d)
{
    require_degree(d);
    std::vector<Point> images(d);
    std::iota(images.begin(), images.end(), Point{0});
    return Perm(std::move(images));
}

Perm Perm::from_one_line(std::span<const std::size_t> images)
{
    require_degree(images.size());
    std::vector<Point> out(images.size());
    std::vector<bool> hit(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto v = images[i];
        if (v < 1 || v > images.size() || hit[v - 1])
            throw std::invalid_argument("one-line images do not form a bijection of {1..d}");
        hit[v - 1] = true;
        out[i] = static_cast<Point>(v - 1);
    }
    return Perm(std::move(out));
}

Perm Perm::from_cycles(std::size_t d, const std::vector<std::vector<std::size_t>>& cycles)
{
    Perm p = identity(d);
    std::vector<bool> used(d, false);
    for (const auto& cycle : cycles) {
        for (auto x : cycle) {
            if (x < 1 || x > d)
                throw std::invalid_argument("cycle point " + std::to_string(x) + " outside {1.." +
                                            std::to_string(d) + "}");
            if (used[x - 1])
                throw std::invalid_argument("cycles are not disjoint");
            used[x - 1] = true;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            p.images_[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    }
    return p;
}

Perm Perm::parse(std::string_view text, std::optional<std::size_t> d)
{
    auto first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '(') {
        if (!d)
            throw std::invalid_argument("cycle notation requires an explicit degree");
        std::vector<std::vector<std::size_t>> cycles;
        std::size_t i = first;
        while (i < text.size()) {
            if (text[i] == ' ' || text[i] == '\t') {
                ++i;
                continue;
            }
            if (text[i] != '(')
                throw std::invalid_argument("malformed cycle notation: \"" + std::string(text) + "\"");
            auto close = text.find(')', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("unbalanced parenthesis in \"" + std::string(text) + "\"");
            auto numbers = parse_numbers(text.substr(i + 1, close - i - 1));
            if (!numbers.empty())
                cycles.push_back(std::move(numbers));
            i = close + 1;
        }
        return from_cycles(*d, cycles);
    }
    auto numbers = parse_numbers(text);
    if (d && numbers.size() != *d)
        throw DegreeMismatch(numbers.size(), *d, "Perm::parse");
    return from_one_line(numbers);
}

bool Perm::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

std::vector<std::vector<std::size_t>> Perm::cycles(bool include_fixed_points) const
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> cycle;
        for (std::size_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x + 1);
        }
        if (cycle.size() > 1 || include_fixed_points)
            out.push_back(std::move(cycle));
    }
    return out;
}

std::string Perm::to_string() const
{
    auto cs = cycles();
    if (cs.empty())
        return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

Perm compose(const Perm& p, const Perm& q)
{
    if (p.degree() != q.degree())
        throw DegreeMismatch(p.degree(), q.degree(), "compose");
    std::vector<Perm::Point> images(p.degree());
    auto pi = p.images();
    auto qi = q.images();
    for (std::size_t x = 0; x < images.size(); ++x)
        images[x] = pi[qi[x]];
    return detail::perm_from_images(images);
}

Perm inverse(const Perm& p)
{
    std::vector<Perm::Point> images(p.degree());
    auto pi = p.images();
    for (std::size_t x = 0; x < images.size(); ++x)
        images[pi[x]] = static_cast<Perm::Point>(x);
    return detail::perm_from_images(images);
}

Perm conjugate(const Perm& p, const Perm& tau)
{
    return compose(tau, compose(p, inverse(tau)));
}

Partition cycle_type(const Perm& p)
{
    std::vector<Partition::Part> lengths;
    for (const auto& c : p.cycles(true))
        lengths.push_back(static_cast<Partition::Part>(c.size()));
    return Partition::from_unsorted(std::move(lengths));
}

std::size_t cycle_count(const Perm& p)
{
    auto images = p.images();
    std::vector<bool> seen(images.size(), false);
    std::size_t count = 0;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start])
            continue;
        ++count;
        for (std::size_t x = start; !seen[x]; x = images[x])
            seen[x] = true;
    }
    return count;
}

std::size_t absolute_length(const Perm& p)
{
    return p.degree() - cycle_count(p);
}

SetPartition orbits(std::size_t d, std::span<const Perm> gens)
{
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& g : gens) {
        if (g.degree() != d)
            throw DegreeMismatch(g.degree(), d, "orbits");
        auto images = g.images();
        for (std::size_t x = 0; x < d; ++x)
            parent[root(x)] = root(images[x]);
    }
    std::vector<SetPartition::Block> grouped(d);
    for (std::size_t x = 0; x < d; ++x)
        grouped[root(x)].push_back(x + 1);
    std::vector<SetPartition::Block> blocks;
    for (auto& b : grouped)
        if (!b.empty())
            blocks.push_back(std::move(b));
    return SetPartition(d, std::move(blocks));
}

Perm restrict_to(const Perm& p, std::span<const std::size_t> block)
{
    std::vector<std::size_t> sorted(block.begin(), block.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> images(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto target = p(sorted[i]);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), target);
        if (it == sorted.end() || *it != target)
            throw std::invalid_argument("restrict_to: block is not invariant under the permutation");
        images[i] = static_cast<std::size_t>(it - sorted.begin()) + 1;
    }
    return Perm::from_one_line(images);
}

std::size_t cycle_count_in(const Perm& p, std::span<const std::size_t> block)
{
    std::size_t count = 0;
    for (auto x : block) {
        // count each cycle at its minimum element
        std::size_t y = p(x);
        bool is_min = true;
        while (y != x) {
            if (y < x) {
                is_min = false;
                break;
            }
            y = p(y);
        }
        if (is_min)
            ++count;
    }
    return count;
}

Perm canonical_representative(const Partition& lam)
{
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t next = 1;
    for (auto part : lam.parts()) {
        std::vector<std::size_t> c(part);
        std::iota(c.begin(), c.end(), next);
        next += part;
        cycles.push_back(std::move(c));
    }
    return Perm::from_cycles(lam.degree(), cycles);
}

namespace detail {

Perm perm_from_images(std::span<const Perm::Point> images)
{
    std::vector<std::size_t> one_line(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        one_line[i] = std::size_t{images[i]} + 1;
    return Perm::from_one_line(one_line);
}

namespace {

struct ClassWalker {
    std::size_t d;
    std::vector<std::size_t> remaining; // remaining[k] = unused cycles of length k
    std::vector<Perm::Point> images;
    std::vector<bool> used;
    std::vector<std::size_t> cycle;
    void* ctx;
    void (*emit)(void*, std::span<const Perm::Point>);

    void next_cycle()
    {
        std::size_t start = 0;
        while (start < d && used[start])
            ++start;
        if (start == d) {
            emit(ctx, images);
            return;
        }
        for (std::size_t k = 1; k < remaining.size(); ++k) {
            if (remaining[k] == 0)
                continue;
            --remaining[k];
            used[start] = true;
            cycle.assign(1, start);
            extend(k);
            used[start] = false;
            ++remaining[k];
        }
    }

    // The cycle under construction begins at the smallest unused point; the
    // rest of it is an ordered choice of unused points.
    void extend(std::size_t length)
    {
        if (cycle.size() == length) {
            for (std::size_t i = 0; i < length; ++i)
                images[cycle[i]] = static_cast<Perm::Point>(cycle[(i + 1) % length]);
            auto saved = cycle;
            next_cycle();
            cycle = std::move(saved);
            return;
        }
        for (std::size_t x = cycle.front() + 1; x < d; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            cycle.push_back(x);
            extend(length);
            cycle.pop_back();
            used[x] = false;
        }
    }
};

} // namespace

void class_enumerate_impl(const Partition& lam, void* ctx, void (*emit)(void*, std::span<const Perm::Point>))
{
    const auto d = lam.degree();
    require_degree(d);
    ClassWalker walker{d, std::vector<std::size_t>(d + 1, 0), std::vector<Perm::Point>(d, 0),
                       std::vector<bool>(d, false), {}, ctx, emit};
    for (auto p : lam.parts())
        ++walker.remaining[p];
    walker.next_cycle();
}

} // namespace detail

std::vector<Perm> class_enumerate(const Partition& lam)
{
    std::vector<Perm> out;
    for_each_in_class(lam, [&](std::span<const Perm::Point> images) {
        out.push_back(detail::perm_from_images(images));
    });
    return out;
}

} // namespace branchcov
