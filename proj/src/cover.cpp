#include "branchcov/cover.hpp"

#include <algorithm>
#include <charconv>

namespace branchcov {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

BranchTuple::BranchTuple(std::size_t d, std::vector<Perm> branches) : d_(d), branches_(std::move(branches))
{
    if (d < 1)
        throw std::invalid_argument("branch tuple degree must be positive");
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].degree() != d)
            throw DegreeMismatch(branches_[i].degree(), d, "BranchTuple");
        if (branches_[i].is_identity())
            throw std::invalid_argument("branch tuple entry " + std::to_string(i + 1) + " is the identity");
    }
}

BranchTuple BranchTuple::parse(std::string_view text)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        if (semi == std::string_view::npos)
            semi = text.size();
        fields.push_back(trim(text.substr(pos, semi - pos)));
        pos = semi + 1;
    }
    if (fields.empty() || fields.front().substr(0, 2) != "d=")
        throw std::invalid_argument("branch tuple must start with a degree header \"d=N\"");
    auto header = trim(fields.front().substr(2));
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), d);
    if (ec != std::errc() || ptr != header.data() + header.size())
        throw std::invalid_argument("malformed degree header in branch tuple");
    std::vector<Perm> branches;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].empty())
            continue;
        branches.push_back(Perm::parse(fields[i], d));
    }
    return BranchTuple(d, std::move(branches));
}

BranchTuple BranchTuple::from_json(const nlohmann::json& j)
{
    auto d = j.at("d").get<std::size_t>();
    std::vector<Perm> branches;
    for (const auto& b : j.at("branches"))
        branches.push_back(perm_from_json(d, b));
    return BranchTuple(d, std::move(branches));
}

std::string BranchTuple::to_string() const
{
    std::string out = "d=" + std::to_string(d_);
    for (const auto& b : branches_)
        out += "; " + b.to_string();
    return out;
}

nlohmann::json BranchTuple::to_json() const
{
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : branches_)
        branches.push_back(perm_to_json(b));
    return {{"d", d_}, {"branches", branches}};
}

BranchTuple concat(const BranchTuple& a, const BranchTuple& b)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch(a.degree(), b.degree(), "concat");
    auto branches = a.branches();
    branches.insert(branches.end(), b.branches().begin(), b.branches().end());
    return BranchTuple(a.degree(), std::move(branches));
}

ComponentSignature::ComponentSignature(Perm pi, SetPartition blocks, std::vector<std::uint64_t> genus)
    : pi_(std::move(pi)), blocks_(std::move(blocks)), genus_(std::move(genus))
{
    if (blocks_.degree() != pi_.degree())
        throw DegreeMismatch(blocks_.degree(), pi_.degree(), "ComponentSignature");
    if (genus_.size() != blocks_.size())
        throw std::invalid_argument("component signature needs one genus per block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto& block = blocks_.blocks()[i];
        for (auto x : block)
            if (blocks_.block_index(pi_(x)) != i)
                throw std::invalid_argument("block " + std::to_string(i + 1) + " is not a union of cycles of pi");
        if (block.size() == 1 && genus_[i] != 0)
            throw std::invalid_argument("singleton blocks must have genus 0");
    }
}

ComponentSignature ComponentSignature::from_json(const nlohmann::json& j)
{
    auto d = j.at("d").get<std::size_t>();
    auto pi = perm_from_json(d, j.at("pi"));
    auto blocks = j.at("F").get<std::vector<std::vector<std::size_t>>>();
    auto genus = j.at("g").get<std::vector<std::uint64_t>>();
    if (genus.size() != blocks.size())
        throw std::invalid_argument("component signature JSON: \"g\" must list one genus per block of \"F\"");
    // genus values follow the block order given in the document
    std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> tagged;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        tagged.emplace_back(blocks[i], genus[i]);
    SetPartition F(d, blocks);
    std::vector<std::uint64_t> ordered(F.size(), 0);
    for (auto& [block, g] : tagged) {
        if (block.empty())
            throw std::invalid_argument("component signature JSON: empty block");
        ordered[F.block_index(block.front())] = g;
    }
    return ComponentSignature(std::move(pi), std::move(F), std::move(ordered));
}

nlohmann::json ComponentSignature::to_json() const
{
    return {{"d", degree()}, {"pi", perm_to_json(pi_)}, {"F", blocks_.blocks()}, {"g", genus_}};
}

std::string ComponentSignature::to_string() const
{
    std::string g;
    for (std::size_t i = 0; i < genus_.size(); ++i)
        g += (i ? "," : "") + std::to_string(genus_[i]);
    return "(" + pi_.to_string() + ", " + blocks_.to_string() + ", g=[" + g + "])";
}

Perm boundary_monodromy(const BranchTuple& t)
{
    Perm acc = Perm::identity(t.degree());
    for (const auto& sigma : t.branches())
        acc = compose(sigma, acc);
    return acc;
}

ComponentSignature component_signature(const BranchTuple& t)
{
    const auto d = t.degree();
    auto F = orbits(d, t.branches());
    auto pi = boundary_monodromy(t);
    std::vector<std::uint64_t> genus;
    for (const auto& block : F.blocks()) {
        auto size = static_cast<std::int64_t>(block.size());
        std::int64_t total_length = 0;
        for (const auto& sigma : t.branches())
            total_length += size - static_cast<std::int64_t>(cycle_count_in(sigma, block));
        auto boundary = static_cast<std::int64_t>(cycle_count_in(pi, block));
        std::int64_t twice_genus = 2 - boundary - size + total_length;
        if (twice_genus % 2 != 0)
            throw GenusError("non-integral genus in component_signature");
        if (twice_genus < 0)
            throw GenusError("negative genus in component_signature");
        genus.push_back(static_cast<std::uint64_t>(twice_genus / 2));
    }
    return ComponentSignature(std::move(pi), std::move(F), std::move(genus));
}

bool is_local(const BranchTuple& t)
{
    std::size_t total = 0;
    for (const auto& sigma : t.branches())
        total += absolute_length(sigma);
    auto r = orbits(t.degree(), t.branches()).size();
    bool by_components = total == t.degree() - r;
    bool by_boundary = total == absolute_length(boundary_monodromy(t));
    if (by_components != by_boundary)
        throw std::logic_error("local-cover criteria disagree on " + t.to_string());
    return by_components;
}

BranchTuple realize(const ComponentSignature& sig)
{
    const auto d = sig.degree();
    const auto& pi = sig.pi();
    std::vector<Perm> branches;
    for (std::size_t i = 0; i < sig.blocks().size(); ++i) {
        const auto& block = sig.blocks().blocks()[i];
        if (block.size() == 1)
            continue;
        // pi restricted to the block, as a permutation of {1..d}
        std::vector<std::size_t> images(d);
        for (std::size_t x = 1; x <= d; ++x)
            images[x - 1] = x;
        for (auto x : block)
            images[x - 1] = pi(x);
        auto local = Perm::from_one_line(images);
        if (!local.is_identity())
            branches.push_back(local);

        std::vector<std::size_t> cycle_minima;
        for (const auto& c : local.cycles(true))
            if (std::binary_search(block.begin(), block.end(), c.front()))
                cycle_minima.push_back(c.front());
        std::sort(cycle_minima.begin(), cycle_minima.end());
        for (std::size_t c = 0; c + 1 < cycle_minima.size(); ++c) {
            auto tau = Perm::from_cycles(d, {{cycle_minima[c], cycle_minima[c + 1]}});
            branches.push_back(tau);
            branches.push_back(tau);
        }
        auto handle = Perm::from_cycles(d, {{block[0], block[1]}});
        for (std::uint64_t g = 0; g < sig.genus()[i]; ++g) {
            branches.push_back(handle);
            branches.push_back(handle);
        }
    }
    return BranchTuple(d, std::move(branches));
}

BranchTuple hurwitz_move(const BranchTuple& t, std::size_t i)
{
    if (i + 1 >= t.size())
        throw std::out_of_range("hurwitz_move: position out of range");
    auto branches = t.branches();
    const auto a = branches[i];
    const auto b = branches[i + 1];
    branches[i] = b;
    branches[i + 1] = conjugate(a, b);
    return BranchTuple(t.degree(), std::move(branches));
}

HurwitzCheck validate_hurwitz_point(const BranchTuple& t, const Perm& target_pi, std::uint64_t target_genus)
{
    if (target_pi.degree() != t.degree())
        throw DegreeMismatch(target_pi.degree(), t.degree(), "validate_hurwitz_point");
    const auto d = static_cast<std::int64_t>(t.degree());
    HurwitzCheck check;
    auto fail = [&](int condition, std::string why) {
        check.valid = false;
        check.failed_condition = condition;
        check.diagnosis = "condition (" + std::string(condition == 1   ? "i"
                                                      : condition == 2 ? "ii"
                                                      : condition == 3 ? "iii"
                                                                       : "iv") +
                          ") fails: " + std::move(why);
        return check;
    };
    auto sigma_boundary = boundary_monodromy(t);
    if (sigma_boundary != target_pi)
        return fail(1, "boundary monodromy " + sigma_boundary.to_string() + " differs from " + target_pi.to_string());
    for (const auto& sigma : t.branches())
        if (sigma.is_identity())
            return fail(2, "a branch point has trivial monodromy");
    auto orbit_count = orbits(t.degree(), t.branches()).size();
    if (orbit_count != 1)
        return fail(4, "monodromy group has " + std::to_string(orbit_count) + " orbits");
    std::int64_t total = 0;
    for (const auto& sigma : t.branches())
        total += static_cast<std::int64_t>(absolute_length(sigma));
    total += static_cast<std::int64_t>(absolute_length(target_pi));
    auto lhs = 2 * static_cast<std::int64_t>(target_genus) - 2;
    if (lhs != -2 * d + total)
        return fail(3, "2g-2 = " + std::to_string(lhs) + " but -2d + sum N = " + std::to_string(-2 * d + total));
    check.valid = true;
    check.diagnosis = "valid";
    return check;
}

nlohmann::json perm_to_json(const Perm& p)
{
    return p.cycles();
}

Perm perm_from_json(std::size_t d, const nlohmann::json& j)
{
    return Perm::from_cycles(d, j.get<std::vector<std::vector<std::size_t>>>());
}

} // namespace branchcov
