#include "branchcov/classalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <gmpxx.h>
#include <json.hpp>

#include "branchcov/kernels/perm_kernels.hpp"
#include "branchcov/perm.hpp"

namespace branchcov {

std::size_t CharTable::index_of(const Partition& lam) const
{
    // partitions are stored in decreasing lexicographic order
    auto it = std::lower_bound(partitions.begin(), partitions.end(), lam, std::greater<>());
    if (it == partitions.end() || *it != lam)
        throw std::invalid_argument("partition " + lam.to_string() + " is not a partition of " + std::to_string(d));
    return static_cast<std::size_t>(it - partitions.begin());
}

namespace {

using Shape = std::vector<Partition::Part>;

/// χ^shape(class) by stripping rim hooks of length cls[pos], cls[pos+1], ...
class MurnaghanNakayama {
public:
    std::int64_t value(const Shape& shape, const Shape& cls, std::size_t pos)
    {
        if (pos == cls.size())
            return shape.empty() ? 1 : 0;
        Shape suffix(cls.begin() + static_cast<std::ptrdiff_t>(pos), cls.end());
        auto key = std::make_pair(shape, suffix);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const auto k = cls[pos];
        const auto n = shape.size();
        // beta numbers: shape[i] + (n - 1 - i), strictly decreasing
        std::vector<long> beta(n);
        for (std::size_t i = 0; i < n; ++i)
            beta[i] = static_cast<long>(shape[i]) + static_cast<long>(n - 1 - i);
        std::int64_t total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            long target = beta[i] - static_cast<long>(k);
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
                continue;
            int between = 0;
            for (auto b : beta)
                if (b > target && b < beta[i])
                    ++between;
            auto moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            Shape smaller;
            for (std::size_t j = 0; j < n; ++j) {
                long part = moved[j] - static_cast<long>(n - 1 - j);
                if (part > 0)
                    smaller.push_back(static_cast<Partition::Part>(part));
            }
            auto sub = value(smaller, cls, pos + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<Shape, Shape>, std::int64_t> memo_;
};

Shape to_shape(const Partition& p)
{
    return {p.parts().begin(), p.parts().end()};
}

} // namespace

CharTable char_table(std::size_t d, std::size_t max_degree)
{
    if (d < 1 || d > max_degree)
        throw std::invalid_argument("char_table: degree " + std::to_string(d) + " outside 1.." +
                                    std::to_string(max_degree));
    CharTable table;
    table.d = d;
    table.partitions = enumerate_partitions(d);
    MurnaghanNakayama mn;
    for (const auto& irrep : table.partitions) {
        std::vector<std::int64_t> row;
        for (const auto& cls : table.partitions)
            row.push_back(mn.value(to_shape(irrep), to_shape(cls), 0));
        table.values.push_back(std::move(row));
    }
    if (!check_orthogonality(table).ok())
        throw std::logic_error("character table of S_" + std::to_string(d) + " fails orthogonality");
    return table;
}

OrthogonalityReport check_orthogonality(const CharTable& table)
{
    OrthogonalityReport report{true, true, true};
    const auto n = table.partitions.size();
    const auto order = static_cast<__int128>(factorial(table.d));
    if (table.values.size() != n) {
        report = {};
        return report;
    }
    for (const auto& row : table.values)
        if (row.size() != n) {
            report = {};
            return report;
        }
    std::vector<__int128> sizes;
    for (const auto& lam : table.partitions)
        sizes.push_back(static_cast<__int128>(class_size(lam)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            __int128 sum = 0;
            for (std::size_t c = 0; c < n; ++c)
                sum += static_cast<__int128>(table.values[i][c]) * table.values[j][c] * sizes[c];
            if (sum != (i == j ? order : 0))
                report.rows = false;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            __int128 sum = 0;
            for (std::size_t i = 0; i < n; ++i)
                sum += static_cast<__int128>(table.values[i][a]) * table.values[i][b];
            auto expected = a == b ? static_cast<__int128>(centralizer_order(table.partitions[a])) : 0;
            if (sum != expected)
                report.columns = false;
        }
    const auto identity_column = n - 1; // (1^d) is last
    __int128 squares = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto dim = table.values[i][identity_column];
        if (dim <= 0)
            report.burnside = false;
        squares += static_cast<__int128>(dim) * dim;
    }
    if (squares != order)
        report.burnside = false;
    return report;
}

std::size_t FactorizationKey::degree() const
{
    auto d = mu.degree();
    if (d < 1 || nu.degree() != d || lam.degree() != d)
        throw std::invalid_argument("factorization key partitions must share a positive degree");
    return d;
}

namespace {

std::uint64_t brute_scalar(const Perm& target, const Partition& enumerated, const Partition& other)
{
    std::uint64_t count = 0;
    for_each_in_class(enumerated, [&](std::span<const Perm::Point> images) {
        auto rho = detail::perm_from_images(images);
        if (cycle_type(compose(target, rho)) == other)
            ++count;
    });
    return count;
}

} // namespace

std::uint64_t factorization_count_brute(const FactorizationKey& key, unsigned jobs)
{
    const auto d = key.degree();
    // With σ applied first, τ = π σ^{-1}; σ^{-1} runs over C_μ as σ does, and
    // type(π ρ) = type(ρ π), so both choices reduce to #{ρ in C_small : type(π ρ) = other}.
    const bool enumerate_mu = class_size(key.mu) <= class_size(key.nu);
    const auto& enumerated = enumerate_mu ? key.mu : key.nu;
    const auto& other = enumerate_mu ? key.nu : key.mu;
    const auto target = canonical_representative(key.lam);

    if (d > kernels::packed_degree)
        return brute_scalar(target, enumerated, other);

    std::vector<kernels::PackedPerm> candidates;
    candidates.reserve(class_size(enumerated));
    for_each_in_class(enumerated, [&](std::span<const Perm::Point> images) {
        candidates.push_back(kernels::pack(images));
    });
    const auto left = kernels::pack(target.images());
    const auto profile = kernels::fix_profile(kernels::pack(canonical_representative(other).images()));
    const auto isa = kernels::active_isa();

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, candidates.size() / 256))));
    if (jobs == 1)
        return kernels::count_profile_matches(left, candidates, profile, isa);

    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> workers;
    const auto chunk = (candidates.size() + jobs - 1) / jobs;
    std::span<const kernels::PackedPerm> all(candidates);
    for (unsigned j = 0; j < jobs; ++j) {
        auto begin = std::min(candidates.size(), j * chunk);
        auto end = std::min(candidates.size(), begin + chunk);
        workers.emplace_back([&, j, begin, end] {
            partial[j] = kernels::count_profile_matches(left, all.subspan(begin, end - begin), profile, isa);
        });
    }
    for (auto& w : workers)
        w.join();
    std::uint64_t total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

std::uint64_t factorization_count_char(const FactorizationKey& key, const CharTable& table)
{
    const auto d = key.degree();
    if (table.d != d)
        throw std::invalid_argument("factorization_count_char: character table has the wrong degree");
    const auto i_mu = table.index_of(key.mu);
    const auto i_nu = table.index_of(key.nu);
    const auto i_lam = table.index_of(key.lam);
    const auto i_one = table.partitions.size() - 1;
    mpq_class sum = 0;
    for (const auto& row : table.values) {
        mpz_class numerator = mpz_class(static_cast<long>(row[i_mu])) * static_cast<long>(row[i_nu]) *
                              static_cast<long>(row[i_lam]);
        sum += mpq_class(numerator, mpz_class(static_cast<long>(row[i_one])));
    }
    mpq_class count = sum * mpz_class(std::to_string(class_size(key.mu))) *
                      mpz_class(std::to_string(class_size(key.nu))) / mpz_class(std::to_string(factorial(d)));
    count.canonicalize();
    if (count.get_den() != 1 || count < 0)
        throw std::logic_error("character formula produced " + count.get_str() + " for (" + key.mu.to_string() +
                               " | " + key.nu.to_string() + " | " + key.lam.to_string() + ")");
    return std::stoull(count.get_num().get_str());
}

std::optional<std::filesystem::path> default_cache_dir()
{
    if (const char* dir = std::getenv("BRANCHCOV_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "branchcov";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "branchcov";
    return std::nullopt;
}

ClassAlgebra::ClassAlgebra(Options options) : options_(std::move(options))
{
    if (options_.use_cache && !options_.cache_dir)
        options_.cache_dir = default_cache_dir();
    if (!options_.cache_dir)
        options_.use_cache = false;
}

ClassAlgebra::~ClassAlgebra()
{
    try {
        flush();
    } catch (...) {
        // a failed cache write must not take down the caller
    }
}

std::filesystem::path ClassAlgebra::cache_file(std::size_t d) const
{
    return options_.cache_dir.value_or(".") /
           ("classalg-v" + std::to_string(schema_version) + "-d" + std::to_string(d) + ".json");
}

namespace {

std::string constant_key(const Partition& mu, const Partition& nu, const Partition& lam)
{
    return mu.to_string() + "|" + nu.to_string() + "|" + lam.to_string();
}

} // namespace

bool ClassAlgebra::load(std::size_t d, Entry& e)
{
    const auto path = cache_file(d);
    std::ifstream in(path);
    if (!in)
        return false;
    try {
        auto doc = nlohmann::json::parse(in);
        if (doc.at("schema").get<int>() != schema_version || doc.at("d").get<std::size_t>() != d)
            throw std::runtime_error("schema or degree mismatch");
        auto table = std::make_unique<CharTable>();
        table->d = d;
        table->partitions = enumerate_partitions(d);
        std::vector<std::string> names;
        for (const auto& p : table->partitions)
            names.push_back(p.to_string());
        if (doc.at("partitions").get<std::vector<std::string>>() != names)
            throw std::runtime_error("partition index mismatch");
        table->values = doc.at("characters").get<std::vector<std::vector<std::int64_t>>>();
        if (!check_orthogonality(*table).ok())
            throw std::runtime_error("orthogonality check failed");
        for (const auto& [key, value] : doc.at("structure_constants").items()) {
            auto first = key.find('|');
            auto second = key.find('|', first + 1);
            if (first == std::string::npos || second == std::string::npos)
                throw std::runtime_error("malformed structure-constant key");
            FactorizationKey k{Partition::parse(key.substr(0, first)),
                               Partition::parse(key.substr(first + 1, second - first - 1)),
                               Partition::parse(key.substr(second + 1))};
            auto stored = value.get<std::uint64_t>();
            if (factorization_count_char(k, *table) != stored)
                throw std::runtime_error("structure constant " + key + " does not re-derive");
            e.constants.emplace(std::make_tuple(k.mu, k.nu, k.lam), stored);
        }
        e.table = std::move(table);
        events_.push_back("loaded d=" + std::to_string(d) + " from " + path.string());
        return true;
    } catch (const std::exception& ex) {
        e.constants.clear();
        events_.push_back("discarded corrupt cache for d=" + std::to_string(d) + " (" + ex.what() + ")");
        return false;
    }
}

void ClassAlgebra::store(std::size_t d, const Entry& e) const
{
    nlohmann::json doc;
    doc["schema"] = schema_version;
    doc["d"] = d;
    std::vector<std::string> names;
    for (const auto& p : e.table->partitions)
        names.push_back(p.to_string());
    doc["partitions"] = names;
    doc["characters"] = e.table->values;
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& [key, value] : e.constants)
        constants[constant_key(std::get<0>(key), std::get<1>(key), std::get<2>(key))] = value;
    doc["structure_constants"] = constants;
    std::filesystem::create_directories(*options_.cache_dir);
    auto path = cache_file(d);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << doc.dump() << '\n';
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ClassAlgebra::Entry& ClassAlgebra::entry(std::size_t d)
{
    auto [it, inserted] = entries_.try_emplace(d);
    Entry& e = it->second;
    if (!e.table) {
        if (!(options_.use_cache && load(d, e))) {
            e.table = std::make_unique<CharTable>(char_table(d, options_.max_degree));
            e.dirty = options_.use_cache;
        }
    }
    return e;
}

const CharTable& ClassAlgebra::table(std::size_t d)
{
    std::lock_guard lock(mutex_);
    return *entry(d).table;
}

std::uint64_t ClassAlgebra::count(const FactorizationKey& key, CountMethod method)
{
    switch (method) {
    case CountMethod::brute:
        return factorization_count_brute(key, options_.jobs);
    case CountMethod::chars:
        return factorization_count_char(key, table(key.degree()));
    case CountMethod::both: {
        auto brute = factorization_count_brute(key, options_.jobs);
        auto chars = factorization_count_char(key, table(key.degree()));
        if (brute != chars)
            throw ContractViolation("factorization counts disagree for (" + key.mu.to_string() + " | " +
                                    key.nu.to_string() + " | " + key.lam.to_string() + "): brute " +
                                    std::to_string(brute) + ", characters " + std::to_string(chars));
        return brute;
    }
    }
    throw std::invalid_argument("unknown count method");
}

std::uint64_t ClassAlgebra::structure_constant(const Partition& mu, const Partition& nu, const Partition& lam)
{
    FactorizationKey key{mu, nu, lam};
    const auto d = key.degree();
    auto memo_key = std::make_tuple(mu, nu, lam);
    if (options_.method == CountMethod::both)
        return count(key, CountMethod::both);
    {
        std::lock_guard lock(mutex_);
        auto& e = entry(d);
        if (auto it = e.constants.find(memo_key); it != e.constants.end())
            return it->second;
    }
    auto value = count(key, options_.method);
    std::lock_guard lock(mutex_);
    auto& e = entry(d);
    e.constants.emplace(memo_key, value);
    e.dirty = e.dirty || options_.use_cache;
    return value;
}

void ClassAlgebra::flush()
{
    std::lock_guard lock(mutex_);
    if (!options_.use_cache)
        return;
    for (auto& [d, e] : entries_)
        if (e.dirty && e.table) {
            store(d, e);
            e.dirty = false;
        }
}

std::vector<std::string> ClassAlgebra::cache_events() const
{
    std::lock_guard lock(mutex_);
    return events_;
}

} // namespace branchcov
