#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "branchcov/partition.hpp"

namespace branchcov {

/// Integer character table of S_d. Rows (irreducibles) and columns (classes)
/// are both indexed by `partitions`, in `enumerate_partitions(d)` order.
struct CharTable {
    std::size_t d = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<std::int64_t>> values; ///< values[irrep][class]

    std::size_t index_of(const Partition& lam) const;
    std::int64_t operator()(const Partition& irrep, const Partition& cls) const
    {
        return values[index_of(irrep)][index_of(cls)];
    }
};

inline constexpr std::size_t default_max_char_degree = 12;

/// Murnaghan–Nakayama with memoization on (shape, remaining class parts).
/// Throws std::invalid_argument when d is 0 or exceeds `max_degree`.
CharTable char_table(std::size_t d, std::size_t max_degree = default_max_char_degree);

struct OrthogonalityReport {
    bool rows = false;      ///< Σ_λ χ_i(λ) χ_j(λ) |C_λ| = δ_ij d!
    bool columns = false;   ///< Σ_i χ_i(λ) χ_i(μ) = δ_λμ z_λ
    bool burnside = false;  ///< Σ_i χ_i(1)^2 = d!, all degrees positive
    bool ok() const { return rows && columns && burnside; }
};

OrthogonalityReport check_orthogonality(const CharTable& table);

/// Counts are of pairs (σ, τ) with cycle types (μ, ν) whose product, σ
/// applied first, equals the canonical representative of λ.
struct FactorizationKey {
    Partition mu;
    Partition nu;
    Partition lam;

    /// Throws std::invalid_argument unless all three partitions have one degree >= 1.
    std::size_t degree() const;
    auto operator<=>(const FactorizationKey&) const = default;
};

/// Enumerates the smaller of C_μ, C_ν and tests the forced cofactor. Degree
/// <= 16 goes through the packed SIMD kernels, chunked over `jobs` threads.
std::uint64_t factorization_count_brute(const FactorizationKey& key, unsigned jobs = 1);

/// (|C_μ| |C_ν| / d!) Σ_χ χ(μ) χ(ν) χ(λ) / χ(1), exactly. Throws
/// std::logic_error if the value is not a nonnegative integer.
std::uint64_t factorization_count_char(const FactorizationKey& key, const CharTable& table);

enum class CountMethod { brute, chars, both };

class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cache directory from BRANCHCOV_CACHE_DIR, else $XDG_CACHE_HOME/branchcov,
/// else $HOME/.cache/branchcov; nullopt if none of these is set.
std::optional<std::filesystem::path> default_cache_dir();

/// Class-algebra engine: character tables built once per degree, memoized
/// structure constants, and an optional on-disk cache (one versioned JSON
/// file per degree). Loaded tables are re-checked for orthogonality and
/// cached constants re-derived; anything that fails is discarded and rebuilt.
class ClassAlgebra {
public:
    struct Options {
        std::optional<std::filesystem::path> cache_dir;
        bool use_cache = false;
        std::size_t max_degree = default_max_char_degree;
        unsigned jobs = 1;
        CountMethod method = CountMethod::chars;
    };

    static constexpr int schema_version = 1;

    ClassAlgebra() : ClassAlgebra(Options{}) {}
    explicit ClassAlgebra(Options options);
    ~ClassAlgebra();

    ClassAlgebra(const ClassAlgebra&) = delete;
    ClassAlgebra& operator=(const ClassAlgebra&) = delete;

    const Options& options() const noexcept { return options_; }

    const CharTable& table(std::size_t d);

    /// Memoized count with the configured method; CountMethod::both throws
    /// ContractViolation when the two methods disagree.
    std::uint64_t structure_constant(const Partition& mu, const Partition& nu, const Partition& lam);

    std::uint64_t count(const FactorizationKey& key, CountMethod method);

    /// Writes cache files for every degree touched so far (no-op without a cache).
    void flush();

    /// Human-readable cache events ("loaded d=4", "discarded corrupt cache for d=5", ...).
    std::vector<std::string> cache_events() const;

    std::filesystem::path cache_file(std::size_t d) const;

private:
    struct Entry {
        std::unique_ptr<CharTable> table;
        std::map<std::tuple<Partition, Partition, Partition>, std::uint64_t> constants;
        bool dirty = false;
    };

    Entry& entry(std::size_t d);
    bool load(std::size_t d, Entry& e);
    void store(std::size_t d, const Entry& e) const;

    Options options_;
    mutable std::mutex mutex_;
    std::map<std::size_t, Entry> entries_;
    std::vector<std::string> events_;
};

} // namespace branchcov
