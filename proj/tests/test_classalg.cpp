#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "branchcov/classalg.hpp"
#include "branchcov/random.hpp"
#include "oracles.hpp"

using namespace branchcov;

namespace {

std::vector<int> ints(const Partition& p)
{
    return {p.parts().begin(), p.parts().end()};
}

FactorizationKey key(const char* mu, const char* nu, const char* lam)
{
    return {Partition::parse(mu), Partition::parse(nu), Partition::parse(lam)};
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("branchcov-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("character table of S_3")
{
    auto t = char_table(3);
    auto p = [](const char* s) { return Partition::parse(s); };
    CHECK(t(p("3"), p("1,1,1")) == 1);
    CHECK(t(p("3"), p("2,1")) == 1);
    CHECK(t(p("3"), p("3")) == 1);
    CHECK(t(p("2,1"), p("1,1,1")) == 2);
    CHECK(t(p("2,1"), p("2,1")) == 0);
    CHECK(t(p("2,1"), p("3")) == -1);
    CHECK(t(p("1,1,1"), p("1,1,1")) == 1);
    CHECK(t(p("1,1,1"), p("2,1")) == -1);
    CHECK(t(p("1,1,1"), p("3")) == 1);
}

TEST_CASE("orthogonality through degree 10")
{
    for (std::size_t d = 1; d <= 10; ++d)
        CHECK(check_orthogonality(char_table(d)).ok());
    auto broken = char_table(4);
    broken.values[1][2] += 1;
    CHECK_FALSE(check_orthogonality(broken).ok());
    CHECK_THROWS(char_table(13));
}

TEST_CASE("frozen factorization counts")
{
    auto t2 = char_table(2), t3 = char_table(3), t4 = char_table(4), t5 = char_table(5);
    struct Case {
        FactorizationKey k;
        std::uint64_t expected;
        const CharTable* table;
    };
    Case cases[] = {
        {key("2,1", "2,1", "3"), 3, &t3},       {key("2,1,1", "2,1,1", "2,2"), 2, &t4},
        {key("2,1,1", "2,1,1", "3,1"), 3, &t4}, {key("2", "2", "1,1"), 1, &t2},
        {key("2,2,1", "2,2,1", "3,1,1"), 3, &t5}, {key("3,1,1", "3,1,1", "5"), 5, &t5},
    };
    for (const auto& c : cases) {
        CHECK(factorization_count_brute(c.k) == c.expected);
        CHECK(factorization_count_char(c.k, *c.table) == c.expected);
        CHECK(oracle::naive_factorizations(ints(c.k.mu), ints(c.k.nu), ints(c.k.lam)) == c.expected);
    }
}

TEST_CASE("brute force matches a naive walk over S_d")
{
    for (std::size_t d = 1; d <= 5; ++d) {
        auto parts = enumerate_partitions(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts)
                for (const auto& lam : parts)
                    CHECK(factorization_count_brute({mu, nu, lam}) ==
                          oracle::naive_factorizations(ints(mu), ints(nu), ints(lam)));
    }
}

TEST_CASE("identity class, sum rule and convention independence")
{
    for (std::size_t d = 1; d <= 6; ++d) {
        auto table = char_table(d);
        auto parts = enumerate_partitions(d);
        for (const auto& nu : parts)
            for (const auto& lam : parts)
                CHECK(factorization_count_char({Partition::ones(d), nu, lam}, table) == (nu == lam ? 1u : 0u));
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                std::uint64_t total = 0;
                for (const auto& lam : parts)
                    total += factorization_count_char({mu, nu, lam}, table) * class_size(lam);
                CHECK(total == class_size(mu) * class_size(nu));
            }
    }
    for (std::size_t d = 3; d <= 4; ++d) {
        auto parts = enumerate_partitions(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts)
                for (const auto& lam : parts)
                    CHECK(oracle::naive_factorizations(ints(mu), ints(nu), ints(lam), true) ==
                          oracle::naive_factorizations(ints(mu), ints(nu), ints(lam), false));
    }
}

TEST_CASE("threaded brute force is deterministic")
{
    auto k = key("2,2,1,1,1,1", "3,1,1,1,1,1", "4,2,1,1");
    auto one = factorization_count_brute(k, 1);
    CHECK(factorization_count_brute(k, 4) == one);
    CHECK(factorization_count_char(k, char_table(8)) == one);
}

TEST_CASE("engine methods agree and violations are reported")
{
    ClassAlgebra alg;
    auto k = key("2,1,1", "2,1,1", "3,1");
    CHECK(alg.count(k, CountMethod::brute) == 3);
    CHECK(alg.count(k, CountMethod::chars) == 3);
    CHECK(alg.count(k, CountMethod::both) == 3);
    CHECK(alg.structure_constant(k.mu, k.nu, k.lam) == 3);
    CHECK_THROWS(alg.count(key("2,1", "2,1", "3,1"), CountMethod::chars));
}

TEST_CASE("cache round trip and corruption recovery")
{
    TempDir dir;
    ClassAlgebra::Options opts;
    opts.cache_dir = dir.path;
    opts.use_cache = true;
    std::filesystem::path file;
    {
        ClassAlgebra alg(opts);
        CHECK(alg.structure_constant(Partition::parse("2,1,1"), Partition::parse("2,1,1"), Partition::parse("2,2")) == 2);
        file = alg.cache_file(4);
    }
    REQUIRE(std::filesystem::exists(file));
    {
        ClassAlgebra alg(opts);
        CHECK(alg.structure_constant(Partition::parse("2,1,1"), Partition::parse("2,1,1"), Partition::parse("2,2")) == 2);
    }
    {
        std::ofstream(file) << "{ not json";
        ClassAlgebra alg(opts);
        CHECK(alg.structure_constant(Partition::parse("2,1,1"), Partition::parse("2,1,1"), Partition::parse("3,1")) == 3);
        CHECK_FALSE(alg.cache_events().empty());
    }
    {
        std::ofstream(file) << R"({"schema":1,"d":4,"partitions":["4"],"characters":[[7]],"structure_constants":{}})";
        ClassAlgebra alg(opts);
        CHECK(alg.table(4).partitions.size() == 5);
        CHECK_FALSE(alg.cache_events().empty());
    }
}
