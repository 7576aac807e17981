#include "branchcov/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "branchcov/cells.hpp"
#include "branchcov/classalg.hpp"
#include "branchcov/cover.hpp"
#include "branchcov/monoid.hpp"
#include "branchcov/random.hpp"
#include "branchcov/report.hpp"
#include "branchcov/ring.hpp"

namespace branchcov::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t brute_force_limit = 10;
constexpr std::size_t partition_limit = 12;

struct Context {
    std::string format = "json";
    std::optional<std::string> cache_dir;
    bool no_cache = false;
    std::uint64_t seed = 20240601;
    std::optional<std::size_t> trials;
    unsigned jobs = 1;
    std::optional<std::size_t> max_degree;

    // subcommand arguments
    std::optional<std::size_t> d;
    std::optional<std::size_t> max_d;
    std::string mu, nu, lam;
    std::string method = "both";
    std::string check;
    std::string a, b;
    std::string genus_rule = "euler";
    std::string order = "left-first";
    std::string tuple;
    std::string pi;
    std::optional<std::uint64_t> genus;
    bool orbifold = false;

    std::ostream* err = nullptr;
};

std::size_t require_d(const Context& ctx, const char* command)
{
    if (!ctx.d)
        throw UsageError(std::string(command) + ": --d is required");
    if (*ctx.d < 1)
        throw UsageError("--d must be positive");
    return *ctx.d;
}

/// Refuses degrees past the default limit unless --max-degree admits them;
/// when admitted, the estimated enumeration size is printed first.
void guard(const Context& ctx, std::size_t d, std::size_t default_limit, std::uint64_t estimate)
{
    auto limit = ctx.max_degree.value_or(default_limit);
    if (d <= default_limit && d <= limit)
        return;
    std::string size = "estimated enumeration size " + std::to_string(estimate);
    if (d > limit)
        throw UsageError("--d " + std::to_string(d) + " exceeds the limit " + std::to_string(limit) + " (" + size +
                         "); raise it with --max-degree");
    *ctx.err << "note: d=" << d << " is past the default limit " << default_limit << "; " << size << "\n";
}

std::uint64_t saturating_factorial(std::size_t d)
{
    try {
        return factorial(d);
    } catch (const std::overflow_error&) {
        return std::numeric_limits<std::uint64_t>::max();
    }
}

Partition parse_partition_flag(const std::string& text, const char* flag, std::size_t d)
{
    Partition p;
    try {
        p = Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (p.degree() != d)
        throw UsageError(std::string(flag) + ": \"" + text + "\" is not a partition of " + std::to_string(d));
    return p;
}

std::string join_numbers(const std::vector<unsigned>& ks)
{
    std::string out;
    for (std::size_t i = 0; i < ks.size(); ++i)
        out += (i ? "," : "") + std::to_string(ks[i]);
    return out;
}

ClassAlgebra::Options algebra_options(const Context& ctx, CountMethod method)
{
    ClassAlgebra::Options options;
    options.use_cache = !ctx.no_cache;
    if (ctx.cache_dir)
        options.cache_dir = std::filesystem::path(*ctx.cache_dir);
    options.jobs = ctx.jobs;
    options.method = method;
    options.max_degree = std::max(default_max_char_degree, ctx.max_degree.value_or(0));
    return options;
}

CountMethod parse_method(const std::string& name)
{
    if (name == "brute")
        return CountMethod::brute;
    if (name == "chars")
        return CountMethod::chars;
    if (name == "both")
        return CountMethod::both;
    throw UsageError("--method must be brute, chars or both (got \"" + name + "\")");
}

// ---------------------------------------------------------------------------

Report run_betti(const Context& ctx)
{
    auto d = require_d(ctx, "betti");
    guard(ctx, d, partition_limit, partition_count(d));
    auto table = betti(d);
    Report r;
    std::vector<std::uint64_t> all;
    for (std::size_t k = 0; k <= table.top_degree(); ++k)
        all.push_back(table[k]);
    r.json = {{"command", "betti"}, {"d", d}, {"betti", all}};
    r.csv_header.push_back("d");
    std::vector<std::string> row{std::to_string(d)};
    std::string text = "d=" + std::to_string(d) + ": {";
    for (std::size_t k = 0; k < all.size(); ++k) {
        r.csv_header.push_back("b" + std::to_string(k));
        row.push_back(std::to_string(all[k]));
        if (all[k] != 0)
            text += (text.back() == '{' ? "" : ", ") + std::to_string(k) + ":" + std::to_string(all[k]);
    }
    r.csv_rows.push_back(std::move(row));
    r.text.push_back(text + "}");
    std::uint64_t total = 0;
    for (auto b : table.even)
        total += b;
    if (total != partition_count(d))
        r.fail("total Betti number " + std::to_string(total) + " != p(" + std::to_string(d) + ")");
    return r;
}

Report run_cells(const Context& ctx)
{
    auto d = require_d(ctx, "cells");
    guard(ctx, d, partition_limit, partition_count(d));
    Report r;
    r.csv_header = {"lambda", "dim", "isotropy_order", "class_size", "orientable"};
    nlohmann::json cells = nlohmann::json::array();
    const auto order = factorial(d);
    for (const auto& cell : cell_list(d)) {
        auto size = class_size(cell.lam);
        cells.push_back({{"lam", cell.lam.to_string()},
                         {"dim", cell.dim},
                         {"isotropy_order", cell.isotropy_order},
                         {"class_size", size},
                         {"orientable", cell.orientable}});
        r.csv_rows.push_back({cell.lam.to_string(), std::to_string(cell.dim), std::to_string(cell.isotropy_order),
                              std::to_string(size), cell.orientable ? "true" : "false"});
        r.text.push_back("e_(" + cell.lam.to_string() + ")  dim " + std::to_string(cell.dim) + "  isotropy " +
                         std::to_string(cell.isotropy_order));
        if (cell.dim != 2 * absolute_length(cell.lam))
            r.fail("cell (" + cell.lam.to_string() + ") has dimension " + std::to_string(cell.dim));
        if (cell.isotropy_order * size != order)
            r.fail("cell (" + cell.lam.to_string() + "): isotropy * class size != d!");
    }
    r.json = {{"command", "cells"}, {"d", d}, {"cells", cells}};
    return r;
}

Report run_stable_table(const Context& ctx)
{
    auto max_d = ctx.max_d.value_or(ctx.d.value_or(0));
    if (max_d < 1)
        throw UsageError("stable-table: --max-d is required");
    guard(ctx, max_d, partition_limit, partition_count(max_d));
    Report r;
    const std::size_t width = 2 * (max_d - 1) + 1;
    r.csv_header.push_back("d");
    for (std::size_t k = 0; k < width; ++k)
        r.csv_header.push_back("b" + std::to_string(k));
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t d = 1; d <= max_d; ++d) {
        auto table = betti(d);
        std::vector<std::uint64_t> values;
        std::vector<std::string> row{std::to_string(d)};
        std::string text = "d=" + std::to_string(d) + ":";
        for (std::size_t k = 0; k < width; ++k) {
            values.push_back(table[k]);
            row.push_back(std::to_string(table[k]));
            if (k % 2 == 0)
                text += " " + std::to_string(table[k]);
        }
        for (std::size_t m = 0; 2 * m <= d; ++m)
            if (table[2 * m] != stable_betti(m))
                r.fail("b_" + std::to_string(2 * m) + "(d=" + std::to_string(d) + ") = " +
                       std::to_string(table[2 * m]) + " but p(" + std::to_string(m) + ") = " +
                       std::to_string(stable_betti(m)));
        rows.push_back({{"d", d}, {"betti", values}});
        r.csv_rows.push_back(std::move(row));
        r.text.push_back(text);
    }
    std::vector<std::uint64_t> stable;
    for (std::size_t m = 0; 2 * m <= max_d; ++m)
        stable.push_back(stable_betti(m));
    r.json = {{"command", "stable-table"}, {"max_d", max_d}, {"rows", rows}, {"stable", stable}};
    return r;
}

Report run_stability(const Context& ctx)
{
    std::size_t lo = 1, hi = 0;
    if (ctx.max_d) {
        hi = *ctx.max_d;
    } else {
        lo = hi = require_d(ctx, "stability");
    }
    guard(ctx, hi, partition_limit, partition_count(hi + 1));
    Report r;
    r.csv_header = {"d", "min_new_N", "expected", "stable_below", "ok"};
    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t d = lo; d <= hi; ++d) {
        auto s = stability_check(d);
        reports.push_back({{"d", d},
                           {"injective", s.injective},
                           {"complement_has_no_ones", s.complement_has_no_ones},
                           {"min_new_N", s.min_new_length},
                           {"expected_min", s.expected_min},
                           {"stable_below", s.stable_below},
                           {"betti_agree", s.betti_agree},
                           {"violations", s.violations}});
        r.csv_rows.push_back({std::to_string(d), std::to_string(s.min_new_length), std::to_string(s.expected_min),
                              std::to_string(s.stable_below), s.ok() ? "true" : "false"});
        r.text.push_back("d=" + std::to_string(d) + ": min N of new cells " + std::to_string(s.min_new_length) +
                         " (expected " + std::to_string(s.expected_min) + "), b_k stable for k < " +
                         std::to_string(s.stable_below) + (s.ok() ? "  ok" : "  FAIL"));
        if (!s.ok())
            r.fail("d=" + std::to_string(d) + ": " + s.violations.front());
    }
    r.json = {{"command", "stability"}, {"reports", reports}};
    return r;
}

Report run_chars(const Context& ctx)
{
    auto d = require_d(ctx, "chars");
    guard(ctx, d, partition_limit, partition_count(d) * partition_count(d));
    ClassAlgebra algebra(algebra_options(ctx, CountMethod::chars));
    const auto& table = algebra.table(d);
    auto ortho = check_orthogonality(table);
    Report r;
    std::vector<std::string> classes;
    for (const auto& p : table.partitions)
        classes.push_back(p.to_string());
    r.csv_header.push_back("irrep");
    r.csv_header.insert(r.csv_header.end(), classes.begin(), classes.end());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < table.partitions.size(); ++i) {
        rows.push_back({{"irrep", classes[i]}, {"values", table.values[i]}});
        std::vector<std::string> row{classes[i]};
        std::string text = "chi_(" + classes[i] + "):";
        for (auto v : table.values[i]) {
            row.push_back(std::to_string(v));
            text += " " + std::to_string(v);
        }
        r.csv_rows.push_back(std::move(row));
        r.text.push_back(text);
    }
    r.json = {{"command", "chars"},
              {"d", d},
              {"classes", classes},
              {"rows", rows},
              {"orthogonality", {{"rows", ortho.rows}, {"columns", ortho.columns}, {"burnside", ortho.burnside}}}};
    if (!ortho.ok())
        r.fail("character table of S_" + std::to_string(d) + " fails orthogonality");
    return r;
}

Report run_factor_count(const Context& ctx)
{
    auto d = require_d(ctx, "factor-count");
    auto method = parse_method(ctx.method);
    FactorizationKey key{parse_partition_flag(ctx.mu, "--mu", d), parse_partition_flag(ctx.nu, "--nu", d),
                         parse_partition_flag(ctx.lam, "--lam", d)};
    if (method != CountMethod::chars)
        guard(ctx, d, brute_force_limit, std::min(class_size(key.mu), class_size(key.nu)));
    ClassAlgebra algebra(algebra_options(ctx, method));
    Report r;
    r.json = {{"command", "factor-count"},
              {"d", d},
              {"mu", key.mu.to_string()},
              {"nu", key.nu.to_string()},
              {"lam", key.lam.to_string()}};
    r.csv_header = {"d", "mu", "nu", "lam", "method", "count"};
    std::optional<std::uint64_t> brute, chars;
    if (method != CountMethod::chars) {
        brute = algebra.count(key, CountMethod::brute);
        r.json["brute"] = *brute;
        r.csv_rows.push_back({std::to_string(d), key.mu.to_string(), key.nu.to_string(), key.lam.to_string(), "brute",
                              std::to_string(*brute)});
        r.text.push_back("brute " + std::to_string(*brute));
    }
    if (method != CountMethod::brute) {
        chars = algebra.count(key, CountMethod::chars);
        r.json["chars"] = *chars;
        r.csv_rows.push_back({std::to_string(d), key.mu.to_string(), key.nu.to_string(), key.lam.to_string(), "chars",
                              std::to_string(*chars)});
        r.text.push_back("chars " + std::to_string(*chars));
    }
    if (brute && chars) {
        r.json["match"] = *brute == *chars;
        r.text.push_back(*brute == *chars ? "match" : "MISMATCH");
        if (*brute != *chars)
            r.fail("brute " + std::to_string(*brute) + " != chars " + std::to_string(*chars) + " for (" +
                   key.mu.to_string() + " | " + key.nu.to_string() + " | " + key.lam.to_string() + ")");
    }
    return r;
}

void ring_rows(Report& r, const RingElement& x)
{
    r.csv_header = {"lambda", "coefficient"};
    for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it)
        r.csv_rows.push_back({it->first.to_string(), it->second.get_str()});
}

Report run_cup(const Context& ctx)
{
    auto d = require_d(ctx, "cup");
    auto method = parse_method(ctx.method);
    auto mu = parse_partition_flag(ctx.mu, "--mu", d);
    auto nu = parse_partition_flag(ctx.nu, "--nu", d);
    if (method != CountMethod::chars)
        guard(ctx, d, brute_force_limit, saturating_factorial(d));
    ClassAlgebra algebra(algebra_options(ctx, method));
    auto product = cup(RingElement::basis(mu), RingElement::basis(nu), algebra);
    auto shown = ctx.orbifold ? to_orbifold_basis(product) : product;
    Report r;
    r.json = shown.to_json();
    ring_rows(r, shown);
    r.text.push_back("t_{(" + mu.to_string() + ")} · t_{(" + nu.to_string() + ")} = " + shown.to_string() +
                     (ctx.orbifold ? "   [orbifold basis]" : ""));
    auto expected = static_cast<long>(2 * (absolute_length(mu) + absolute_length(nu)));
    auto got = product.homogeneous_degree();
    if (!product.is_zero() && got != expected)
        r.fail("product is not homogeneous of degree " + std::to_string(expected));
    return r;
}

Report run_ring_verify(const Context& ctx)
{
    auto d = require_d(ctx, "ring-verify");
    auto method = parse_method(ctx.method == "both" ? std::string("chars") : ctx.method);
    if (ctx.method == "both")
        method = CountMethod::both;
    if (method != CountMethod::chars)
        guard(ctx, d, brute_force_limit, saturating_factorial(d));
    ClassAlgebra algebra(algebra_options(ctx, method));
    auto poly = verify_polynomial(d, algebra, ctx.jobs);
    Report r;
    r.csv_header = {"degree", "monomials", "rank", "betti", "ok"};
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& deg : poly.degrees) {
        nlohmann::json monomials = deg.monomials;
        degrees.push_back({{"degree", 2 * deg.m},
                           {"monomials", monomials},
                           {"rank", deg.rank},
                           {"betti", deg.betti},
                           {"order_independent", deg.order_independent},
                           {"ok", deg.ok()}});
        std::string listed;
        for (const auto& ks : deg.monomials)
            listed += (listed.empty() ? "" : " ") + std::string("{") + join_numbers(ks) + "}";
        r.csv_rows.push_back({std::to_string(2 * deg.m), listed, std::to_string(deg.rank), std::to_string(deg.betti),
                              deg.ok() ? "true" : "false"});
        r.text.push_back("degree " + std::to_string(2 * deg.m) + ": " + std::to_string(deg.monomials.size()) +
                         " monomials, rank " + std::to_string(deg.rank) + ", b = " + std::to_string(deg.betti) +
                         (deg.ok() ? "  ok" : "  FAIL"));
        if (!deg.ok())
            r.fail("d=" + std::to_string(d) + " degree " + std::to_string(2 * deg.m) + ": rank " +
                   std::to_string(deg.rank) + ", monomials " + std::to_string(deg.monomials.size()) + ", betti " +
                   std::to_string(deg.betti));
    }
    std::size_t pairs = 0, failures = 0;
    auto parts = enumerate_partitions(d);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            if (2 * (absolute_length(mu) + absolute_length(nu)) > d)
                continue;
            ++pairs;
            auto lt = leading_term_check(mu, nu, d, algebra);
            if (!lt.ok()) {
                ++failures;
                r.fail("leading term of t_(" + mu.to_string() + ") t_(" + nu.to_string() + ")");
            }
        }
    r.text.push_back("leading-term checks: " + std::to_string(pairs) + " pairs, " + std::to_string(failures) +
                     " failures");
    r.json = {{"command", "ring-verify"},
              {"d", d},
              {"degrees", degrees},
              {"leading_term_pairs", pairs},
              {"leading_term_failures", failures}};
    return r;
}

ComponentSignature parse_signature_flag(const std::string& text, const char* flag)
{
    if (text.empty())
        throw UsageError(std::string(flag) + " is required");
    try {
        return ComponentSignature::from_json(nlohmann::json::parse(text));
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

Report run_monoid_mul(const Context& ctx)
{
    auto a = parse_signature_flag(ctx.a, "--a");
    auto b = parse_signature_flag(ctx.b, "--b");
    if (a.degree() != b.degree())
        throw UsageError("--a and --b have different degrees");
    GenusRule rule;
    if (ctx.genus_rule == "euler")
        rule = GenusRule::euler;
    else if (ctx.genus_rule == "no-boundary")
        rule = GenusRule::no_boundary_terms;
    else
        throw UsageError("--genus-rule must be euler or no-boundary");
    MonodromyOrder order;
    if (ctx.order == "left-first")
        order = MonodromyOrder::left_first;
    else if (ctx.order == "right-first")
        order = MonodromyOrder::right_first;
    else
        throw UsageError("--order must be left-first or right-first");

    auto oracle = order == MonodromyOrder::left_first ? component_signature(concat(realize(a), realize(b)))
                                                      : component_signature(concat(realize(b), realize(a)));
    Report r;
    r.csv_header = {"field", "value"};
    r.json = {{"command", "monoid-mul"},
              {"genus_rule", ctx.genus_rule},
              {"order", ctx.order},
              {"oracle", oracle.to_json()}};
    if (rule == GenusRule::euler) {
        auto product = multiply(a, b, rule, order);
        r.json["product"] = product.to_json();
        r.json["oracle_agrees"] = product == oracle;
        r.csv_rows.push_back({"product", product.to_string()});
        r.text.push_back("product " + product.to_string());
        if (!(product == oracle))
            r.fail("multiply gives " + product.to_string() + ", realization oracle gives " + oracle.to_string());
    } else {
        // comparison rule: reported next to the oracle, not enforced
        auto genus = product_block_genus(a, b, rule, order);
        std::vector<std::int64_t> oracle_genus(oracle.genus().begin(), oracle.genus().end());
        r.json["genus"] = genus;
        r.json["oracle_agrees"] = genus == oracle_genus;
        std::string g;
        for (auto x : genus)
            g += (g.empty() ? "" : ",") + std::to_string(x);
        r.csv_rows.push_back({"genus", g});
        r.text.push_back("genus under " + ctx.genus_rule + " rule: [" + g + "]");
    }
    r.csv_rows.push_back({"oracle", oracle.to_string()});
    r.text.push_back("oracle  " + oracle.to_string());
    return r;
}

struct SuiteCounter {
    std::string name;
    std::size_t d;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

Report run_monoid_check(const Context& ctx)
{
    const auto max_d = ctx.max_d.value_or(ctx.d.value_or(6));
    const auto trials = ctx.trials.value_or(1000);
    guard(ctx, max_d, brute_force_limit, trials * max_d);
    std::vector<std::string> checks;
    const std::vector<std::string> all{"oracle", "commutation", "associativity", "ore", "good"};
    if (ctx.check.empty() || ctx.check == "all")
        checks = all;
    else if (std::find(all.begin(), all.end(), ctx.check) != all.end())
        checks = {ctx.check};
    else
        throw UsageError("--check must be one of oracle, commutation, associativity, ore, good, all");

    Report r;
    r.csv_header = {"check", "d", "trials", "failures"};
    nlohmann::json results = nlohmann::json::array();
    for (const auto& check : checks)
        for (std::size_t d = 1; d <= max_d; ++d) {
            auto rng = make_rng(ctx.seed, "monoid-" + check, d);
            SuiteCounter counter{check, d};
            for (std::size_t i = 0; i < trials; ++i) {
                ++counter.trials;
                bool ok = true;
                std::string witness;
                if (check == "oracle") {
                    auto a = random_signature(rng, d), b = random_signature(rng, d);
                    ok = multiply(a, b) == component_signature(concat(realize(a), realize(b)));
                    witness = a.to_string() + " * " + b.to_string();
                } else if (check == "commutation") {
                    auto a = random_signature(rng, d), b = random_signature(rng, d);
                    ok = commutation_check(a, b);
                    witness = a.to_string() + " , " + b.to_string();
                } else if (check == "associativity") {
                    auto a = random_signature(rng, d), b = random_signature(rng, d), c = random_signature(rng, d);
                    ok = multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
                    witness = a.to_string() + " , " + b.to_string() + " , " + c.to_string();
                } else if (check == "ore") {
                    auto s = random_signature(rng, d), t = random_signature(rng, d);
                    auto [u, v] = ore_witness_1(s, t);
                    ok = multiply(s, u) == multiply(t, v);
                    auto triple = random_ore_triple(rng, d);
                    auto w = ore_witness_2(triple.r, triple.s, triple.t);
                    ok = ok && multiply(triple.s, w) == multiply(triple.t, w);
                    witness = s.to_string() + " , " + t.to_string() + " / " + triple.r.to_string() + " , " +
                              triple.s.to_string() + " , " + triple.t.to_string();
                } else {
                    auto s = random_signature(rng, d);
                    auto g = make_good(s);
                    auto sv = multiply(s, g.v);
                    auto rebuilt = g.w ? multiply(stabilize(sv, g.w->degree()), *g.w) : sv;
                    ok = is_good(g.result) && rebuilt == g.result;
                    witness = s.to_string();
                }
                if (!ok) {
                    ++counter.failures;
                    r.fail(check + " fails at d=" + std::to_string(d) + ": " + witness);
                }
            }
            results.push_back({{"check", check}, {"d", d}, {"trials", counter.trials}, {"failures", counter.failures}});
            r.csv_rows.push_back(
                {check, std::to_string(d), std::to_string(counter.trials), std::to_string(counter.failures)});
            r.text.push_back(check + " d=" + std::to_string(d) + " trials=" + std::to_string(counter.trials) +
                             " failures=" + std::to_string(counter.failures));
        }
    r.json = {{"command", "monoid-check"}, {"seed", ctx.seed}, {"results", results}};
    return r;
}

/// Exhaustive over tuples of length <= 3 for d <= min(max_d, 4), then random.
Report run_local_lemma(const Context& ctx)
{
    const auto max_d = ctx.max_d.value_or(7);
    const auto trials = ctx.trials.value_or(10000);
    guard(ctx, max_d, brute_force_limit, trials * max_d);
    Report r;
    r.csv_header = {"d", "mode", "tuples", "local", "failures"};
    nlohmann::json results = nlohmann::json::array();
    auto examine = [&](const BranchTuple& t, std::size_t& local) {
        std::size_t total = 0;
        for (const auto& s : t.branches())
            total += absolute_length(s);
        auto r_blocks = orbits(t.degree(), t.branches()).size();
        bool two = total == t.degree() - r_blocks;
        bool three = total == absolute_length(boundary_monodromy(t));
        if (two != three)
            return false;
        local += two;
        component_signature(t); // throws GenusError on a non-integral or negative genus
        return total >= absolute_length(boundary_monodromy(t));
    };
    for (std::size_t d = 1; d <= max_d; ++d) {
        for (bool exhaustive : {true, false}) {
            if (exhaustive && d > 4)
                continue;
            std::size_t count = 0, local = 0, failures = 0;
            auto record = [&](const BranchTuple& t) {
                ++count;
                if (!examine(t, local)) {
                    ++failures;
                    r.fail("local-cover criteria disagree on " + t.to_string());
                }
            };
            if (exhaustive) {
                std::vector<Perm> nontrivial;
                for (const auto& lam : enumerate_partitions(d))
                    if (absolute_length(lam) > 0)
                        for (auto& p : class_enumerate(lam))
                            nontrivial.push_back(std::move(p));
                std::vector<Perm> current;
                std::function<void()> walk = [&] {
                    record(BranchTuple(d, current));
                    if (current.size() == 3)
                        return;
                    for (const auto& p : nontrivial) {
                        current.push_back(p);
                        walk();
                        current.pop_back();
                    }
                };
                walk();
            } else {
                auto rng = make_rng(ctx.seed, "local-lemma", d);
                for (std::size_t i = 0; i < trials; ++i)
                    record(random_tuple(rng, d, 6));
            }
            const char* mode = exhaustive ? "exhaustive" : "random";
            results.push_back({{"d", d}, {"mode", mode}, {"tuples", count}, {"local", local}, {"failures", failures}});
            r.csv_rows.push_back({std::to_string(d), mode, std::to_string(count), std::to_string(local),
                                  std::to_string(failures)});
            r.text.push_back("d=" + std::to_string(d) + " " + mode + ": " + std::to_string(count) + " tuples, " +
                             std::to_string(local) + " local, " + std::to_string(failures) + " failures");
        }
    }
    r.json = {{"command", "cover-check"}, {"check", "lemma"}, {"seed", ctx.seed}, {"results", results}};
    return r;
}

Report run_cover_check(const Context& ctx)
{
    const auto check = ctx.check.empty() ? std::string("signature") : ctx.check;
    if (check == "lemma")
        return run_local_lemma(ctx);
    if (ctx.tuple.empty())
        throw UsageError("cover-check: --tuple is required");
    std::optional<BranchTuple> parsed;
    try {
        parsed = BranchTuple::parse(ctx.tuple);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--tuple: ") + e.what());
    }
    const auto& t = *parsed;
    Report r;
    r.csv_header = {"field", "value"};
    r.json = {{"command", "cover-check"}, {"check", check}, {"tuple", t.to_json()}};
    if (check == "signature" || check == "local") {
        auto sig = component_signature(t);
        auto local = is_local(t);
        r.json["signature"] = sig.to_json();
        r.json["local"] = local;
        r.csv_rows.push_back({"signature", sig.to_string()});
        r.csv_rows.push_back({"local", local ? "true" : "false"});
        r.text.push_back("signature " + sig.to_string());
        r.text.push_back(std::string("local ") + (local ? "yes" : "no"));
    } else if (check == "hurwitz") {
        if (ctx.pi.empty() || !ctx.genus)
            throw UsageError("cover-check --check hurwitz needs --pi and --g");
        Perm target = Perm::identity(t.degree());
        try {
            target = Perm::parse(ctx.pi, t.degree());
        } catch (const std::exception& e) {
            throw UsageError(std::string("--pi: ") + e.what());
        }
        auto result = validate_hurwitz_point(t, target, *ctx.genus);
        r.json["valid"] = result.valid;
        r.json["diagnosis"] = result.diagnosis;
        if (result.failed_condition)
            r.json["failed_condition"] = *result.failed_condition;
        r.csv_rows.push_back({"valid", result.valid ? "true" : "false"});
        r.csv_rows.push_back({"diagnosis", result.diagnosis});
        r.text.push_back(result.diagnosis);
    } else {
        throw UsageError("--check must be signature, local, hurwitz or lemma");
    }
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx;
    ctx.err = &err;
    CLI::App app{"Exact combinatorics of branched covers: cells, Betti numbers, class algebra, cohomology ring"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    app.add_option("--format", ctx.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", ctx.cache_dir, "Character-table cache directory (env BRANCHCOV_CACHE_DIR)");
    app.add_flag("--no-cache", ctx.no_cache, "Recompute everything; neither read nor write the cache");
    app.add_option("--seed", ctx.seed, "Seed for randomized suites");
    app.add_option("--trials", ctx.trials, "Trials per degree for randomized suites");
    app.add_option("--jobs", ctx.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--max-degree", ctx.max_degree, "Raise the degree guard for large enumerations");

    std::map<std::string, std::function<Report(const Context&)>> handlers;
    auto sub = [&](const char* name, const char* help, std::function<Report(const Context&)> handler) {
        handlers[name] = std::move(handler);
        return app.add_subcommand(name, help);
    };

    auto* betti_cmd = sub("betti", "Rational Betti numbers of the degree-d complex", run_betti);
    betti_cmd->add_option("--d", ctx.d, "Degree")->required();

    auto* cells_cmd = sub("cells", "Cell inventory with dimensions and isotropy orders", run_cells);
    cells_cmd->add_option("--d", ctx.d, "Degree")->required();

    auto* stable_cmd = sub("stable-table", "Betti numbers for d = 1..max-d", run_stable_table);
    stable_cmd->add_option("--max-d", ctx.max_d, "Largest degree")->required();

    auto* stability_cmd = sub("stability", "Check the stabilization range", run_stability);
    stability_cmd->add_option("--d", ctx.d, "Degree");
    stability_cmd->add_option("--max-d", ctx.max_d, "Check every degree 1..max-d");

    auto* chars_cmd = sub("chars", "Character table of S_d", run_chars);
    chars_cmd->add_option("--d", ctx.d, "Degree")->required();

    auto* factor_cmd = sub("factor-count", "Factorization count of a class representative", run_factor_count);
    factor_cmd->add_option("--d", ctx.d, "Degree")->required();
    factor_cmd->add_option("--mu", ctx.mu, "First factor cycle type")->required();
    factor_cmd->add_option("--nu", ctx.nu, "Second factor cycle type")->required();
    factor_cmd->add_option("--lam", ctx.lam, "Product cycle type")->required();
    factor_cmd->add_option("--method", ctx.method, "brute, chars or both");

    auto* cup_cmd = sub("cup", "Cup product of two cell classes", run_cup);
    cup_cmd->add_option("--d", ctx.d, "Degree")->required();
    cup_cmd->add_option("--mu", ctx.mu, "First class")->required();
    cup_cmd->add_option("--nu", ctx.nu, "Second class")->required();
    cup_cmd->add_option("--method", ctx.method, "brute, chars or both");
    cup_cmd->add_flag("--orbifold", ctx.orbifold, "Show the result in the orbifold-normalized basis");

    auto* ring_cmd = sub("ring-verify", "Polynomial-ring and leading-term checks", run_ring_verify);
    ring_cmd->add_option("--d", ctx.d, "Degree")->required();
    ring_cmd->add_option("--method", ctx.method, "brute, chars or both");

    auto* mul_cmd = sub("monoid-mul", "Multiply two component signatures", run_monoid_mul);
    mul_cmd->add_option("--a", ctx.a, "Left factor (JSON)")->required();
    mul_cmd->add_option("--b", ctx.b, "Right factor (JSON)")->required();
    mul_cmd->add_option("--genus-rule", ctx.genus_rule, "euler (default) or no-boundary");
    mul_cmd->add_option("--order", ctx.order, "left-first (default) or right-first");

    auto* mcheck_cmd = sub("monoid-check", "Randomized monoid laws", run_monoid_check);
    mcheck_cmd->add_option("--check", ctx.check, "oracle, commutation, associativity, ore, good or all");
    mcheck_cmd->add_option("--max-d", ctx.max_d, "Largest degree (default 6)");

    auto* cover_cmd = sub("cover-check", "Inspect a branch tuple or run the local-cover suite", run_cover_check);
    cover_cmd->add_option("--tuple", ctx.tuple, "Branch tuple, e.g. \"d=3; (1 2); (1 3)\"");
    cover_cmd->add_option("--check", ctx.check, "signature, local, hurwitz or lemma");
    cover_cmd->add_option("--pi", ctx.pi, "Target monodromy at infinity (hurwitz)");
    cover_cmd->add_option("--g", ctx.genus, "Target genus (hurwitz)");
    cover_cmd->add_option("--max-d", ctx.max_d, "Largest degree for --check lemma (default 7)");

    std::vector<const char*> argv{"branchcov"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    auto* chosen = app.get_subcommands().front();
    try {
        auto report = handlers.at(chosen->get_name())(ctx);
        out << emit(report, *parse_format(ctx.format));
        if (!report.passed) {
            err << "contract violation: " << report.witness.value_or("") << "\n";
            return contract_violation;
        }
        return pass;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "contract violation: " << e.what() << "\n";
        return contract_violation;
    }
}

} // namespace branchcov::cli
