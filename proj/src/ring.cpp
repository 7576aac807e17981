#include "branchcov/ring.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace branchcov {

namespace {

mpz_class to_mpz(std::uint64_t v)
{
    return mpz_class(std::to_string(v));
}

const std::vector<Partition>& partitions_with_length(std::size_t d, std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<Partition>> by_length;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(d, n);
    auto it = by_length.find(key);
    if (it == by_length.end()) {
        std::vector<Partition> selected;
        for (auto& lam : enumerate_partitions(d))
            if (absolute_length(lam) == n)
                selected.push_back(std::move(lam));
        it = by_length.emplace(key, std::move(selected)).first;
    }
    return it->second;
}

} // namespace

RingElement RingElement::basis(const Partition& lam)
{
    RingElement x(lam.degree());
    x.add_term(lam, 1);
    return x;
}

RingElement RingElement::from_json(const nlohmann::json& j)
{
    RingElement x(j.at("d").get<std::size_t>());
    for (const auto& term : j.at("coeffs")) {
        auto lam = Partition::parse(term.at("lam").get<std::string>());
        mpq_class c(term.at("c").get<std::string>());
        c.canonicalize();
        x.add_term(lam, c);
    }
    return x;
}

mpq_class RingElement::coeff(const Partition& lam) const
{
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void RingElement::add_term(const Partition& lam, const mpq_class& c)
{
    if (lam.degree() != d_)
        throw std::invalid_argument("ring element term " + lam.to_string() + " is not a partition of " +
                                    std::to_string(d_));
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    if (other.d_ != d_)
        throw std::invalid_argument("ring elements of different degree");
    for (const auto& [lam, c] : other.coeffs_)
        add_term(lam, c);
    return *this;
}

RingElement RingElement::operator*(const mpq_class& scalar) const
{
    RingElement out(d_);
    for (const auto& [lam, c] : coeffs_)
        out.add_term(lam, c * scalar);
    return out;
}

long RingElement::homogeneous_degree() const
{
    long degree = -2;
    for (const auto& [lam, c] : coeffs_) {
        auto k = static_cast<long>(2 * absolute_length(lam));
        if (degree == -2)
            degree = k;
        else if (degree != k)
            return -1;
    }
    return degree == -2 ? 0 : degree;
}

nlohmann::json RingElement::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        terms.push_back({{"lam", it->first.to_string()}, {"c", it->second.get_str()}});
    return {{"d", d_}, {"coeffs", terms}};
}

std::string RingElement::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        mpq_class c = it->second;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        mpq_class magnitude = abs(c);
        if (magnitude != 1)
            out += magnitude.get_str() + "·";
        out += "t_{(" + it->first.to_string() + ")}";
    }
    return out;
}

RingElement cup(const RingElement& x, const RingElement& y, ClassAlgebra& algebra)
{
    if (x.degree() != y.degree())
        throw std::invalid_argument("cup: degree mismatch");
    const auto d = x.degree();
    RingElement out(d);
    for (const auto& [mu, a] : x.coeffs())
        for (const auto& [nu, b] : y.coeffs()) {
            auto n = absolute_length(mu) + absolute_length(nu);
            if (n >= d)
                continue;
            for (const auto& lam : partitions_with_length(d, n)) {
                auto c = algebra.structure_constant(mu, nu, lam);
                if (c != 0)
                    out.add_term(lam, a * b * to_mpz(c));
            }
        }
    return out;
}

LeadingTermReport leading_term_check(const Partition& mu, const Partition& nu, std::size_t d, ClassAlgebra& algebra)
{
    auto joined = disjoint_union(mu, nu, d);
    if (!joined)
        throw NotRepresentable("not representable: (" + mu.to_string() + ") and (" + nu.to_string() +
                               ") have no disjoint-support representatives in S_" + std::to_string(d));
    LeadingTermReport report{mu, nu, *joined, 0, false, {}};
    auto product = cup(RingElement::basis(mu), RingElement::basis(nu), algebra);
    report.leading_coefficient = product.coeff(*joined);
    report.leading_nonzero = report.leading_coefficient != 0;
    const auto ones = joined->multiplicity(1);
    for (const auto& [lam, c] : product.coeffs())
        if (lam != *joined && lam.multiplicity(1) <= ones)
            report.offenders.push_back(lam);
    return report;
}

RingElement monomial_expand(std::vector<unsigned> ks, std::size_t d, ClassAlgebra& algebra)
{
    for (auto k : ks)
        if (k < 2 || k > d)
            throw std::invalid_argument("monomial_expand: generator index " + std::to_string(k) +
                                        " outside 2.." + std::to_string(d));
    std::sort(ks.begin(), ks.end(), std::greater<>());
    auto acc = RingElement::unit(d);
    for (auto k : ks)
        acc = cup(acc, RingElement::basis(Partition::hook(k, d)), algebra);
    return acc;
}

std::size_t rank(const std::vector<RingElement>& elements)
{
    std::vector<Partition> columns;
    for (const auto& x : elements)
        for (const auto& [lam, c] : x.coeffs())
            columns.push_back(lam);
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

    std::vector<std::vector<mpq_class>> rows;
    for (const auto& x : elements) {
        std::vector<mpq_class> row(columns.size(), 0);
        for (std::size_t j = 0; j < columns.size(); ++j)
            row[j] = x.coeff(columns[j]);
        rows.push_back(std::move(row));
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns.size() && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            mpq_class factor = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < columns.size(); ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

bool PolynomialReport::ok() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& r) { return r.ok(); });
}

namespace {

PolynomialDegreeReport verify_degree(std::size_t d, std::size_t m, ClassAlgebra& algebra)
{
    PolynomialDegreeReport report;
    report.m = m;
    report.betti = partitions_with_length(d, m).size();
    std::vector<RingElement> expansions;
    for (const auto& shape : enumerate_partitions(m)) {
        std::vector<unsigned> ks;
        for (auto part : shape.parts())
            ks.push_back(part + 1);
        auto descending = monomial_expand(ks, d, algebra);
        auto ascending = RingElement::unit(d);
        for (auto it = ks.rbegin(); it != ks.rend(); ++it)
            ascending = cup(ascending, RingElement::basis(Partition::hook(*it, d)), algebra);
        if (!(ascending == descending))
            report.order_independent = false;
        report.monomials.push_back(std::move(ks));
        expansions.push_back(std::move(descending));
    }
    report.rank = rank(expansions);
    return report;
}

} // namespace

PolynomialReport verify_polynomial(std::size_t d, ClassAlgebra& algebra, unsigned jobs)
{
    if (d < 1)
        throw std::invalid_argument("verify_polynomial: d must be positive");
    PolynomialReport report;
    report.d = d;
    const auto top = d / 2;
    if (jobs <= 1) {
        for (std::size_t m = 0; m <= top; ++m)
            report.degrees.push_back(verify_degree(d, m, algebra));
        return report;
    }
    std::vector<std::future<PolynomialDegreeReport>> pending;
    for (std::size_t m = 0; m <= top; ++m)
        pending.push_back(std::async(std::launch::async, verify_degree, d, m, std::ref(algebra)));
    for (auto& f : pending)
        report.degrees.push_back(f.get());
    return report;
}

RingElement to_orbifold_basis(const RingElement& x)
{
    RingElement out(x.degree());
    for (const auto& [lam, c] : x.coeffs())
        out.add_term(lam, c / to_mpz(centralizer_order(lam)));
    return out;
}

RingElement from_orbifold_basis(const RingElement& x)
{
    RingElement out(x.degree());
    for (const auto& [lam, c] : x.coeffs())
        out.add_term(lam, c * to_mpz(centralizer_order(lam)));
    return out;
}

} // namespace branchcov
