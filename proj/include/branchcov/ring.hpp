#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "branchcov/classalg.hpp"
#include "branchcov/partition.hpp"

namespace branchcov {

/// A rational cohomology class of the degree-d branched-cover space, in the
/// cell basis {t_λ} (crude fundamental classes), |t_λ| = 2 N(λ).
class RingElement {
public:
    explicit RingElement(std::size_t d) : d_(d) {}

    static RingElement basis(const Partition& lam);
    static RingElement unit(std::size_t d) { return basis(Partition::ones(d)); }
    /// {"d":4,"coeffs":[{"lam":"3,1","c":"3"},...]}
    static RingElement from_json(const nlohmann::json& j);

    std::size_t degree() const noexcept { return d_; }
    const std::map<Partition, mpq_class>& coeffs() const noexcept { return coeffs_; }
    mpq_class coeff(const Partition& lam) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Adds c * t_lam; zero coefficients are dropped.
    void add_term(const Partition& lam, const mpq_class& c);

    RingElement& operator+=(const RingElement& other);
    RingElement operator*(const mpq_class& scalar) const;

    /// Cohomological degree if homogeneous (all terms with equal N), else -1; 0 for zero.
    long homogeneous_degree() const;

    /// Terms listed in decreasing lexicographic order of λ.
    nlohmann::json to_json() const;
    /// "3·t_{(3,1)} + 2·t_{(2,2)}", or "0".
    std::string to_string() const;

    bool operator==(const RingElement& other) const { return d_ == other.d_ && coeffs_ == other.coeffs_; }

private:
    std::size_t d_;
    std::map<Partition, mpq_class> coeffs_;
};

/// t_μ · t_ν = Σ_{N(λ) = N(μ)+N(ν)} c_{μν}^λ t_λ, extended bilinearly, where
/// c_{μν}^λ is the factorization count. Lower-N products are truncated.
RingElement cup(const RingElement& x, const RingElement& y, ClassAlgebra& algebra);

class NotRepresentable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LeadingTermReport {
    Partition mu, nu, joined;
    mpq_class leading_coefficient;
    bool leading_nonzero = false;
    /// Terms other than t_{μ∪ν} with no more 1-parts than μ∪ν.
    std::vector<Partition> offenders;
    bool ok() const { return leading_nonzero && offenders.empty(); }
};

/// Checks t_μ t_ν = c · t_{μ∪ν} + (terms with strictly more parts equal to 1), c != 0.
/// Throws NotRepresentable when μ and ν have no disjoint-support representatives in S_d.
LeadingTermReport leading_term_check(const Partition& mu, const Partition& nu, std::size_t d, ClassAlgebra& algebra);

/// Product of the hook generators t_k = t_{(k,1^{d-k})}, k in `ks`, taken in
/// decreasing order of k. Throws std::invalid_argument for k < 2 or k > d.
RingElement monomial_expand(std::vector<unsigned> ks, std::size_t d, ClassAlgebra& algebra);

/// Rank of a set of elements over Q (exact Gaussian elimination).
std::size_t rank(const std::vector<RingElement>& elements);

struct PolynomialDegreeReport {
    std::size_t m = 0;                           ///< cohomological degree 2m
    std::vector<std::vector<unsigned>> monomials; ///< one multiset of k's per partition of m
    std::size_t rank = 0;
    std::uint64_t betti = 0;                     ///< number of λ with N(λ) = m
    bool order_independent = true;               ///< ascending-order products agree
    bool ok() const { return rank == monomials.size() && rank == betti && order_independent; }
};

struct PolynomialReport {
    std::size_t d = 0;
    std::vector<PolynomialDegreeReport> degrees; ///< 2m <= d
    bool ok() const;
};

/// In every degree 2m <= d, the monomials in the hook generators of weight
/// Σ(k-1) = m are linearly independent and as many as b_{2m}.
PolynomialReport verify_polynomial(std::size_t d, ClassAlgebra& algebra, unsigned jobs = 1);

/// Coordinates in the orbifold basis u_λ = z_λ t_λ (z_λ the isotropy order),
/// returned as the element Σ (c_λ / z_λ) u_λ with u_λ stored under key λ.
RingElement to_orbifold_basis(const RingElement& x);
RingElement from_orbifold_basis(const RingElement& x);

} // namespace branchcov
