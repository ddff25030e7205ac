#pragma once

#include "hds/linalg.hpp"
#include "hds/weight.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

namespace hds {

// Which integer vectors count as weights of the torus.
enum class Lattice {
    Integral,        // Z^n
    IntegralModOnes, // Z^n / Z(1,...,1); a canonical weight is in it iff all
                     // pairwise coordinate differences are integers
};

/// Multiset of weights: weight -> multiplicity.
using WeightMultiset = std::map<Weight, std::int64_t>;

/// Finite (reduced) root system together with a chosen positive system.
///
/// The ambient space can be larger than the span of the roots (reductive
/// groups: the orthogonal complement is central). Roots must come in
/// +/- pairs; the positive system is given explicitly and the base is
/// derived from it as the set of indecomposable positive roots.
class RootDatum {
public:
    RootDatum() = default;
    RootDatum(Ambient ambient, std::size_t dim, std::vector<Weight> positives, Lattice lattice);

    Ambient ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return dim_; }
    Lattice lattice() const noexcept { return lattice_; }
    const std::vector<Weight> &roots() const noexcept { return roots_; }
    const std::vector<Weight> &positives() const noexcept { return positives_; }
    const std::vector<Weight> &simple_roots() const noexcept { return simple_; }
    // Computed on first use by orbit enumeration; thread safe.
    std::uint64_t weyl_order() const;
    const Weight &rho() const noexcept { return rho_; }

    bool is_root(const Weight &v) const;
    bool in_lattice(const Weight &v) const;
    bool in_root_span(const Weight &v) const;

    // Coefficients of v (which must lie in the root span) on the simple roots.
    Vector simple_coordinates(const Weight &v) const;
    Rational height(const Weight &v) const;

    Weight zero() const { return Weight::zero(ambient_, dim_); }

private:
    Ambient ambient_ = Ambient::Euclidean;
    std::size_t dim_ = 0;
    Lattice lattice_ = Lattice::Integral;
    std::vector<Weight> positives_, roots_, simple_;
    std::vector<Weight> sorted_roots_;
    Matrix gram_inverse_;
    Weight rho_;
    struct OrderCache {
        std::once_flag once;
        std::uint64_t value = 1;
    };
    std::shared_ptr<OrderCache> order_ = std::make_shared<OrderCache>();
};

/// Reflection of v in the hyperplane orthogonal to alpha.
Weight reflect(const Weight &alpha, const Weight &v);

bool is_dominant(std::span<const Weight> positives, const Weight &v);
bool is_dominant(const RootDatum &datum, const Weight &v);

// Strictly dominant: (v, alpha) > 0 for every positive root.
bool is_regular_dominant(const RootDatum &datum, const Weight &v);

struct SignedWeight {
    Weight weight;
    int sign; // det(w) in {+1,-1}, or 0 when v is fixed by a reflection
};

/// Unique dominant W-translate of v and the determinant of the Weyl element
/// used. sign is 0 exactly when v lies on a wall.
SignedWeight dominant_rep(const RootDatum &datum, const Weight &v);

/// Full W-orbit of v, sorted.
std::vector<Weight> weyl_orbit(const RootDatum &datum, const Weight &v);

/// W-orbit of a regular weight paired with det(w); one entry per Weyl element.
std::vector<SignedWeight> signed_weyl_orbit(const RootDatum &datum, const Weight &v);

/// Half-sum of the given roots.
Weight rho(Ambient ambient, std::size_t dim, std::span<const Weight> positives);

/// Weyl dimension formula. Throws DomainError for non-dominant lam.
std::int64_t weyl_dim(const RootDatum &datum, const Weight &lam);

/// All weights of the irreducible module with highest weight lam, with
/// multiplicities (Freudenthal recursion over the dominant weights, then
/// expanded along W-orbits). Throws DomainError for non-dominant lam.
WeightMultiset freudenthal(const RootDatum &datum, const Weight &lam);

/// Number of ways of writing a target as a sum of generators (with
/// repetition). Generators are counted as distinct by position, so a
/// repeated generator realizes a root of multiplicity two.
///
/// The grading functional must pair strictly positively with every
/// generator; targets with negative grade are rejected immediately, which
/// makes the recursion finite. Memoization lives in the object, so one
/// counter should not be shared between threads.
class KostantPartition {
public:
    KostantPartition(std::vector<Weight> generators, Weight grading);

    std::int64_t count(const Weight &target);
    const std::vector<Weight> &generators() const noexcept { return generators_; }

private:
    std::int64_t count_prefix(std::size_t n, const Weight &target);

    std::vector<Weight> generators_;
    Weight grading_;
    std::vector<Rational> grades_;
    std::map<std::pair<std::size_t, Weight>, std::int64_t> memo_;
};

// One-shot convenience wrapper.
std::int64_t kostant_partition(std::span<const Weight> generators, const Weight &target, const Weight &grading);

/// Type A_{n-1} in the TypeA ambient of dimension n: positives e_i - e_j, i < j.
RootDatum type_a_datum(std::size_t n);
/// Type C_n in Euclidean R^n: positives e_i -/+ e_j (i<j) and 2e_i.
RootDatum type_c_datum(std::size_t n);

} // namespace hds
