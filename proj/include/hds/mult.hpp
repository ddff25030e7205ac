#pragma once

#include "hds/params.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace hds {

/// Finite sum of irreducibles: dominant highest weight -> multiplicity,
/// optionally with the z0-degree of each term.
struct RepDecomposition {
    std::map<Weight, std::int64_t> terms;
    std::optional<std::map<Weight, Rational>> grading;

    std::int64_t mult(const Weight &hw) const;
    std::int64_t dimension(const RootDatum &datum) const;
    void add(const Weight &hw, std::int64_t m);
};

/// V_lam (x) V_Lam by Klimyk's formula, iterating over the weights of the
/// smaller factor. Throws DomainError for non-dominant inputs.
RepDecomposition tensor_decompose(const RootDatum &datum, const Weight &lam, const Weight &big);

/// Highest weights sum_k n_k (gamma_1+...+gamma_k) with sum_k k n_k = d.
RepDecomposition schmid_degree(const HermitianPair &pair, int d);

/// Weight multiset of S^d(p+).
WeightMultiset sym_power_character(const HermitianPair &pair, int d);

/// K-types of V_Lam (x) S^d(p+).
RepDecomposition holo_k_types(const HermitianPair &pair, const Weight &big, int d);

/// Multiplicity of V_mu in V_Lam (x) S(p+), Lam in C_hol.
std::int64_t holo_k_mult(const HermitianPair &pair, const Weight &big, const Weight &mu);

/// Blattner multiplicities for one Harish-Chandra parameter. Keeps the
/// partition-function memo alive across queries; not thread safe.
class BlattnerCalculator {
public:
    /// Throws DomainError("condition_1_2") when lam fails the sign condition.
    BlattnerCalculator(const HermitianPair &pair, const Weight &lam);

    const Weight &lambda() const noexcept { return lam_; }
    const Weight &blattner_parameter() const noexcept { return big_; }
    const std::vector<Weight> &noncompact_positives() const noexcept { return pos_; }

    std::int64_t mult(const Weight &mu);

private:
    const HermitianPair &pair_;
    Weight lam_, big_;
    std::vector<Weight> pos_;
    KostantPartition partition_;
};

std::int64_t blattner_mult(const HermitianPair &pair, const Weight &lam, const Weight &mu);

std::vector<Weight> asymptotic_support(const HermitianPair &pair);

} // namespace hds

namespace hds {

/// Dominant mu = big + nu with nu an integer vector (sum zero in type A)
/// and 0 <= deg(mu) - deg(big) <= max_offset. The box |nu_i| <= 2 max_offset
/// contains every K-type of V_big (x) S^d(p+) for d <= max_offset.
std::vector<Weight> dominant_weights_in_degree_window(const HermitianPair &pair, const Weight &big, int max_offset);

} // namespace hds
