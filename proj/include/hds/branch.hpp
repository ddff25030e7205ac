#pragma once

#include "hds/mult.hpp"

#include <optional>
#include <string>

namespace hds {

/// Compact connected H inside K, sharing a maximal torus S inside T.
/// Weights restrict through projection (rows: s* coordinates).
struct Subgroup {
    std::string name;
    std::string h_type; // informational: "torus", "A2", "center", ...
    Matrix projection;
    RootDatum h_datum; // no roots for a torus
    bool is_torus = false;
    bool is_normal_in_K = false;
    bool contains_center = false;

    std::size_t h_dim() const { return h_datum.dim(); }
};

/// Presets: "torus", "center", "full"; "su-p-block", "su-q-block" for SU(p,q);
/// "su-n" (SU(n) in U(n)) for Sp(n,R). Throws DomainError("unknown_subgroup").
Subgroup subgroup_preset(const HermitianPair &pair, const std::string &name);

/// Throws std::invalid_argument on dimension mismatch.
Weight restrict_weight(const Subgroup &sub, const Weight &nu);

/// V^K_lam restricted to H, by peeling highest weights off the projected
/// Freudenthal multiset. Throws DomainError("invalid_subgroup") when the
/// peeling goes negative.
RepDecomposition branch_irrep(const HermitianPair &pair, const Subgroup &sub, const Weight &lam);

enum class AdmissibilityStatus { Admissible, NotAdmissible, Unknown };

enum class CertificateKind {
    CenterGrading,
    SeparatingFunctional,
    ConeKernelTrivial,
    ConeKernelRay,
    InvariantWitness,
    TruncationExhausted,
};

struct AdmissibilityVerdict {
    AdmissibilityStatus status = AdmissibilityStatus::Unknown;
    CertificateKind certificate = CertificateKind::TruncationExhausted;
    std::optional<Weight> eta;         // s*: CenterGrading, SeparatingFunctional
    std::optional<Weight> witness_ray; // t*: ConeKernelRay
    std::optional<Weight> k_type;      // InvariantWitness: Schmid K-type holding the invariant
    int degree = 0;                    // InvariantWitness
    int truncation = 0;                // TruncationExhausted
};

std::string to_string(AdmissibilityStatus s);
std::string to_string(CertificateKind c);

/// A functional eta on s* with (restrict(beta), eta) >= 1 for every beta in
/// gens, or nullopt.
std::optional<Weight> separating_functional(const Subgroup &sub, const std::vector<Weight> &gens);

AdmissibilityVerdict admissible(const HermitianPair &pair, const Subgroup &sub, int truncation = 6);

/// Number of H-invariant lines in S^d(p+).
std::int64_t invariants_dim(const HermitianPair &pair, const Subgroup &sub, int d);

struct HMultResult {
    std::int64_t value = 0;
    bool complete = false;
    std::optional<std::int64_t> degree_bound; // set when a functional bounds the degree
};

/// Multiplicity of V^H_mu in the holomorphic discrete series with lowest
/// K-type Lam, summed over degrees 0..min(bound, cutoff).
HMultResult h_mult(const HermitianPair &pair, const Weight &big, const Subgroup &sub, const Weight &mu,
                   int cutoff = 8, int truncation = 6);

/// Same for the discrete series with Harish-Chandra parameter lam, via the
/// Blattner formula. Outside C_hol the certificate is a functional positive
/// on W_K R_n^{+,lam}; without one the call throws
/// DomainError("admissibility_unknown").
HMultResult ds_h_mult(const HermitianPair &pair, const Weight &lam, const Subgroup &sub, const Weight &mu,
                      int cutoff = 8, int truncation = 6);

} // namespace hds
