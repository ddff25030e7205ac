#pragma once

#include "hds/rootsys.hpp"

#include <string>
#include <vector>

namespace hds {

enum class Family { SU, Sp };

struct GroupSpec {
    Family family = Family::SU;
    int p = 0, q = 0; // SU(p,q)
    int n = 0;        // Sp(n,R)
};

/// Root data of a Hermitian symmetric pair (G,K) for SU(p,q) or Sp(n,R).
///
/// The positive system of the full datum is R_c^+ together with the
/// noncompact roots of positive z0-degree (the holomorphic system).
struct HermitianPair {
    GroupSpec spec;
    RootDatum full;    // g_C with the holomorphic positive system
    RootDatum compact; // k_C with R_c^+; same ambient as full
    std::vector<Weight> compact_roots, noncompact_roots;
    std::vector<Weight> compact_positives, noncompact_positives; // R_c^+, R_n^{+,z0}
    Weight z0, beta_min, rho_c, rho_n;
    std::vector<Weight> cascade;

    std::string name() const;
    Ambient ambient() const { return full.ambient(); }
    std::size_t dim() const { return full.dim(); }
    std::size_t rank() const { return cascade.size(); }

    // z0-degree, normalized so that every noncompact positive root has degree 1.
    Rational degree(const Weight &v) const;
};

/// Throws DomainError("invalid_parameters") for p,q < 1 or n < 1.
HermitianPair build_pair(const GroupSpec &spec);

/// Greedy maximal strongly orthogonal sequence in R_n^{+,z0}.
std::vector<Weight> cascade(const HermitianPair &pair);

// Generators gamma_1 + ... + gamma_k of the Kirwan cone.
std::vector<Weight> kirwan_cone(const HermitianPair &pair);

// Expresses v as a nonnegative combination of the cone generators
// (coefficients in generator order), or returns an empty vector.
Vector cone_coordinates(const HermitianPair &pair, const Weight &v);

bool in_c_hol(const HermitianPair &pair, const Weight &xi);

/// (Lam - 2 rho_n, beta_min) >= 0. Throws DomainError unless Lam is a
/// dominant weight of K.
bool in_c_hol_geq(const HermitianPair &pair, const Weight &lam);

enum class XiType { Empty, HalfGammas };

struct RestrictedRoots {
    std::vector<Weight> positives; // nonzero projections of R^+_hol onto span(cascade)
    XiType xi_type;
};

/// Throws std::logic_error when the projection matches neither admissible shape.
RestrictedRoots restricted_roots(const HermitianPair &pair);

/// sum_k t_k^2 gamma_k / |gamma_k|^2 for t_1 >= ... >= t_r >= 0.
Weight moment_image_on_a(const HermitianPair &pair, const std::vector<Rational> &t);

std::string to_string(Family f);
std::string to_string(XiType x);

} // namespace hds
