#pragma once

#include "hds/hermitian.hpp"

#include <vector>

namespace hds {

/// A positive system of R containing R_c^+, recorded by its noncompact part.
struct Chamber {
    int id = 0; // 0 is the holomorphic chamber
    std::vector<Weight> noncompact_positives;
    Weight rho_n;
};

// Holomorphic chamber first, the rest ordered by rho_n.
std::vector<Chamber> chambers(const HermitianPair &pair);

Weight rho_n_of(const HermitianPair &pair, const Chamber &chamber);

/// Regular, K-dominant and in the rho-shifted lattice.
bool in_ghat_d(const HermitianPair &pair, const Weight &lam);

/// Noncompact positive roots {beta in R_n : (beta, lam) > 0}. Throws
/// DomainError("noncompact_wall") when lam is orthogonal to a noncompact root.
std::vector<Weight> noncompact_positives_of(const HermitianPair &pair, const Weight &lam);

/// Chamber containing a regular K-dominant lam.
Chamber chamber_of(const HermitianPair &pair, const Weight &lam);

Weight rho_n_lambda(const HermitianPair &pair, const Weight &lam);

/// Lambda(lam) = lam - rho_c + rho_n(lam). Throws DomainError("not_in_ghat_d").
Weight blattner_param(const HermitianPair &pair, const Weight &lam);

/// (beta, lam)(beta, Lambda(lam)) > 0 for every noncompact root beta.
bool condition_hc(const HermitianPair &pair, const Weight &lam);

/// Lam + rho_c - rho_n for a dominant Lam with in_c_hol_geq.
Weight hc_from_blattner(const HermitianPair &pair, const Weight &lam);

} // namespace hds

namespace hds {

/// Harish-Chandra parameters with every coordinate of absolute value at most
/// bound (type-A weights are measured on their sum-zero representative).
std::vector<Weight> hc_params_in_box(const HermitianPair &pair, long bound);

} // namespace hds
