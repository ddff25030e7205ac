#include "hds/branch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hds {

std::string to_string(AdmissibilityStatus s)
{
    switch (s) {
    case AdmissibilityStatus::Admissible: return "Admissible";
    case AdmissibilityStatus::NotAdmissible: return "NotAdmissible";
    case AdmissibilityStatus::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(CertificateKind c)
{
    switch (c) {
    case CertificateKind::CenterGrading: return "CenterGrading";
    case CertificateKind::SeparatingFunctional: return "SeparatingFunctional";
    case CertificateKind::ConeKernelTrivial: return "ConeKernelTrivial";
    case CertificateKind::ConeKernelRay: return "ConeKernelRay";
    case CertificateKind::InvariantWitness: return "InvariantWitness";
    case CertificateKind::TruncationExhausted: return "TruncationExhausted";
    }
    return "?";
}

namespace {

Matrix identity(std::size_t n)
{
    Matrix m(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

// Rows e_i - mean over [first, first+len), i in the block.
Matrix block_projection(std::size_t dim, std::size_t first, std::size_t len)
{
    Matrix m(len, Vector(dim));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j)
            m[i][first + j] = (i == j ? Rational(1) : Rational(0)) - Rational(1, len);
    return m;
}

Subgroup block(const std::string &name, std::size_t dim, std::size_t first, std::size_t len)
{
    Subgroup s;
    s.name = name;
    s.h_type = "A" + std::to_string(len - 1);
    s.projection = block_projection(dim, first, len);
    s.h_datum = type_a_datum(len);
    s.is_normal_in_K = true;
    return s;
}

} // namespace

Subgroup subgroup_preset(const HermitianPair &pair, const std::string &name)
{
    const std::size_t n = pair.dim();
    const bool su = pair.spec.family == Family::SU;
    Subgroup s;
    s.name = name;
    if (name == "torus") {
        s.h_type = "torus";
        s.projection = identity(n);
        s.h_datum = RootDatum(pair.ambient(), n, {}, pair.full.lattice());
        s.is_torus = true;
    } else if (name == "center") {
        s.h_type = "center";
        s.projection = Matrix{Vector(pair.z0.coords().begin(), pair.z0.coords().end())};
        s.h_datum = RootDatum(Ambient::Euclidean, 1, {}, Lattice::Integral);
        s.is_torus = true;
        s.contains_center = true;
    } else if (name == "full") {
        s.h_type = "K";
        s.projection = identity(n);
        s.h_datum = pair.compact;
        s.is_normal_in_K = true;
        s.contains_center = true;
    } else if (su && name == "su-p-block") {
        s = block(name, n, 0, pair.spec.p);
    } else if (su && name == "su-q-block") {
        s = block(name, n, pair.spec.p, pair.spec.q);
    } else if (!su && name == "su-n") {
        s = block(name, n, 0, n);
    } else {
        throw DomainError("unknown_subgroup", "no subgroup preset '" + name + "' for " + pair.name());
    }
    return s;
}

Weight restrict_weight(const Subgroup &sub, const Weight &nu)
{
    std::vector<Rational> out(sub.projection.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Vector &row = sub.projection[i];
        if (row.size() != nu.dim())
            throw std::invalid_argument("restrict_weight: " + nu.str() + " has the wrong dimension");
        for (std::size_t j = 0; j < row.size(); ++j)
            out[i] += row[j] * nu[j];
    }
    return Weight(sub.h_datum.ambient(), std::move(out));
}

RepDecomposition branch_irrep(const HermitianPair &pair, const Subgroup &sub, const Weight &lam)
{
    if (!is_dominant(pair.compact, lam))
        throw DomainError("non_dominant", "branch_irrep: " + lam.str() + " is not dominant");
    WeightMultiset rest;
    for (const auto &[nu, m] : freudenthal(pair.compact, lam)) {
        auto &slot = rest[restrict_weight(sub, nu)];
        slot += m;
    }

    const RootDatum &h = sub.h_datum;
    const Weight &rho_h = h.rho();
    RepDecomposition out;
    while (!rest.empty()) {
        auto top = rest.begin();
        Rational best = inner(top->first, rho_h);
        for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
            Rational v = inner(it->first, rho_h);
            // Ties go to the lexicographically larger weight (later in the map).
            if (v >= best) {
                best = v;
                top = it;
            }
        }
        Weight hw = top->first;
        std::int64_t m = top->second;
        if (!is_dominant(h, hw))
            throw DomainError("invalid_subgroup", "branch_irrep: peeled weight " + hw.str() + " is not H-dominant");
        out.add(hw, m);
        for (const auto &[w, k] : freudenthal(h, hw)) {
            auto it = rest.find(w);
            if (it == rest.end() || it->second < m * k)
                throw DomainError("invalid_subgroup", "branch_irrep: negative multiplicity at " + w.str());
            it->second -= m * k;
            if (it->second == 0)
                rest.erase(it);
        }
    }
    if (out.dimension(h) != weyl_dim(pair.compact, lam))
        throw std::logic_error("branch_irrep: dimension not conserved");
    return out;
}

std::optional<Weight> separating_functional(const Subgroup &sub, const std::vector<Weight> &gens)
{
    const std::size_t m = sub.h_dim();
    std::vector<LinearConstraint> cons;
    for (const auto &b : gens) {
        Weight r = restrict_weight(sub, b);
        cons.push_back({Vector(r.coords().begin(), r.coords().end()), Rational(1), false});
    }
    auto eta = find_feasible_point(m, std::move(cons));
    if (!eta)
        return std::nullopt;
    return Weight(sub.h_datum.ambient(), std::move(*eta));
}

namespace {

// A nonzero point of Kirwan cone ∩ ker(projection), made primitive.
std::optional<Weight> cone_kernel_ray(const HermitianPair &pair, const Subgroup &sub)
{
    auto gens = kirwan_cone(pair);
    const std::size_t r = gens.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t k = 0; k < r; ++k) {
        Vector e(r);
        e[k] = 1;
        cons.push_back({e, Rational(0), false});
    }
    cons.push_back({Vector(r, Rational(1)), Rational(1), true});
    std::vector<Weight> images;
    for (const auto &g : gens)
        images.push_back(restrict_weight(sub, g));
    for (std::size_t i = 0; i < sub.projection.size(); ++i) {
        Vector row(r);
        for (std::size_t k = 0; k < r; ++k)
            row[k] = images[k][i];
        cons.push_back({row, Rational(0), true});
    }
    auto c = find_feasible_point(r, std::move(cons));
    if (!c)
        return std::nullopt;
    Weight ray = pair.full.zero();
    for (std::size_t k = 0; k < r; ++k)
        ray += (*c)[k] * gens[k];
    return primitive(ray);
}

std::int64_t trivial_mult(const HermitianPair &pair, const Subgroup &sub, const Weight &kt)
{
    return branch_irrep(pair, sub, kt).mult(sub.h_datum.zero());
}

} // namespace

std::int64_t invariants_dim(const HermitianPair &pair, const Subgroup &sub, int d)
{
    std::int64_t total = 0;
    for (const auto &[nu, m] : schmid_degree(pair, d).terms)
        total += m * trivial_mult(pair, sub, nu);
    return total;
}

AdmissibilityVerdict admissible(const HermitianPair &pair, const Subgroup &sub, int truncation)
{
    AdmissibilityVerdict v;
    auto eta = separating_functional(sub, pair.noncompact_positives);
    if (sub.contains_center) {
        if (!eta)
            throw DomainError("invalid_subgroup", "subgroup " + sub.name + " claims the center but z0 does not separate");
        v.status = AdmissibilityStatus::Admissible;
        v.certificate = CertificateKind::CenterGrading;
        v.eta = eta;
        return v;
    }
    if (eta) {
        v.status = AdmissibilityStatus::Admissible;
        v.certificate = CertificateKind::SeparatingFunctional;
        v.eta = eta;
        return v;
    }
    if (sub.is_normal_in_K) {
        if (auto ray = cone_kernel_ray(pair, sub)) {
            v.status = AdmissibilityStatus::NotAdmissible;
            v.certificate = CertificateKind::ConeKernelRay;
            v.witness_ray = ray;
        } else {
            v.status = AdmissibilityStatus::Admissible;
            v.certificate = CertificateKind::ConeKernelTrivial;
        }
        return v;
    }
    for (int d = 1; d <= truncation; ++d) {
        for (const auto &[nu, m] : schmid_degree(pair, d).terms) {
            if (trivial_mult(pair, sub, nu) > 0) {
                v.status = AdmissibilityStatus::NotAdmissible;
                v.certificate = CertificateKind::InvariantWitness;
                v.degree = d;
                v.k_type = nu;
                return v;
            }
        }
    }
    v.status = AdmissibilityStatus::Unknown;
    v.certificate = CertificateKind::TruncationExhausted;
    v.truncation = truncation;
    return v;
}

namespace {

void check_h_weight(const Subgroup &sub, const Weight &mu)
{
    if (mu.dim() != sub.h_dim() || mu.ambient() != sub.h_datum.ambient())
        throw DomainError("invalid_argument", "mu " + mu.str() + " is not a weight of " + sub.name);
    if (!is_dominant(sub.h_datum, mu))
        throw DomainError("non_dominant", "mu " + mu.str() + " is not dominant for " + sub.name);
}

// Largest number of noncompact roots that can be added to big before every
// weight of the resulting K-types pairs above all weights of V^H_mu.
//
// Every weight of a K-type built from big and k roots pairs with eta at least
// min_w (P w big, eta) + k c, where c = min over gens of (P gen, eta) > 0;
// the weights of V^H_mu pair at most max_w (w mu, eta).
std::int64_t degree_bound(const HermitianPair &pair, const Subgroup &sub, const Weight &eta,
                          const std::vector<Weight> &gens, const Weight &big, const Weight &mu)
{
    Rational c;
    bool first = true;
    for (const auto &g : gens) {
        Rational v = inner(restrict_weight(sub, g), eta);
        if (first || v < c)
            c = v;
        first = false;
    }
    Rational top, low;
    first = true;
    for (const auto &w : weyl_orbit(sub.h_datum, mu)) {
        Rational v = inner(w, eta);
        if (first || v > top)
            top = v;
        first = false;
    }
    first = true;
    for (const auto &w : weyl_orbit(pair.compact, big)) {
        Rational v = inner(restrict_weight(sub, w), eta);
        if (first || v < low)
            low = v;
        first = false;
    }
    return to_int64(floor(Rational((top - low) / c)));
}

} // namespace

HMultResult h_mult(const HermitianPair &pair, const Weight &big, const Subgroup &sub, const Weight &mu, int cutoff,
                   int truncation)
{
    if (!is_dominant(pair.compact, big) || !pair.compact.in_lattice(big) || !in_c_hol(pair, big))
        throw DomainError("not_in_c_hol", "h_mult: " + big.str() + " is not a weight in C_hol");
    check_h_weight(sub, mu);
    auto verdict = admissible(pair, sub, truncation);
    if (verdict.status != AdmissibilityStatus::Admissible)
        throw DomainError("not_admissible", "restriction to " + sub.name + " is not known to be admissible");

    HMultResult res;
    std::int64_t last = cutoff;
    if (verdict.eta) {
        res.degree_bound = degree_bound(pair, sub, *verdict.eta, pair.noncompact_positives, big, mu);
        res.complete = *res.degree_bound <= cutoff;
        last = std::min<std::int64_t>(*res.degree_bound, cutoff);
    }
    std::map<Weight, std::int64_t> cache;
    for (std::int64_t d = 0; d <= last; ++d) {
        for (const auto &[kt, m] : holo_k_types(pair, big, int(d)).terms) {
            auto it = cache.find(kt);
            if (it == cache.end())
                it = cache.emplace(kt, branch_irrep(pair, sub, kt).mult(mu)).first;
            res.value += m * it->second;
        }
    }
    return res;
}

HMultResult ds_h_mult(const HermitianPair &pair, const Weight &lam, const Subgroup &sub, const Weight &mu, int cutoff,
                      int truncation)
{
    BlattnerCalculator calc(pair, lam);
    check_h_weight(sub, mu);
    const Weight &big = calc.blattner_parameter();
    const auto &pos = calc.noncompact_positives();

    std::optional<Weight> eta;
    std::vector<Weight> gens;
    if (pos == pair.noncompact_positives) {
        auto verdict = admissible(pair, sub, truncation);
        if (verdict.status != AdmissibilityStatus::Admissible)
            throw DomainError("not_admissible", "restriction to " + sub.name + " is not known to be admissible");
        eta = verdict.eta;
        gens = pos;
    } else {
        std::set<Weight> orbit;
        for (const auto &b : pos)
            for (auto &w : weyl_orbit(pair.compact, b))
                orbit.insert(std::move(w));
        gens.assign(orbit.begin(), orbit.end());
        eta = separating_functional(sub, gens);
        if (!eta)
            throw DomainError("admissibility_unknown",
                              "no functional on " + sub.name + " separates the K-orbits of the roots of " + lam.str());
    }

    HMultResult res;
    std::int64_t last = cutoff;
    if (eta) {
        res.degree_bound = degree_bound(pair, sub, *eta, gens, big, mu);
        res.complete = *res.degree_bound <= cutoff;
        last = std::min<std::int64_t>(*res.degree_bound, cutoff);
    }
    // K-types of the discrete series are among big + (sums of roots of R_n^{+,lam}).
    std::set<Weight> seen{big};
    std::vector<Weight> layer{big};
    for (std::int64_t k = 1; k <= last; ++k) {
        std::vector<Weight> next;
        for (const auto &x : layer)
            for (const auto &b : pos) {
                Weight y = x + b;
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        layer = std::move(next);
    }
    for (const auto &kt : seen) {
        if (!is_dominant(pair.compact, kt))
            continue;
        std::int64_t m = calc.mult(kt);
        if (m > 0)
            res.value += m * branch_irrep(pair, sub, kt).mult(mu);
    }
    return res;
}

} // namespace hds
