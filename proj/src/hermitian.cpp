#include "hds/hermitian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hds {

std::string to_string(Family f)
{
    return f == Family::SU ? "su" : "sp";
}

std::string to_string(XiType x)
{
    return x == XiType::Empty ? "Empty" : "HalfGammas";
}

std::string HermitianPair::name() const
{
    if (spec.family == Family::SU)
        return "SU(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
    return "Sp(" + std::to_string(spec.n) + ",R)";
}

Rational HermitianPair::degree(const Weight &v) const
{
    return inner(v, z0) / inner(beta_min, z0);
}

namespace {

void split_roots(HermitianPair &pair)
{
    const Ambient amb = pair.ambient();
    const std::size_t dim = pair.dim();
    pair.compact = RootDatum(amb, dim, pair.compact_positives, pair.full.lattice());
    for (const auto &a : pair.full.roots()) {
        if (inner(a, pair.z0) == 0)
            pair.compact_roots.push_back(a);
        else
            pair.noncompact_roots.push_back(a);
    }
    std::sort(pair.compact_roots.begin(), pair.compact_roots.end());
    std::sort(pair.noncompact_roots.begin(), pair.noncompact_roots.end());
    std::sort(pair.noncompact_positives.begin(), pair.noncompact_positives.end());

    pair.rho_c = rho(amb, dim, pair.compact_positives);
    pair.rho_n = rho(amb, dim, pair.noncompact_positives);

    // beta_min: the noncompact positive root below all others modulo R_c^+.
    auto above = [&](const Weight &c, const Weight &b) {
        Weight diff = c - b;
        if (!pair.compact.in_root_span(diff))
            return false;
        for (const auto &x : pair.compact.simple_coordinates(diff))
            if (x < 0 || !is_integer(x))
                return false;
        return true;
    };
    for (const auto &b : pair.noncompact_positives) {
        bool lowest = std::all_of(pair.noncompact_positives.begin(), pair.noncompact_positives.end(),
                                  [&](const Weight &c) { return above(c, b); });
        if (lowest) {
            if (!pair.beta_min.coords().empty())
                throw std::logic_error("build_pair: beta_min is not unique");
            pair.beta_min = b;
        }
    }
    if (pair.beta_min.coords().empty())
        throw std::logic_error("build_pair: no beta_min");
    pair.cascade = cascade(pair);
}

HermitianPair build_su(int p, int q)
{
    const std::size_t n = p + q;
    auto e = [n](std::size_t i) { return Weight::unit(Ambient::TypeA, n, i); };
    HermitianPair pair;
    pair.spec = {Family::SU, p, q, 0};
    pair.full = type_a_datum(n);
    std::vector<Rational> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = i < std::size_t(p) ? Rational(q, n) : Rational(-p, n);
    pair.z0 = Weight(Ambient::TypeA, z);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same_block = (i < std::size_t(p)) == (j < std::size_t(p));
            (same_block ? pair.compact_positives : pair.noncompact_positives).push_back(e(i) - e(j));
        }
    }
    split_roots(pair);
    return pair;
}

HermitianPair build_sp(int n)
{
    auto e = [n](std::size_t i) { return Weight::unit(Ambient::Euclidean, n, i); };
    HermitianPair pair;
    pair.spec = {Family::Sp, 0, 0, n};
    pair.full = type_c_datum(n);
    pair.z0 = Weight(Ambient::Euclidean, std::vector<Rational>(n, Rational(1, 2)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pair.compact_positives.push_back(e(i) - e(j));
            pair.noncompact_positives.push_back(e(i) + e(j));
        }
        pair.noncompact_positives.push_back(Rational(2) * e(i));
    }
    split_roots(pair);
    return pair;
}

} // namespace

HermitianPair build_pair(const GroupSpec &spec)
{
    if (spec.family == Family::SU) {
        if (spec.p < 1 || spec.q < 1)
            throw DomainError("invalid_parameters", "SU(p,q) needs p,q >= 1");
        return build_su(spec.p, spec.q);
    }
    if (spec.n < 1)
        throw DomainError("invalid_parameters", "Sp(n,R) needs n >= 1");
    return build_sp(spec.n);
}

std::vector<Weight> cascade(const HermitianPair &pair)
{
    const RootDatum &full = pair.full;
    auto strongly_orthogonal = [&](const Weight &a, const Weight &b) {
        return a != b && !full.is_root(a + b) && !full.is_root(a - b);
    };
    std::vector<Weight> out;
    for (;;) {
        const Weight *best = nullptr;
        Rational best_height;
        bool tie = false;
        for (const auto &b : pair.noncompact_positives) {
            bool ok = std::all_of(out.begin(), out.end(), [&](const Weight &g) { return strongly_orthogonal(b, g); });
            if (!ok)
                continue;
            Rational h = full.height(b);
            if (!best || h > best_height) {
                best = &b;
                best_height = h;
                tie = false;
            } else if (h == best_height) {
                tie = true;
            }
        }
        if (!best)
            break;
        if (tie)
            throw std::logic_error("cascade: two maximal roots of equal height");
        out.push_back(*best);
    }
    return out;
}

std::vector<Weight> kirwan_cone(const HermitianPair &pair)
{
    std::vector<Weight> gens;
    Weight acc = pair.full.zero();
    for (const auto &g : pair.cascade) {
        acc += g;
        gens.push_back(acc);
    }
    return gens;
}

Vector cone_coordinates(const HermitianPair &pair, const Weight &v)
{
    auto gens = kirwan_cone(pair);
    Matrix a(pair.dim(), Vector(gens.size()));
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < pair.dim(); ++i)
            a[i][k] = gens[k][i];
    auto x = solve_linear(a, Vector(v.coords().begin(), v.coords().end()));
    if (!x)
        return {};
    // Generators are linearly independent, so the solution is unique.
    for (const auto &c : *x)
        if (c < 0)
            return {};
    return *x;
}

bool in_c_hol(const HermitianPair &pair, const Weight &xi)
{
    return is_dominant(pair.compact, xi) && inner(xi, pair.beta_min) > 0;
}

bool in_c_hol_geq(const HermitianPair &pair, const Weight &lam)
{
    if (!is_dominant(pair.compact, lam) || !pair.compact.in_lattice(lam))
        throw DomainError("non_dominant", "in_c_hol_geq: " + lam.str() + " is not a dominant weight of K");
    return inner(lam - Rational(2) * pair.rho_n, pair.beta_min) >= 0;
}

RestrictedRoots restricted_roots(const HermitianPair &pair)
{
    const auto &gam = pair.cascade;
    const std::size_t r = gam.size();
    auto project = [&](const Weight &v) {
        Weight out = pair.full.zero();
        for (const auto &g : gam)
            out += (inner(v, g) / inner(g, g)) * g;
        return out;
    };
    std::set<Weight> found;
    for (const auto &a : pair.full.positives()) {
        Weight pr = project(a);
        if (!pr.is_zero())
            found.insert(pr);
    }

    std::set<Weight> base;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < r; ++i) {
        base.insert(gam[i]);
        for (std::size_t j = i + 1; j < r; ++j) {
            base.insert(half * (gam[i] + gam[j]));
            base.insert(half * (gam[i] - gam[j]));
        }
    }
    std::set<Weight> with_half = base;
    for (const auto &g : gam)
        with_half.insert(half * g);

    RestrictedRoots out;
    out.positives.assign(found.begin(), found.end());
    if (found == base)
        out.xi_type = XiType::Empty;
    else if (found == with_half)
        out.xi_type = XiType::HalfGammas;
    else
        throw std::logic_error("restricted_roots: projection of " + pair.name() + " has an unexpected shape");
    return out;
}

Weight moment_image_on_a(const HermitianPair &pair, const std::vector<Rational> &t)
{
    if (t.size() != pair.rank())
        throw DomainError("invalid_argument", "moment_image_on_a: expected " + std::to_string(pair.rank()) + " parameters");
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] < 0 || (k + 1 < t.size() && t[k] < t[k + 1]))
            throw DomainError("outside_chamber", "moment_image_on_a: t is not in the closed chamber a+");
    Weight out = pair.full.zero();
    for (std::size_t k = 0; k < t.size(); ++k) {
        const Weight &g = pair.cascade[k];
        out += (t[k] * t[k] / inner(g, g)) * g;
    }
    return out;
}

} // namespace hds
