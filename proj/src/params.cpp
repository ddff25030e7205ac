#include "hds/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace hds {

std::vector<Chamber> chambers(const HermitianPair &pair)
{
    // Each regular orbit point of rho in the closed K-chamber cuts out one
    // positive system containing R_c^+.
    std::vector<Chamber> out;
    for (const auto &v : weyl_orbit(pair.full, pair.full.rho())) {
        if (!is_dominant(pair.compact, v))
            continue;
        Chamber c;
        for (const auto &b : pair.noncompact_roots)
            if (inner(b, v) > 0)
                c.noncompact_positives.push_back(b);
        std::sort(c.noncompact_positives.begin(), c.noncompact_positives.end());
        c.rho_n = rho(pair.ambient(), pair.dim(), c.noncompact_positives);
        out.push_back(std::move(c));
    }
    auto is_hol = [&](const Chamber &c) { return c.noncompact_positives == pair.noncompact_positives; };
    std::sort(out.begin(), out.end(), [&](const Chamber &a, const Chamber &b) {
        if (is_hol(a) != is_hol(b))
            return is_hol(a);
        return a.rho_n < b.rho_n;
    });
    if (out.empty() || !is_hol(out.front()))
        throw std::logic_error("chambers: holomorphic chamber missing");
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].id = int(i);
    return out;
}

Weight rho_n_of(const HermitianPair &pair, const Chamber &chamber)
{
    return rho(pair.ambient(), pair.dim(), chamber.noncompact_positives);
}

bool in_ghat_d(const HermitianPair &pair, const Weight &lam)
{
    if (lam.ambient() != pair.ambient() || lam.dim() != pair.dim())
        return false;
    if (!is_dominant(pair.compact, lam))
        return false;
    for (const auto &a : pair.full.positives())
        if (inner(lam, a) == 0)
            return false;
    return pair.full.in_lattice(lam - pair.full.rho());
}

std::vector<Weight> noncompact_positives_of(const HermitianPair &pair, const Weight &lam)
{
    std::vector<Weight> out;
    for (const auto &b : pair.noncompact_roots) {
        Rational s = inner(b, lam);
        if (s == 0)
            throw DomainError("noncompact_wall", lam.str() + " lies on the wall of the noncompact root " + b.str());
        if (s > 0)
            out.push_back(b);
    }
    return out;
}

Chamber chamber_of(const HermitianPair &pair, const Weight &lam)
{
    if (!is_dominant(pair.compact, lam))
        throw DomainError("non_dominant", lam.str() + " is not dominant for K");
    auto pos = noncompact_positives_of(pair, lam);
    for (auto &c : chambers(pair))
        if (c.noncompact_positives == pos)
            return c;
    throw DomainError("compact_wall", lam.str() + " lies on a compact wall");
}

Weight rho_n_lambda(const HermitianPair &pair, const Weight &lam)
{
    return rho(pair.ambient(), pair.dim(), noncompact_positives_of(pair, lam));
}

Weight blattner_param(const HermitianPair &pair, const Weight &lam)
{
    if (!in_ghat_d(pair, lam))
        throw DomainError("not_in_ghat_d", lam.str() + " is not a Harish-Chandra parameter of " + pair.name());
    Weight out = lam - pair.rho_c + rho_n_lambda(pair, lam);
    if (!is_dominant(pair.compact, out))
        throw std::logic_error("blattner_param: result " + out.str() + " is not K-dominant");
    return out;
}

bool condition_hc(const HermitianPair &pair, const Weight &lam)
{
    Weight big = blattner_param(pair, lam);
    return std::all_of(pair.noncompact_roots.begin(), pair.noncompact_roots.end(),
                       [&](const Weight &b) { return inner(b, lam) * inner(b, big) > 0; });
}

Weight hc_from_blattner(const HermitianPair &pair, const Weight &lam)
{
    if (!in_c_hol_geq(pair, lam))
        throw DomainError("not_in_c_hol_geq", lam.str() + " violates (Lambda - 2 rho_n, beta_min) >= 0");
    return lam + pair.rho_c - pair.rho_n;
}

} // namespace hds

namespace hds {

std::vector<Weight> hc_params_in_box(const HermitianPair &pair, long bound)
{
    const std::size_t n = pair.dim();
    const bool type_a = pair.ambient() == Ambient::TypeA;
    const Weight &rho_full = pair.full.rho();
    // lam - rho is integral; in type A up to a common shift s with n s in Z
    // (the sum-zero representative), and the last coordinate is implied.
    const std::size_t free = type_a ? n - 1 : n;
    const long shifts = type_a ? long(n) : 1;

    std::vector<Weight> out;
    for (long t = 0; t < shifts; ++t) {
        Rational s(t, shifts);
        std::vector<Rational> lo(free);
        std::vector<long> span(free);
        for (std::size_t i = 0; i < free; ++i) {
            Rational base = rho_full[i] + s;
            // smallest base + k >= -bound
            Rational k0 = -floor(Rational(base + bound));
            lo[i] = base + k0;
            span[i] = to_int64(floor(Rational(bound - lo[i])));
        }
        if (std::any_of(span.begin(), span.end(), [](long x) { return x < 0; }))
            continue;
        std::vector<long> k(free, 0);
        for (;;) {
            std::vector<Rational> c(n);
            Rational sum = 0;
            for (std::size_t i = 0; i < free; ++i) {
                c[i] = lo[i] + k[i];
                sum += c[i];
            }
            if (type_a)
                c[n - 1] = -sum;
            if (abs(c[n - 1]) <= bound) {
                Weight lam(pair.ambient(), std::move(c));
                if (in_ghat_d(pair, lam))
                    out.push_back(std::move(lam));
            }
            std::size_t i = 0;
            while (i < free && k[i] == span[i])
                k[i++] = 0;
            if (i == free)
                break;
            ++k[i];
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hds
