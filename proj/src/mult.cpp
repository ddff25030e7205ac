#include "hds/mult.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace hds {

std::int64_t RepDecomposition::mult(const Weight &hw) const
{
    auto it = terms.find(hw);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t RepDecomposition::dimension(const RootDatum &datum) const
{
    std::int64_t d = 0;
    for (const auto &[hw, m] : terms)
        d += m * weyl_dim(datum, hw);
    return d;
}

void RepDecomposition::add(const Weight &hw, std::int64_t m)
{
    auto &slot = terms[hw];
    slot += m;
    if (slot == 0)
        terms.erase(hw);
}

RepDecomposition tensor_decompose(const RootDatum &datum, const Weight &lam, const Weight &big)
{
    if (!is_dominant(datum, lam) || !is_dominant(datum, big))
        throw DomainError("non_dominant", "tensor_decompose: inputs must be dominant");
    std::int64_t d1 = weyl_dim(datum, lam), d2 = weyl_dim(datum, big);
    const Weight &small = d1 <= d2 ? lam : big;
    const Weight &other = d1 <= d2 ? big : lam;

    RepDecomposition out;
    Weight shift = other + datum.rho();
    for (const auto &[nu, m] : freudenthal(datum, small)) {
        auto [w, sign] = dominant_rep(datum, nu + shift);
        if (sign != 0)
            out.add(w - datum.rho(), sign * m);
    }
    for (const auto &[hw, m] : out.terms)
        if (m < 0)
            throw std::logic_error("tensor_decompose: negative multiplicity at " + hw.str());
    if (out.dimension(datum) != d1 * d2)
        throw std::logic_error("tensor_decompose: dimension not conserved");
    return out;
}

RepDecomposition schmid_degree(const HermitianPair &pair, int d)
{
    if (d < 0)
        throw DomainError("invalid_argument", "schmid_degree: negative degree");
    auto gens = kirwan_cone(pair);
    RepDecomposition out;
    out.grading.emplace();
    // Partitions of d with parts in 1..r; part k contributes generator k.
    std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t k, int left, Weight acc) {
        if (left == 0) {
            out.terms.emplace(acc, 1);
            out.grading->emplace(acc, Rational(d));
            return;
        }
        if (k == 0)
            return;
        for (int used = 0; used * int(k) <= left; ++used) {
            rec(k - 1, left - used * int(k), acc);
            acc += gens[k - 1];
        }
    };
    rec(gens.size(), d, pair.full.zero());
    return out;
}

WeightMultiset sym_power_character(const HermitianPair &pair, int d)
{
    if (d < 0)
        throw DomainError("invalid_argument", "sym_power_character: negative degree");
    const auto &roots = pair.noncompact_positives;
    WeightMultiset out;
    std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t from, int left, Weight acc) {
        if (left == 0) {
            ++out[acc];
            return;
        }
        for (std::size_t i = from; i < roots.size(); ++i)
            rec(i, left - 1, acc + roots[i]);
    };
    rec(0, d, pair.full.zero());
    return out;
}

RepDecomposition holo_k_types(const HermitianPair &pair, const Weight &big, int d)
{
    RepDecomposition out;
    out.grading.emplace();
    Rational deg = pair.degree(big) + d;
    for (const auto &[nu, m] : schmid_degree(pair, d).terms)
        for (const auto &[hw, k] : tensor_decompose(pair.compact, nu, big).terms) {
            out.add(hw, m * k);
            out.grading->emplace(hw, deg);
        }
    return out;
}

std::int64_t holo_k_mult(const HermitianPair &pair, const Weight &big, const Weight &mu)
{
    if (!is_dominant(pair.compact, big) || !in_c_hol(pair, big))
        throw DomainError("not_in_c_hol", "holo_k_mult: " + big.str() + " is not in C_hol");
    if (!is_dominant(pair.compact, mu))
        throw DomainError("non_dominant", "holo_k_mult: " + mu.str() + " is not dominant");
    Rational d = pair.degree(mu) - pair.degree(big);
    if (d < 0 || !is_integer(d))
        return 0;
    std::int64_t total = 0;
    for (const auto &[nu, m] : schmid_degree(pair, int(to_int64(d))).terms)
        total += m * tensor_decompose(pair.compact, nu, big).mult(mu);
    return total;
}

namespace {

Weight checked_blattner_param(const HermitianPair &pair, const Weight &lam)
{
    if (!condition_hc(pair, lam))
        throw DomainError("condition_1_2", lam.str() + " and its Blattner parameter lie in different chambers");
    return blattner_param(pair, lam);
}

} // namespace

BlattnerCalculator::BlattnerCalculator(const HermitianPair &pair, const Weight &lam)
    : pair_(pair), lam_(lam), big_(checked_blattner_param(pair, lam)),
      pos_(noncompact_positives_of(pair, lam)),
      // lam itself grades R_n^{+,lam} positively, unlike z0 outside C_hol.
      partition_(pos_, lam)
{
}

std::int64_t BlattnerCalculator::mult(const Weight &mu)
{
    if (!is_dominant(pair_.compact, mu))
        throw DomainError("non_dominant", "blattner_mult: " + mu.str() + " is not dominant");
    const Weight &rc = pair_.rho_c;
    std::int64_t total = 0;
    for (const auto &[w, sign] : signed_weyl_orbit(pair_.compact, mu + rc))
        total += sign * partition_.count(w - rc - big_);
    if (total < 0)
        throw std::logic_error("blattner_mult: negative multiplicity at " + mu.str());
    return total;
}

std::int64_t blattner_mult(const HermitianPair &pair, const Weight &lam, const Weight &mu)
{
    BlattnerCalculator calc(pair, lam);
    return calc.mult(mu);
}

std::vector<Weight> asymptotic_support(const HermitianPair &pair)
{
    return kirwan_cone(pair);
}

} // namespace hds

namespace hds {

std::vector<Weight> dominant_weights_in_degree_window(const HermitianPair &pair, const Weight &big, int max_offset)
{
    const std::size_t n = pair.dim();
    const bool type_a = pair.ambient() == Ambient::TypeA;
    const long reach = 2L * max_offset;
    const std::size_t free = type_a ? n - 1 : n;
    std::vector<Weight> out;
    std::vector<long> nu(n, -reach);
    for (;;) {
        std::vector<Rational> c(n);
        long sum = 0;
        for (std::size_t i = 0; i < free; ++i) {
            c[i] = nu[i];
            sum += nu[i];
        }
        if (type_a)
            c[n - 1] = -sum;
        if (!type_a || std::labs(sum) <= reach) {
            Weight mu = big + Weight(pair.ambient(), std::move(c));
            Rational off = pair.degree(mu) - pair.degree(big);
            if (off >= 0 && off <= max_offset && is_dominant(pair.compact, mu))
                out.push_back(std::move(mu));
        }
        std::size_t k = 0;
        while (k < free && nu[k] == reach)
            nu[k++] = -reach;
        if (k == free)
            break;
        ++nu[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hds
