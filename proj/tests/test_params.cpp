#include "hds/params.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hds;
using oracle::A;
using oracle::E;

namespace {

HermitianPair su(int p, int q)
{
    return build_pair({Family::SU, p, q, 0});
}

HermitianPair sp(int n)
{
    return build_pair({Family::Sp, 0, 0, n});
}

Weight half(std::initializer_list<long> c, Ambient amb = Ambient::Euclidean)
{
    return Rational(1, 2) * Weight(amb, c);
}

// Closed under addition inside the root system.
bool closed(const HermitianPair &pair, const std::vector<Weight> &positives)
{
    std::set<Weight> s(positives.begin(), positives.end());
    for (const auto &a : positives)
        for (const auto &b : positives)
            if (pair.full.is_root(a + b) && !s.count(a + b))
                return false;
    return true;
}

} // namespace

TEST_CASE("chambers: counts")
{
    CHECK(chambers(sp(2)).size() == 4);
    CHECK(chambers(su(1, 1)).size() == 2);
    CHECK(chambers(su(2, 1)).size() == 3);
    // |W| / |W_K| in general.
    for (const auto &pair : {su(2, 2), su(3, 2), su(1, 4), sp(3)}) {
        CAPTURE(pair.name());
        CHECK(chambers(pair).size() == pair.full.weyl_order() / pair.compact.weyl_order());
    }
}

TEST_CASE("chambers: positive systems, holomorphic first")
{
    for (const auto &pair : {su(1, 1), su(2, 1), su(3, 2), sp(2), sp(3)}) {
        CAPTURE(pair.name());
        auto cs = chambers(pair);
        CHECK(cs[0].noncompact_positives == pair.noncompact_positives);
        int holo = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(cs[i].id == int(i));
            if (i >= 2)
                CHECK(cs[i - 1].rho_n < cs[i].rho_n);
            std::vector<Weight> all = pair.compact_positives;
            all.insert(all.end(), cs[i].noncompact_positives.begin(), cs[i].noncompact_positives.end());
            CHECK(all.size() == pair.full.positives().size());
            CHECK(closed(pair, all));
            holo += cs[i].noncompact_positives == pair.noncompact_positives;
            CHECK(rho_n_of(pair, cs[i]) == cs[i].rho_n);
        }
        CHECK(holo == 1);
    }
}

TEST_CASE("property: chambers partition the regular strongly elliptic weights")
{
    for (const auto &pair : {sp(2), su(2, 1), su(2, 2)}) {
        CAPTURE(pair.name());
        auto cs = chambers(pair);
        std::mt19937 rng(3);
        int tested = 0;
        for (int k = 0; k < 400; ++k) {
            Weight v = oracle::random_weight(rng, pair.ambient(), pair.dim(), 12, 3);
            v = dominant_rep(pair.compact, v).weight;
            bool regular = true;
            for (const auto &a : pair.full.roots())
                regular = regular && inner(a, v) != 0;
            if (!regular)
                continue;
            ++tested;
            int hits = 0;
            for (const auto &c : cs) {
                bool inside = true;
                for (const auto &b : c.noncompact_positives)
                    inside = inside && inner(b, v) > 0;
                hits += inside;
            }
            CHECK(hits == 1);
            CHECK(chamber_of(pair, v).noncompact_positives == noncompact_positives_of(pair, v));
        }
        CHECK(tested > 100);
    }
}

TEST_CASE("rho_n of named chambers")
{
    auto p4 = sp(4);
    CHECK(rho_n_lambda(p4, E({5, 3, 1, -2})) == half({5, 5, 3, -1}));
    auto p32 = su(3, 2);
    // C1 = {l1 >= l2 > l4 > l3 > l5}, C2 = {l1 > l4 > l2 > l5 > l3}.
    CHECK(rho_n_lambda(p32, A({3, 1, -1, 0, -3})) == Weight(Ambient::TypeA, {1, 1, 0, Rational(-1, 2), Rational(-3, 2)}));
    CHECK(rho_n_lambda(p32, A({4, 1, -4, 2, -3})) == p32.rho_c);
    auto p2 = sp(2);
    CHECK(rho_n_lambda(p2, E({2, 1})) == p2.rho_n);
    CHECK_THROWS_AS(rho_n_lambda(p2, E({1, -1})), DomainError);
}

TEST_CASE("in_ghat_d")
{
    auto p1 = sp(1);
    CHECK(in_ghat_d(p1, E({3})));
    CHECK_FALSE(in_ghat_d(p1, E({0})));
    CHECK_FALSE(in_ghat_d(p1, Weight(Ambient::Euclidean, {Rational(1, 2)})));
    CHECK_FALSE(in_ghat_d(sp(2), E({1, 1})));
    CHECK(in_ghat_d(sp(4), E({5, 3, 1, -2})));
    CHECK(in_ghat_d(su(3, 2), A({3, 1, -1, 0, -3})));
    // SU(1,1): rho = (1/2,-1/2) is itself a weight, so lam must be integral.
    CHECK(in_ghat_d(su(1, 1), A({1, 0})));
    CHECK_FALSE(in_ghat_d(su(1, 1), Weight(Ambient::TypeA, {Rational(1, 4), Rational(-1, 4)})));
}

TEST_CASE("blattner_param")
{
    CHECK(blattner_param(sp(4), E({5, 3, 1, -2})) == E({6, 5, 3, -1}));
    CHECK(blattner_param(su(3, 2), A({3, 1, -1, 0, -3})) == A({3, 2, 0, -1, -4}));
    CHECK(blattner_param(sp(1), E({3})) == E({4}));
    CHECK_THROWS_AS(blattner_param(sp(2), E({1, 1})), DomainError);
}

TEST_CASE("condition_hc")
{
    CHECK_FALSE(condition_hc(sp(4), E({5, 3, 1, -2})));
    CHECK_FALSE(condition_hc(su(3, 2), A({3, 1, -1, 0, -3})));
    for (const auto &pair : {sp(2), su(2, 1), su(2, 2), su(3, 2)})
        for (const auto &lam : hc_params_in_box(pair, 3))
            if (in_c_hol(pair, lam))
                CHECK(condition_hc(pair, lam));
}

TEST_CASE("hc_from_blattner")
{
    CHECK(hc_from_blattner(sp(1), E({4})) == E({3}));
    CHECK(hc_from_blattner(sp(2), E({3, 3})) == E({2, 1}));
    CHECK_THROWS_AS(hc_from_blattner(sp(2), E({3, 2})), DomainError);
    for (const auto &pair : {sp(1), sp(2), su(1, 1), su(2, 1), su(2, 3)})
        for (const auto &lam : hc_params_in_box(pair, 4))
            if (in_c_hol(pair, lam)) {
                Weight big = blattner_param(pair, lam);
                CHECK(hc_from_blattner(pair, big) == lam);
                CHECK(pair.full.in_lattice(lam + pair.rho_n + pair.rho_c));
            }
}

TEST_CASE("Lambda(lam) is a constant shift per chamber")
{
    for (const auto &pair : {sp(2), su(2, 1), su(3, 2)}) {
        std::map<std::vector<Weight>, Weight> shift;
        for (const auto &lam : hc_params_in_box(pair, 4)) {
            auto key = noncompact_positives_of(pair, lam);
            Weight s = blattner_param(pair, lam) - lam;
            auto [it, fresh] = shift.emplace(key, s);
            CHECK(it->second == s);
            // condition (1.2) <=> Lambda keeps lam's strict noncompact signs.
            bool same = true;
            for (const auto &b : key)
                same = same && inner(b, blattner_param(pair, lam)) > 0;
            CHECK(condition_hc(pair, lam) == same);
        }
    }
}

TEST_CASE("Sp(2,R): condition holds on every Harish-Chandra parameter with |coords| <= 10")
{
    auto pair = sp(2);
    auto params = hc_params_in_box(pair, 10);
    CHECK(params.size() > 50);
    for (const auto &lam : params)
        CHECK(condition_hc(pair, lam));
    // -rho_c + rho_n(C_i) lies in the closure of C_i for the two middle chambers.
    for (const auto &sample : {E({2, -1}), E({1, -2})}) {
        Weight s = rho_n_lambda(pair, sample) - pair.rho_c;
        CHECK(is_dominant(pair.compact, s));
        for (const auto &b : noncompact_positives_of(pair, sample))
            CHECK(inner(b, s) >= 0);
    }
    CHECK(rho_n_lambda(pair, E({2, -1})) - pair.rho_c == E({1, 0}));
    CHECK(rho_n_lambda(pair, E({1, -2})) - pair.rho_c == E({0, -1}));
}

TEST_CASE("hc_params_in_box agrees with a naive filter")
{
    auto pair = sp(2);
    std::set<Weight> naive;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            Weight w = E({a, b});
            if (in_ghat_d(pair, w))
                naive.insert(w);
        }
    auto got = hc_params_in_box(pair, 4);
    CHECK(std::set<Weight>(got.begin(), got.end()) == naive);

    auto p21 = su(2, 1);
    std::set<Weight> naive_a;
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            for (int t = 0; t < 3; ++t) {
                Weight w = Weight(Ambient::TypeA, {a, b, 0}) + Weight(Ambient::TypeA, {Rational(t, 3), 0, 0});
                bool inside = true;
                for (const auto &c : w.coords())
                    inside = inside && abs(c) <= 3;
                if (inside && in_ghat_d(p21, w))
                    naive_a.insert(w);
            }
    auto got_a = hc_params_in_box(p21, 3);
    CHECK(std::set<Weight>(got_a.begin(), got_a.end()) == naive_a);
}
