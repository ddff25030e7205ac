#include "hds/rootsys.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hds;
using oracle::A;
using oracle::E;

namespace {

RootDatum a1()
{
    return RootDatum(Ambient::Euclidean, 2, {E({1, -1})}, Lattice::Integral);
}

// Datum of the compact part of SU(3,2): S(U(3) x U(2)).
RootDatum su32_compact()
{
    return RootDatum(Ambient::TypeA, 5, {A({1, -1, 0, 0, 0}), A({1, 0, -1, 0, 0}), A({0, 1, -1, 0, 0}), A({0, 0, 0, 1, -1})},
                     Lattice::IntegralModOnes);
}

std::int64_t factorial(int n)
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

TEST_CASE("inner product")
{
    CHECK(inner(E({1, 0}), E({1, 0})) == 1);
    CHECK(inner(E({1, -1}), E({1, 1})) == 0);
    CHECK(inner(A({1, 0, 0, 0, -1}), A({0, 1, 0, -1, 0})) == 0);
    CHECK_THROWS_AS(inner(E({1, 0}), A({1, 0})), std::invalid_argument);
}

TEST_CASE("type A weights are equal modulo the all-ones vector")
{
    CHECK(A({2, 1, 0}) == A({1, 0, -1}));
    CHECK(A({1, 0})[0] == Rational(1, 2));
    CHECK(E({2, 1, 0}) != E({1, 0, -1}));
}

TEST_CASE("reflect")
{
    CHECK(reflect(E({1, -1}), E({1, 0})) == E({0, 1}));
    CHECK(reflect(E({1, -1}), E({1, -1})) == E({-1, 1}));
    CHECK(reflect(E({0, 2}), E({3, 1})) == E({3, -1}));
    CHECK_THROWS(reflect(E({0, 0}), E({3, 1})));
}

TEST_CASE("is_dominant")
{
    CHECK(is_dominant(a1(), E({1, 0})));
    std::vector<Weight> pos{E({1, -1})};
    CHECK_FALSE(is_dominant(pos, E({1, 2})));
    CHECK(is_dominant(su32_compact(), A({3, 1, -1, 0, -3})));
}

TEST_CASE("dominant_rep")
{
    auto r = dominant_rep(a1(), E({0, 1}));
    CHECK(r.weight == E({1, 0}));
    CHECK(r.sign == -1);
    r = dominant_rep(a1(), E({2, 1}));
    CHECK(r.weight == E({2, 1}));
    CHECK(r.sign == 1);
    CHECK(dominant_rep(a1(), E({1, 1})).sign == 0);
}

TEST_CASE("weyl_orbit")
{
    CHECK(weyl_orbit(a1(), E({1, 0})) == std::vector<Weight>{E({0, 1}), E({1, 0})});
    CHECK(weyl_orbit(type_a_datum(3), A({1, 0, -1})).size() == 6);
    CHECK(weyl_orbit(type_a_datum(3), A({0, 0, 0})).size() == 1);
}

TEST_CASE("weyl_order matches the classical formulas")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(type_a_datum(n).weyl_order() == std::uint64_t(factorial(n)));
        CHECK(type_c_datum(n).weyl_order() == std::uint64_t(factorial(n) << n));
    }
}

TEST_CASE("rho")
{
    auto c4 = RootDatum(Ambient::Euclidean, 4,
                        {E({1, -1, 0, 0}), E({1, 0, -1, 0}), E({1, 0, 0, -1}), E({0, 1, -1, 0}), E({0, 1, 0, -1}), E({0, 0, 1, -1})},
                        Lattice::Integral);
    CHECK(c4.rho() == Weight(Ambient::Euclidean, {Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)}));
    CHECK(su32_compact().rho() == Weight(Ambient::TypeA, {1, 0, -1, Rational(1, 2), Rational(-1, 2)}));
    CHECK(rho(Ambient::Euclidean, 3, {}).is_zero());
}

TEST_CASE("base of a positive system")
{
    auto c2 = type_c_datum(2);
    std::set<Weight> simple(c2.simple_roots().begin(), c2.simple_roots().end());
    CHECK(simple == std::set<Weight>{E({1, -1}), E({0, 2})});
    CHECK(c2.height(E({2, 0})) == 3);
    CHECK_THROWS(RootDatum(Ambient::Euclidean, 2, {E({1, -1}), E({-1, 1})}, Lattice::Integral));
}

TEST_CASE("weyl_dim")
{
    CHECK(weyl_dim(type_a_datum(3), A({0, 0, 0})) == 1);
    CHECK(weyl_dim(type_a_datum(3), A({1, 0, -1})) == 8);
    for (int n = 0; n <= 6; ++n)
        CHECK(weyl_dim(type_a_datum(2), A({n, 0})) == n + 1);
    CHECK_THROWS_AS(weyl_dim(type_a_datum(2), A({0, 1})), DomainError);
}

TEST_CASE("freudenthal examples")
{
    auto triv = freudenthal(type_a_datum(3), A({0, 0, 0}));
    CHECK(triv == WeightMultiset{{A({0, 0, 0}), 1}});

    // Adjoint of sl3: every root once, the Cartan subalgebra twice.
    auto a2 = type_a_datum(3);
    WeightMultiset adjoint{{A({0, 0, 0}), 2}};
    for (const auto &r : a2.roots())
        adjoint[r] = 1;
    CHECK(freudenthal(a2, A({1, 0, -1})) == adjoint);

    auto sl2 = freudenthal(type_a_datum(2), A({2, 0}));
    CHECK(sl2 == WeightMultiset{{A({2, 0}), 1}, {A({1, 1}), 1}, {A({0, 2}), 1}});
    CHECK_THROWS_AS(freudenthal(type_a_datum(2), A({0, 2})), DomainError);
}

TEST_CASE("freudenthal agrees with Kostka numbers in type A")
{
    std::vector<std::vector<int>> shapes{{2, 1, 0}, {3, 1, 0}, {2, 2, 0}, {3, 2, 1}, {2, 1, 1, 0}, {3, 1, 0, 0}, {2, 2, 1, 0}};
    for (const auto &shape : shapes) {
        const std::size_t n = shape.size();
        std::vector<Rational> c(shape.begin(), shape.end());
        auto mults = freudenthal(type_a_datum(n), Weight(Ambient::TypeA, c));
        int total = std::accumulate(shape.begin(), shape.end(), 0);
        // Every content vector of the right size.
        std::vector<int> content(n, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == n) {
                content[i] = left;
                std::vector<Rational> w(content.begin(), content.end());
                Weight mu(Ambient::TypeA, w);
                auto it = mults.find(mu);
                std::int64_t got = it == mults.end() ? 0 : it->second;
                CHECK(got == oracle::kostka(shape, content));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                content[i] = x;
                rec(i + 1, left - x);
            }
        };
        rec(0, total);
    }
}

TEST_CASE("property: reflection is an involution (1000 cases)")
{
    std::mt19937 rng(20240611);
    std::vector<RootDatum> data{type_a_datum(3), type_a_datum(4), type_c_datum(2), type_c_datum(3)};
    for (int k = 0; k < 1000; ++k) {
        const auto &d = data[k % data.size()];
        const auto &roots = d.roots();
        const Weight &a = roots[rng() % roots.size()];
        Weight v = oracle::random_weight(rng, d.ambient(), d.dim(), 9, 5);
        CHECK(reflect(a, reflect(a, v)) == v);
        CHECK(inner(reflect(a, v), a) == -inner(v, a));
    }
}

TEST_CASE("property: dominant_rep lands in the chamber with the right parity")
{
    std::mt19937 rng(7);
    auto d = type_c_datum(3);
    for (int k = 0; k < 200; ++k) {
        Weight v = oracle::random_weight(rng, d.ambient(), d.dim(), 6, 1);
        auto r = dominant_rep(d, v);
        CHECK(is_dominant(d, r.weight));
        const Weight &s = d.simple_roots()[k % d.simple_roots().size()];
        auto r2 = dominant_rep(d, reflect(s, v));
        CHECK(r2.weight == r.weight);
        CHECK(r2.sign == -r.sign);
    }
}

TEST_CASE("property: Freudenthal multiplicities sum to the Weyl dimension (25 instances)")
{
    std::mt19937 rng(1234);
    std::vector<RootDatum> data{type_a_datum(2), type_a_datum(3), type_a_datum(4), type_a_datum(5),
                                type_c_datum(2), type_c_datum(3), type_c_datum(4)};
    for (int k = 0; k < 25; ++k) {
        const auto &d = data[k % data.size()];
        // Random dominant weight: nonnegative combination of fundamental directions.
        std::vector<Rational> c(d.dim());
        std::uniform_int_distribution<int> step(0, d.dim() >= 4 ? 2 : 3);
        long acc = 0;
        for (std::size_t i = d.dim(); i-- > 0;) {
            acc += step(rng);
            c[i] = std::min<long>(acc, 6);
        }
        Weight lam(d.ambient(), c);
        REQUIRE(is_dominant(d, lam));
        auto m = freudenthal(d, lam);
        std::int64_t total = 0;
        for (const auto &[w, k2] : m)
            total += k2;
        CHECK(total == weyl_dim(d, lam));
        for (const auto &s : d.simple_roots())
            for (const auto &[w, k2] : m) {
                auto it = m.find(reflect(s, w));
                REQUIRE(it != m.end());
                CHECK(it->second == k2);
            }
    }
}

TEST_CASE("kostant_partition examples")
{
    Weight b = E({1, 0});
    std::vector<Weight> one{b};
    CHECK(kostant_partition(one, E({3, 0}), b) == 1);
    CHECK(kostant_partition(one, Weight(Ambient::Euclidean, {Rational(1, 2), 0}), b) == 0);
    std::vector<Weight> three{E({1, 0}), E({0, 1}), E({1, 1})};
    CHECK(kostant_partition(three, E({1, 1}), E({1, 1})) == 2);
    CHECK(kostant_partition(three, E({0, 0}), E({1, 1})) == 1);
    CHECK(kostant_partition(three, E({-1, 0}), E({1, 1})) == 0);
    CHECK_THROWS(KostantPartition(three, E({1, -1})));
}

TEST_CASE("property: kostant_partition equals brute force (rank <= 3, degree <= 6)")
{
    struct Instance {
        std::vector<Weight> gens;
        Weight grading;
    };
    std::vector<Instance> cases{
        {{A({1, -1, 0}), A({0, 1, -1}), A({1, 0, -1})}, A({1, 0, -1})},
        {{E({2, 0}), E({1, 1}), E({0, 2})}, E({1, 1})},
        {{E({2, 0}), E({0, -2}), E({1, 1})}, E({2, -1})},
        {{E({2, 0, 0}), E({1, 1, 0}), E({0, 2, 0}), E({1, 0, 1}), E({0, 1, 1}), E({0, 0, 2})}, E({1, 1, 1})},
        {{A({1, 0, 0, -1}), A({1, 0, -1, 0}), A({0, 1, 0, -1}), A({0, 1, -1, 0})}, A({1, 1, -1, -1})},
    };
    for (const auto &inst : cases) {
        KostantPartition kp(inst.gens, inst.grading);
        // Targets: all sums of at most 6 generators, plus a few unreachable shifts.
        std::set<Weight> targets{Weight::zero(inst.grading.ambient(), inst.grading.dim())};
        std::set<Weight> layer = targets;
        for (int d = 1; d <= 6; ++d) {
            std::set<Weight> next;
            for (const auto &t : layer)
                for (const auto &g : inst.gens)
                    next.insert(t + g);
            targets.insert(next.begin(), next.end());
            layer = std::move(next);
        }
        std::set<Weight> all = targets;
        for (const auto &t : targets)
            all.insert(t - inst.gens[0] - inst.gens.back());
        for (const auto &t : all) {
            // n_i (g_i, grading) <= (t, grading) bounds every coefficient.
            std::vector<int> caps;
            for (const auto &g : inst.gens)
                caps.push_back(std::max<int>(0, int(to_int64(floor(Rational(inner(t, inst.grading) / inner(g, inst.grading)))))));
            CHECK(kp.count(t) == oracle::partitions_brute(inst.gens, t, caps));
        }
    }
}
