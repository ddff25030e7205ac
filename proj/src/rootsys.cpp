#include "hds/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hds {

RootDatum::RootDatum(Ambient ambient, std::size_t dim, std::vector<Weight> positives, Lattice lattice)
    : ambient_(ambient), dim_(dim), lattice_(lattice), positives_(std::move(positives))
{
    std::set<Weight> pos_set;
    for (const auto &a : positives_) {
        if (a.ambient() != ambient_ || a.dim() != dim_)
            throw std::invalid_argument("RootDatum: root " + a.str() + " is not in the ambient space");
        if (a.is_zero())
            throw std::invalid_argument("RootDatum: zero root");
        if (!pos_set.insert(a).second)
            throw std::invalid_argument("RootDatum: repeated root " + a.str());
    }
    for (const auto &a : positives_)
        if (pos_set.count(-a))
            throw std::invalid_argument("RootDatum: positives contain both " + a.str() + " and its negative");
    std::sort(positives_.begin(), positives_.end());
    roots_ = positives_;
    for (const auto &a : positives_)
        roots_.push_back(-a);
    sorted_roots_ = roots_;
    std::sort(sorted_roots_.begin(), sorted_roots_.end());

    for (const auto &a : positives_) {
        bool decomposable = false;
        for (const auto &b : positives_) {
            if (pos_set.count(a - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            simple_.push_back(a);
    }

    Matrix gram(simple_.size(), Vector(simple_.size()));
    for (std::size_t i = 0; i < simple_.size(); ++i)
        for (std::size_t j = 0; j < simple_.size(); ++j)
            gram[i][j] = inner(simple_[i], simple_[j]);
    if (!simple_.empty())
        gram_inverse_ = inverse(gram); // throws when the base is dependent

    for (const auto &a : positives_) {
        Vector c = simple_coordinates(a);
        for (const auto &x : c)
            if (!is_integer(x) || x < 0)
                throw std::invalid_argument("RootDatum: positive root " + a.str() +
                                            " is not a nonnegative integer combination of the base");
    }

    rho_ = hds::rho(ambient_, dim_, positives_);
}

std::uint64_t RootDatum::weyl_order() const
{
    std::call_once(order_->once, [this] {
        order_->value = positives_.empty() ? 1 : weyl_orbit(*this, rho_).size();
    });
    return order_->value;
}

bool RootDatum::is_root(const Weight &v) const
{
    return std::binary_search(sorted_roots_.begin(), sorted_roots_.end(), v);
}

bool RootDatum::in_lattice(const Weight &v) const
{
    if (v.ambient() != ambient_ || v.dim() != dim_)
        return false;
    if (lattice_ == Lattice::Integral)
        return std::all_of(v.coords().begin(), v.coords().end(), [](const Rational &c) { return is_integer(c); });
    for (std::size_t i = 1; i < dim_; ++i)
        if (!is_integer(Rational(v[i] - v[0])))
            return false;
    return true;
}

bool RootDatum::in_root_span(const Weight &v) const
{
    Weight rebuilt = zero();
    if (!simple_.empty()) {
        Vector b(simple_.size());
        for (std::size_t j = 0; j < simple_.size(); ++j)
            b[j] = inner(v, simple_[j]);
        Vector c = multiply(gram_inverse_, b);
        for (std::size_t i = 0; i < simple_.size(); ++i)
            rebuilt += c[i] * simple_[i];
    }
    return rebuilt == v;
}

Vector RootDatum::simple_coordinates(const Weight &v) const
{
    if (simple_.empty()) {
        if (!v.is_zero())
            throw std::invalid_argument("simple_coordinates: " + v.str() + " is not in the root span");
        return {};
    }
    Vector b(simple_.size());
    for (std::size_t j = 0; j < simple_.size(); ++j)
        b[j] = inner(v, simple_[j]);
    Vector c = multiply(gram_inverse_, b);
    Weight rebuilt = zero();
    for (std::size_t i = 0; i < simple_.size(); ++i)
        rebuilt += c[i] * simple_[i];
    if (rebuilt != v)
        throw std::invalid_argument("simple_coordinates: " + v.str() + " is not in the root span");
    return c;
}

Rational RootDatum::height(const Weight &v) const
{
    Rational h = 0;
    for (const auto &c : simple_coordinates(v))
        h += c;
    return h;
}

Weight reflect(const Weight &alpha, const Weight &v)
{
    Rational aa = inner(alpha, alpha);
    if (aa == 0)
        throw std::invalid_argument("reflect: zero root");
    Rational f = 2 * inner(v, alpha) / aa;
    return v - f * alpha;
}

bool is_dominant(std::span<const Weight> positives, const Weight &v)
{
    return std::all_of(positives.begin(), positives.end(), [&](const Weight &a) { return inner(v, a) >= 0; });
}

bool is_dominant(const RootDatum &datum, const Weight &v)
{
    return is_dominant(datum.simple_roots(), v);
}

bool is_regular_dominant(const RootDatum &datum, const Weight &v)
{
    const auto &s = datum.simple_roots();
    return std::all_of(s.begin(), s.end(), [&](const Weight &a) { return inner(v, a) > 0; });
}

SignedWeight dominant_rep(const RootDatum &datum, const Weight &v)
{
    Weight w = v;
    int sign = 1;
    const auto &simple = datum.simple_roots();
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto &a : simple) {
            if (inner(w, a) < 0) {
                w = reflect(a, w);
                sign = -sign;
                moved = true;
            }
        }
    }
    for (const auto &a : simple)
        if (inner(w, a) == 0)
            return {w, 0};
    return {w, sign};
}

std::vector<Weight> weyl_orbit(const RootDatum &datum, const Weight &v)
{
    std::set<Weight> seen{v};
    std::deque<Weight> queue{v};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (const auto &a : datum.simple_roots()) {
            Weight next = reflect(a, cur);
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<SignedWeight> signed_weyl_orbit(const RootDatum &datum, const Weight &v)
{
    for (const auto &a : datum.positives())
        if (inner(v, a) == 0)
            throw std::invalid_argument("signed_weyl_orbit: " + v.str() + " is not regular");
    std::map<Weight, int> seen{{v, 1}};
    std::deque<Weight> queue{v};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        int s = seen[cur];
        for (const auto &a : datum.simple_roots()) {
            Weight next = reflect(a, cur);
            if (seen.emplace(next, -s).second)
                queue.push_back(std::move(next));
        }
    }
    std::vector<SignedWeight> out;
    out.reserve(seen.size());
    for (auto &[w, s] : seen)
        out.push_back({w, s});
    return out;
}

Weight rho(Ambient ambient, std::size_t dim, std::span<const Weight> positives)
{
    Weight r = Weight::zero(ambient, dim);
    for (const auto &a : positives)
        r += a;
    return Rational(1, 2) * r;
}

std::int64_t weyl_dim(const RootDatum &datum, const Weight &lam)
{
    if (!is_dominant(datum, lam))
        throw DomainError("non_dominant", "weyl_dim: " + lam.str() + " is not dominant");
    Weight shifted = lam + datum.rho();
    Rational d = 1;
    for (const auto &a : datum.positives())
        d *= inner(shifted, a) / inner(datum.rho(), a);
    return to_int64(d);
}

WeightMultiset freudenthal(const RootDatum &datum, const Weight &lam)
{
    if (!is_dominant(datum, lam))
        throw DomainError("non_dominant", "freudenthal: " + lam.str() + " is not dominant");
    const Weight &rho = datum.rho();

    // Dominant weights below lam, reached by subtracting positive roots.
    std::set<Weight> dominant{lam};
    std::deque<Weight> queue{lam};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (const auto &a : datum.positives()) {
            Weight next = cur - a;
            if (is_dominant(datum, next) && dominant.insert(next).second)
                queue.push_back(std::move(next));
        }
    }

    std::vector<std::pair<Rational, Weight>> order;
    for (const auto &mu : dominant)
        order.emplace_back(inner(lam - mu, rho), mu);
    std::sort(order.begin(), order.end());

    std::map<Weight, std::int64_t> mult;
    Weight lr = lam + rho;
    Rational top = inner(lr, lr);
    for (const auto &[depth, mu] : order) {
        if (mu == lam) {
            mult[mu] = 1;
            continue;
        }
        Rational num = 0;
        for (const auto &a : datum.positives()) {
            for (long k = 1;; ++k) {
                Weight up = mu + Rational(k) * a;
                Weight dom = dominant_rep(datum, up).weight;
                auto it = mult.find(dom);
                if (it == mult.end())
                    break;
                num += Rational(it->second) * inner(up, a);
            }
        }
        Weight mr = mu + rho;
        Rational den = top - inner(mr, mr);
        mult[mu] = to_int64(Rational(2 * num / den));
    }

    WeightMultiset out;
    for (const auto &[mu, m] : mult) {
        if (m == 0)
            continue;
        for (auto &w : weyl_orbit(datum, mu))
            out.emplace(std::move(w), m);
    }
    return out;
}

KostantPartition::KostantPartition(std::vector<Weight> generators, Weight grading)
    : generators_(std::move(generators)), grading_(std::move(grading))
{
    for (const auto &g : generators_) {
        Rational gr = inner(g, grading_);
        if (gr <= 0)
            throw std::invalid_argument("KostantPartition: generator " + g.str() +
                                        " does not pair positively with the grading " + grading_.str());
        grades_.push_back(gr);
    }
}

std::int64_t KostantPartition::count(const Weight &target)
{
    if (inner(target, grading_) < 0)
        return 0;
    return count_prefix(generators_.size(), target);
}

std::int64_t KostantPartition::count_prefix(std::size_t n, const Weight &target)
{
    if (n == 0)
        return target.is_zero() ? 1 : 0;
    auto key = std::make_pair(n, target);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    std::int64_t total = 0;
    Weight t = target;
    Rational grade = inner(t, grading_);
    while (grade >= 0) {
        total += count_prefix(n - 1, t);
        t -= generators_[n - 1];
        grade -= grades_[n - 1];
    }
    memo_.emplace(std::move(key), total);
    return total;
}

std::int64_t kostant_partition(std::span<const Weight> generators, const Weight &target, const Weight &grading)
{
    KostantPartition kp({generators.begin(), generators.end()}, grading);
    return kp.count(target);
}

RootDatum type_a_datum(std::size_t n)
{
    std::vector<Weight> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pos.push_back(Weight::unit(Ambient::TypeA, n, i) - Weight::unit(Ambient::TypeA, n, j));
    return RootDatum(Ambient::TypeA, n, std::move(pos), Lattice::IntegralModOnes);
}

RootDatum type_c_datum(std::size_t n)
{
    std::vector<Weight> pos;
    auto e = [n](std::size_t i) { return Weight::unit(Ambient::Euclidean, n, i); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pos.push_back(e(i) - e(j));
            pos.push_back(e(i) + e(j));
        }
        pos.push_back(Rational(2) * e(i));
    }
    return RootDatum(Ambient::Euclidean, n, std::move(pos), Lattice::Integral);
}

} // namespace hds
