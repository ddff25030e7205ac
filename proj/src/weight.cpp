#include "hds/weight.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hds {

std::string to_string(Ambient a)
{
    return a == Ambient::TypeA ? "typeA" : "euclidean";
}

Weight::Weight(Ambient ambient, std::vector<Rational> coords)
    : ambient_(ambient), coords_(std::move(coords))
{
    canonicalize();
}

Weight::Weight(Ambient ambient, std::initializer_list<long> coords) : ambient_(ambient)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
    canonicalize();
}

Weight Weight::zero(Ambient ambient, std::size_t dim)
{
    return Weight(ambient, std::vector<Rational>(dim));
}

Weight Weight::unit(Ambient ambient, std::size_t dim, std::size_t i)
{
    std::vector<Rational> c(dim);
    c.at(i) = 1;
    return Weight(ambient, std::move(c));
}

void Weight::canonicalize()
{
    for (auto &c : coords_)
        c.canonicalize();
    if (ambient_ != Ambient::TypeA || coords_.empty())
        return;
    Rational mean = 0;
    for (const auto &c : coords_)
        mean += c;
    if (mean == 0)
        return;
    mean /= static_cast<long>(coords_.size());
    for (auto &c : coords_)
        c -= mean;
}

bool Weight::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational &c) { return c == 0; });
}

void Weight::check_compatible(const Weight &o) const
{
    if (ambient_ != o.ambient_ || coords_.size() != o.coords_.size())
        throw std::invalid_argument("weight space mismatch: " + str() + " vs " + o.str());
}

Weight Weight::operator-() const
{
    Weight w = *this;
    for (auto &c : w.coords_)
        c = -c;
    return w;
}

Weight &Weight::operator+=(const Weight &o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

Weight &Weight::operator-=(const Weight &o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

Weight &Weight::operator*=(const Rational &s)
{
    for (auto &c : coords_)
        c *= s;
    return *this;
}

bool operator==(const Weight &a, const Weight &b)
{
    return a.ambient_ == b.ambient_ && a.coords_ == b.coords_;
}

bool operator<(const Weight &a, const Weight &b)
{
    if (a.ambient_ != b.ambient_)
        return a.ambient_ < b.ambient_;
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
}

std::string Weight::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            os << ',';
        os << to_string(coords_[i]);
    }
    os << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Weight &w)
{
    return os << w.str();
}

Rational inner(const Weight &u, const Weight &v)
{
    if (u.ambient() != v.ambient() || u.dim() != v.dim())
        throw std::invalid_argument("inner: weight space mismatch: " + u.str() + " vs " + v.str());
    Rational s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        s += u[i] * v[i];
    return s;
}

Weight primitive(const Weight &v)
{
    if (v.is_zero())
        return v;
    mpz_class l = 1, g = 0;
    for (const auto &c : v.coords())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> scaled;
    for (const auto &c : v.coords()) {
        Rational s = c * Rational(l);
        scaled.push_back(s);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    for (auto &s : scaled)
        s /= Rational(g);
    return Weight(v.ambient(), std::move(scaled));
}

} // namespace hds
