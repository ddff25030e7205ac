#pragma once

#include "hds/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hds {

// Coordinate convention of a weight space.
//   Euclidean: plain R^n.
//   TypeA:     R^n modulo the all-ones vector; stored with coordinate sum 0.
enum class Ambient { Euclidean, TypeA };

std::string to_string(Ambient a);

/// Exact weight in epsilon coordinates. TypeA weights are canonicalized on
/// construction, so operator== is equality modulo the all-ones vector.
class Weight {
public:
    Weight() = default;
    Weight(Ambient ambient, std::vector<Rational> coords);
    Weight(Ambient ambient, std::initializer_list<long> coords);

    static Weight zero(Ambient ambient, std::size_t dim);
    static Weight unit(Ambient ambient, std::size_t dim, std::size_t i);

    Ambient ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational &operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const noexcept { return coords_; }
    bool is_zero() const;

    Weight operator-() const;
    Weight &operator+=(const Weight &o);
    Weight &operator-=(const Weight &o);
    Weight &operator*=(const Rational &s);

    friend Weight operator+(Weight a, const Weight &b) { return a += b; }
    friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
    friend Weight operator*(const Rational &s, Weight a) { return a *= s; }
    friend Weight operator*(Weight a, const Rational &s) { return a *= s; }

    friend bool operator==(const Weight &a, const Weight &b);
    friend bool operator!=(const Weight &a, const Weight &b) { return !(a == b); }
    // Lexicographic; only meaningful between weights of the same space.
    friend bool operator<(const Weight &a, const Weight &b);

    std::string str() const;

private:
    void check_compatible(const Weight &o) const;
    void canonicalize();

    Ambient ambient_ = Ambient::Euclidean;
    std::vector<Rational> coords_;
};

std::ostream &operator<<(std::ostream &os, const Weight &w);

/// Euclidean dot product; throws std::invalid_argument on ambient mismatch.
Rational inner(const Weight &u, const Weight &v);

// Integer-valued up to sign. Multiplies by the lcm of denominators and
// divides by the gcd of numerators; zero stays zero.
Weight primitive(const Weight &v);

} // namespace hds
