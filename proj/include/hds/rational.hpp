#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hds {

using Rational = mpq_class;

/// Raised for inputs that are well-formed but mathematically outside an
/// operation's domain (non-dominant weight, wall, failed condition, ...).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string &message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string &kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Canonical form "num/den" with den > 0 and gcd 1; integers as "n".
std::string to_string(const Rational &q);

// Accepts "n" or "n/d" (d != 0), optional leading sign, surrounding blanks.
Rational parse_rational(std::string_view text);

std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

bool is_integer(const Rational &q);

// Throws DomainError when q is not an integer or does not fit in 64 bits.
std::int64_t to_int64(const Rational &q);

Rational floor(const Rational &q);

} // namespace hds
