#include "hds/rational.hpp"

#include <cctype>
#include <limits>

namespace hds {

std::string to_string(const Rational &q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

static std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

static bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rational_list(std::string_view text, char sep)
{
    std::vector<Rational> out;
    std::string_view rest = trim(text);
    if (rest.empty())
        return out;
    while (true) {
        auto pos = rest.find(sep);
        out.push_back(parse_rational(rest.substr(0, pos)));
        if (pos == std::string_view::npos)
            break;
        rest.remove_prefix(pos + 1);
    }
    return out;
}

bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

std::int64_t to_int64(const Rational &q)
{
    if (!is_integer(q))
        throw DomainError("not_integer", "expected an integer, got " + to_string(q));
    const mpz_class &n = q.get_num();
    if (!n.fits_slong_p())
        throw DomainError("overflow", "integer does not fit in 64 bits: " + to_string(q));
    return n.get_si();
}

Rational floor(const Rational &q)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

} // namespace hds
