#include "hds/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hds {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m, std::size_t num_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < num_cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Rational piv = m[row][col];
        for (auto &x : m[row])
            x /= piv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix a)
{
    if (a.empty())
        return 0;
    return row_reduce(a, a.front().size()).size();
}

std::optional<Vector> solve_linear(Matrix a, Vector b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_linear: row count mismatch");
    std::size_t n = a.empty() ? 0 : a.front().size();
    for (std::size_t r = 0; r < a.size(); ++r)
        a[r].push_back(b[r]);
    auto pivots = row_reduce(a, n);
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (a[r][n] != 0)
            return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = a[r][n];
    return x;
}

Matrix inverse(const Matrix &a)
{
    std::size_t n = a.size();
    Matrix aug = a;
    for (std::size_t r = 0; r < n; ++r) {
        if (aug[r].size() != n)
            throw std::invalid_argument("inverse: matrix is not square");
        aug[r].resize(2 * n);
        aug[r][n + r] = 1;
    }
    if (row_reduce(aug, n).size() != n)
        throw std::invalid_argument("inverse: matrix is singular");
    Matrix inv(n, Vector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv[r][c] = aug[r][n + c];
    return inv;
}

Vector multiply(const Matrix &a, const Vector &x)
{
    Vector y(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != x.size())
            throw std::invalid_argument("multiply: dimension mismatch");
        for (std::size_t c = 0; c < x.size(); ++c)
            y[r] += a[r][c] * x[c];
    }
    return y;
}

namespace {

// coeffs . x >= rhs
struct Row {
    Vector coeffs;
    Rational rhs;
    bool operator<(const Row &o) const
    {
        if (coeffs != o.coeffs)
            return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(),
                                                o.coeffs.end());
        return rhs < o.rhs;
    }
};

// Scale by the absolute value of the first nonzero coefficient.
Row normalized(Row r)
{
    for (const auto &c : r.coeffs) {
        if (c != 0) {
            Rational s = abs(c);
            for (auto &x : r.coeffs)
                x /= s;
            r.rhs /= s;
            break;
        }
    }
    return r;
}

bool all_zero(const Vector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &c) { return c == 0; });
}

} // namespace

std::optional<Vector> find_feasible_point(std::size_t num_vars, std::vector<LinearConstraint> constraints)
{
    std::set<Row> current;
    auto add = [&current](Row r) -> bool {
        if (all_zero(r.coeffs))
            return r.rhs <= 0;
        current.insert(normalized(std::move(r)));
        return true;
    };
    for (auto &c : constraints) {
        if (c.coeffs.size() != num_vars)
            throw std::invalid_argument("find_feasible_point: constraint arity mismatch");
        if (!add(Row{c.coeffs, c.rhs}))
            return std::nullopt;
        if (c.is_equality) {
            Vector neg = c.coeffs;
            for (auto &x : neg)
                x = -x;
            if (!add(Row{neg, -c.rhs}))
                return std::nullopt;
        }
    }

    // stages[k] holds the system in variables 0..k-1 (k = num_vars .. 0).
    std::vector<std::set<Row>> stages(num_vars + 1);
    stages[num_vars] = current;
    for (std::size_t k = num_vars; k-- > 0;) {
        std::vector<Row> lower, upper;
        std::set<Row> next;
        for (const Row &r : stages[k + 1]) {
            if (r.coeffs[k] > 0)
                lower.push_back(r);
            else if (r.coeffs[k] < 0)
                upper.push_back(r);
            else
                next.insert(r);
        }
        for (const Row &lo : lower) {
            for (const Row &up : upper) {
                Rational a = lo.coeffs[k], b = -up.coeffs[k];
                Row comb{Vector(num_vars), b * lo.rhs + a * up.rhs};
                for (std::size_t j = 0; j < num_vars; ++j)
                    comb.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
                comb.coeffs[k] = 0;
                if (all_zero(comb.coeffs)) {
                    if (comb.rhs > 0)
                        return std::nullopt;
                    continue;
                }
                next.insert(normalized(std::move(comb)));
            }
        }
        stages[k] = std::move(next);
    }

    Vector x(num_vars);
    for (std::size_t k = 0; k < num_vars; ++k) {
        std::optional<Rational> lo, hi;
        for (const Row &r : stages[k + 1]) {
            if (r.coeffs[k] == 0)
                continue;
            Rational rest = r.rhs;
            for (std::size_t j = 0; j < k; ++j)
                rest -= r.coeffs[j] * x[j];
            Rational bound = rest / r.coeffs[k];
            if (r.coeffs[k] > 0) {
                if (!lo || bound > *lo)
                    lo = bound;
            } else {
                if (!hi || bound < *hi)
                    hi = bound;
            }
        }
        if (lo && hi && *lo > *hi)
            throw std::logic_error("find_feasible_point: inconsistent back-substitution");
        if ((!lo || *lo <= 0) && (!hi || *hi >= 0))
            x[k] = 0;
        else if (lo)
            x[k] = *lo;
        else
            x[k] = *hi;
    }
    return x;
}

} // namespace hds
