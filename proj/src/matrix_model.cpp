#include "hds/matrix_model.hpp"

#include <stdexcept>

namespace hds {

bool CMatrix::is_zero() const
{
    for (const auto &x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

CMatrix operator+(const CMatrix &a, const CMatrix &b)
{
    CMatrix c(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        c.a_[k] = a.a_[k] + b.a_[k];
    return c;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b)
{
    CMatrix c(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        c.a_[k] = a.a_[k] - b.a_[k];
    return c;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
    const std::size_t n = a.n_;
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const auto &x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) = c(i, j) + x * b(k, j);
        }
    return c;
}

CMatrix operator*(const GaussianRational &s, const CMatrix &a)
{
    CMatrix c(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        c.a_[k] = s * a.a_[k];
    return c;
}

CMatrix commutator(const CMatrix &a, const CMatrix &b)
{
    return a * b - b * a;
}

CMatrix MatrixModel::embed(const std::vector<std::vector<GaussianRational>> &b) const
{
    CMatrix x(size());
    for (std::size_t i = 0; i < top; ++i)
        for (std::size_t j = 0; j < bottom; ++j) {
            x(i, top + j) = b[i][j];
            x(top + j, i) = b[i][j].conj();
        }
    return x;
}

MatrixModel matrix_model(const HermitianPair &pair)
{
    MatrixModel m;
    if (pair.spec.family == Family::SU) {
        m.top = pair.spec.p;
        m.bottom = pair.spec.q;
    } else {
        m.top = m.bottom = pair.spec.n;
        m.symmetric_block = true;
    }
    const std::size_t n = m.size();
    m.z0 = CMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        m.z0(i, i) = GaussianRational(0, i < m.top ? Rational(m.bottom, n) : Rational(-long(m.top), n));

    // X_k sits on the B entry matching gamma_k: for SU, gamma_k = e_k - e_{N-k+1};
    // for Sp, gamma_k = 2e_k.
    for (std::size_t k = 0; k < pair.rank(); ++k) {
        std::vector<std::vector<GaussianRational>> b(m.top, std::vector<GaussianRational>(m.bottom));
        if (m.symmetric_block)
            b[k][k] = GaussianRational(1);
        else
            b[k][m.bottom - 1 - k] = GaussianRational(1);
        m.cascade_vectors.push_back(m.embed(b));
    }
    return m;
}

bool in_p(const MatrixModel &model, const CMatrix &x)
{
    if (x.size() != model.size())
        return false;
    const std::size_t t = model.top, n = model.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool diag_block = (i < t) == (j < t);
            if (diag_block && !x(i, j).is_zero())
                return false;
            if (!diag_block && !(x(i, j) == x(j, i).conj()))
                return false;
        }
    if (model.symmetric_block)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                if (!(x(i, t + j) == x(j, t + i)))
                    return false;
    return true;
}

CMatrix phi_K_matrix(const MatrixModel &model, const CMatrix &x)
{
    if (!in_p(model, x))
        throw DomainError("not_in_p", "phi_K_matrix: matrix is not in the model of p");
    return GaussianRational(-1) * commutator(x, commutator(model.z0, x));
}

Rational pairing_with_z0(const MatrixModel &model, const CMatrix &m)
{
    CMatrix prod = m * model.z0;
    Rational tr = 0;
    for (std::size_t i = 0; i < prod.size(); ++i)
        tr += prod(i, i).re;
    return -tr;
}

Weight diagonal_weight(const HermitianPair &pair, const MatrixModel &model, const CMatrix &m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && !m(i, j).is_zero())
                throw std::invalid_argument("diagonal_weight: matrix is not diagonal");
            if (i == j && m(i, i).re != 0)
                throw std::invalid_argument("diagonal_weight: diagonal entry is not imaginary");
        }
    std::size_t len = model.symmetric_block ? model.top : n;
    std::vector<Rational> c(len);
    for (std::size_t i = 0; i < len; ++i)
        c[i] = m(i, i).im;
    return Weight(pair.ambient(), std::move(c));
}

} // namespace hds
