#pragma once

#include "hds/hermitian.hpp"

#include <vector>

namespace hds {

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) { return a.re == b.re && a.im == b.im; }
};

/// Dense square matrix over Q(i).
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    GaussianRational &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const GaussianRational &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    bool is_zero() const;

    friend CMatrix operator+(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator*(const GaussianRational &s, const CMatrix &a);
    friend bool operator==(const CMatrix &a, const CMatrix &b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_ = 0;
    std::vector<GaussianRational> a_;
};

CMatrix commutator(const CMatrix &a, const CMatrix &b);

/// Concrete realization of p inside u(p,q) (Sp(n,R) is embedded in
/// u(n,n) with symmetric off-diagonal block). Elements of p are
/// [[0,B],[B*,0]]; z0 is i*diag(q/N,...,q/N,-p/N,...,-p/N).
struct MatrixModel {
    std::size_t top = 0, bottom = 0; // block sizes
    bool symmetric_block = false;    // Sp(n,R): B must be symmetric
    CMatrix z0;
    std::vector<CMatrix> cascade_vectors; // X_k, one per cascade root

    std::size_t size() const { return top + bottom; }
    // p-element with upper-right block b (top x bottom).
    CMatrix embed(const std::vector<std::vector<GaussianRational>> &b) const;
};

MatrixModel matrix_model(const HermitianPair &pair);

bool in_p(const MatrixModel &model, const CMatrix &x);

/// -[X,[z0,X]]. Throws DomainError("not_in_p") for X outside the model.
CMatrix phi_K_matrix(const MatrixModel &model, const CMatrix &x);

// Re(-tr(M z0)).
Rational pairing_with_z0(const MatrixModel &model, const CMatrix &m);

/// Weight read from the diagonal of a diagonal matrix in k (entries divided
/// by i, restricted to the top block for Sp). Throws std::invalid_argument
/// when the matrix is not diagonal with imaginary entries.
Weight diagonal_weight(const HermitianPair &pair, const MatrixModel &model, const CMatrix &m);

} // namespace hds
