#pragma once

#include <vector>

#include "eislat/eisenstein.hpp"
#include "eislat/linalg.hpp"

namespace eislat {

/**
 * Square matrix over K = Q(w) with conjugate-transpose symmetry.  Houses
 * Hermitian Gram matrices and theta-series indices.  Entries are stored
 * densely; hermiticity is validated, not enforced by construction.
 */
class HermitianMatrix {
public:
    HermitianMatrix() : n_(0) {}
    explicit HermitianMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n) {}

    static HermitianMatrix identity(int n) {
        HermitianMatrix h(n);
        for (int i = 0; i < n; ++i) h(i, i) = KScalar(1L);
        return h;
    }

    int dim() const { return n_; }

    KScalar& operator()(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }
    const KScalar& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const HermitianMatrix& o) const { return n_ == o.n_ && d_ == o.d_; }

    bool is_hermitian() const {
        for (int i = 0; i < n_; ++i) {
            if (!(*this)(i, i).is_rational()) return false;
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i).conj()) return false;
        }
        return true;
    }

    HermitianMatrix conj_entries() const {
        HermitianMatrix h(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) h(i, j) = (*this)(i, j).conj();
        return h;
    }

    // conj(U)^T * H * U for a matrix U over K given column-major as dim x m.
    HermitianMatrix transform(const std::vector<std::vector<KScalar>>& cols) const;

    // trace as a K-scalar (rational for Hermitian input)
    KScalar trace() const {
        KScalar t;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int n_;
    std::vector<KScalar> d_;
};

// Exact determinant of a Hermitian matrix; throws on non-Hermitian input.
// Fraction-free elimination over K; the w-component of the result is
// provably zero and asserted.
Rat herm_det(const HermitianMatrix& h);

} // namespace eislat
