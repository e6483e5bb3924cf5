#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eislat/eisenstein.hpp"

namespace eislat {

// Dense matrices over exact scalars, row-major.  Sized for lattice work
// (dimension <= a few dozen), not for bulk numerics.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int r, int c) : rows_(r), cols_(c), d_(static_cast<size_t>(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> mul_vec(const std::vector<T>& v) const {
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

using MatZ = Mat<Int>;
using MatQ = Mat<Rat>;

MatQ to_ratmat(const MatZ& m);
// Throws unless every entry is integral.
MatZ to_intmat(const MatQ& m);

// Fraction-free Bareiss determinant.
Int det_bareiss(const MatZ& m);
Rat det_rational(const MatQ& m);

// Exact inverse via Gauss-Jordan; throws on singular input.
MatQ inverse(const MatQ& m);

// Column-style Hermite normal form over Z: returns a matrix whose nonzero
// columns are a basis of the column span of `gens` (full column rank not
// required).  Columns come out in echelon order.
MatZ hnf_column_basis(const MatZ& gens);

// Lattice-reduce the basis of a positive definite integer Gram matrix.
// Returns U (unimodular) with U^T G U the reduced Gram.  Exact arithmetic,
// delta = 99/100.
MatZ lll_reduce_gram(const MatZ& gram);

bool is_symmetric(const MatZ& m);
// All diagonal entries even (the lattice-evenness test for integral Gram).
bool has_even_diagonal(const MatZ& m);

} // namespace eislat
