#include "eislat/hermitian.hpp"

#include <stdexcept>

namespace eislat {

HermitianMatrix HermitianMatrix::transform(const std::vector<std::vector<KScalar>>& cols) const {
    int m = static_cast<int>(cols.size());
    HermitianMatrix out(m);
    // tmp = H * U
    std::vector<std::vector<KScalar>> tmp(m, std::vector<KScalar>(n_));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n_; ++i) {
            KScalar s;
            for (int k = 0; k < n_; ++k) s += (*this)(i, k) * cols[j][k];
            tmp[j][i] = s;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            KScalar s;
            for (int k = 0; k < n_; ++k) s += cols[i][k].conj() * tmp[j][k];
            out(i, j) = s;
        }
    return out;
}

Rat herm_det(const HermitianMatrix& h) {
    if (!h.is_hermitian()) throw std::domain_error("herm_det: matrix is not Hermitian");
    int n = h.dim();
    if (n == 0) return 1;
    // Fraction-free Bareiss over K.  Row swaps alone can break hermiticity
    // mid-elimination, which is fine: the algorithm only needs a field.
    std::vector<std::vector<KScalar>> a(n, std::vector<KScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = h(i, j);
    KScalar prev(1L);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    KScalar d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    if (d.b != 0) throw std::logic_error("herm_det: nonzero w-component");
    return d.a;
}

} // namespace eislat
