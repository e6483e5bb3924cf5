#include "eislat/linalg.hpp"

namespace eislat {

MatQ to_ratmat(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

MatZ to_intmat(const MatQ& m) {
    MatZ r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw std::domain_error("to_intmat: non-integral entry");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Int det_bareiss(const MatZ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det_rational(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    // Clear denominators and run Bareiss.
    Int den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    MatZ a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = m(i, j) * den;
            a(i, j) = s.get_num();
        }
    Rat d(det_bareiss(a));
    Rat scale(den);
    for (int i = 1; i < n; ++i) scale *= den;
    d /= scale;
    return d;
}

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    MatQ a = m, inv = MatQ::identity(n);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) throw std::domain_error("inverse: singular matrix");
        if (p != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(p, j));
                std::swap(inv(col, j), inv(p, j));
            }
        Rat piv = a(col, col);
        for (int j = 0; j < n; ++j) { a(col, j) /= piv; inv(col, j) /= piv; }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

MatZ hnf_column_basis(const MatZ& gens) {
    int m = gens.rows(), n = gens.cols();
    MatZ a = gens;
    int piv_col = 0;
    for (int row = 0; row < m && piv_col < n; ++row) {
        // Euclidean elimination across columns piv_col..n-1 on this row.
        while (true) {
            int best = -1;
            for (int j = piv_col; j < n; ++j) {
                if (a(row, j) == 0) continue;
                if (best < 0) { best = j; continue; }
                Int x = abs(a(row, j)), y = abs(a(row, best));
                if (x < y) best = j;
            }
            if (best < 0) break;
            if (best != piv_col)
                for (int i = 0; i < m; ++i) std::swap(a(i, best), a(i, piv_col));
            bool cleared = true;
            for (int j = piv_col + 1; j < n; ++j) {
                if (a(row, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(row, j).get_mpz_t(), a(row, piv_col).get_mpz_t());
                if (q != 0)
                    for (int i = 0; i < m; ++i) a(i, j) -= q * a(i, piv_col);
                if (a(row, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a(row, piv_col) == 0) continue;
        if (a(row, piv_col) < 0)
            for (int i = 0; i < m; ++i) a(i, piv_col) = -a(i, piv_col);
        ++piv_col;
    }
    MatZ basis(m, piv_col);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < piv_col; ++j) basis(i, j) = a(i, j);
    return basis;
}

namespace {

// Gram-based LLL state: B = current Gram as rationals, U accumulates the
// unimodular transform.  Standard size-reduction + Lovasz swaps.
struct LLLState {
    int n;
    MatQ g;       // current Gram
    MatZ u;       // basis transform
    MatQ mu;      // GSO coefficients
    std::vector<Rat> bstar;  // squared GSO lengths

    void gso() {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s = g(i, j);
                for (int k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * bstar[k];
                mu(i, j) = bstar[j] == 0 ? Rat(0) : s / bstar[j];
            }
            Rat s = g(i, i);
            for (int k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
            bstar[i] = s;
        }
    }

    void add_row(int i, int j, const Int& q) {
        // b_i <- b_i - q b_j
        if (q == 0) return;
        for (int c = 0; c < n; ++c) u(i, c) -= q * u(j, c);
        Rat qq(q);
        for (int c = 0; c < n; ++c) {
            Rat t = g(i, c) - qq * g(j, c);
            g(i, c) = t;
        }
        for (int c = 0; c < n; ++c) {
            Rat t = g(c, i) - qq * g(c, j);
            g(c, i) = t;
        }
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        for (int c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
        for (int c = 0; c < n; ++c) std::swap(g(c, i), g(c, j));
    }
};

Int round_rat(const Rat& r) {
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (2 * rem > r.get_den()) q += 1;
    return q;
}

} // namespace

MatZ lll_reduce_gram(const MatZ& gram) {
    int n = gram.rows();
    LLLState st;
    st.n = n;
    st.g = to_ratmat(gram);
    st.u = MatZ::identity(n);
    st.mu = MatQ(n, n);
    st.bstar.assign(n, Rat(0));
    const Rat delta(99, 100);

    st.gso();
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(st.mu(k, j));
            if (q != 0) { st.add_row(k, j, q); st.gso(); }
        }
        Rat lhs = st.bstar[k];
        Rat rhs = (delta - st.mu(k, k - 1) * st.mu(k, k - 1)) * st.bstar[k - 1];
        if (lhs < rhs) {
            st.swap_rows(k, k - 1);
            st.gso();
            k = std::max(1, k - 1);
        } else {
            ++k;
        }
    }
    return st.u;
}

bool is_symmetric(const MatZ& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

bool has_even_diagonal(const MatZ& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (m(i, i) % 2 != 0) return false;
    return true;
}

} // namespace eislat
