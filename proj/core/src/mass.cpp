#include "eislat/mass.hpp"

#include <mutex>
#include <stdexcept>

namespace eislat {

namespace {

Int binom(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

Rat bernoulli(unsigned n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat s(0);
        for (unsigned k = 0; k < m; ++k) s += Rat(binom(m + 1, k)) * cache[k];
        Rat bm = -s / Rat(m + 1);
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat s(0), xp(1);
    // sum_{k=0}^{n} C(n,k) B_{n-k} x^k
    for (unsigned k = 0; k <= n; ++k) {
        s += Rat(binom(n, k)) * bernoulli(n - k) * xp;
        xp *= x;
    }
    s.canonicalize();
    return s;
}

int chi3(long n) {
    long m = n % 3;
    if (m < 0) m += 3;
    if (m == 0) return 0;
    return m == 1 ? 1 : -1;
}

Rat bernoulli_chi3(unsigned n) {
    if (n == 0) throw std::domain_error("bernoulli_chi3: n must be positive");
    Rat pw(1);
    for (unsigned i = 1; i < n; ++i) pw *= 3;
    Rat v = pw * (bernoulli_poly(n, Rat(1, 3)) - bernoulli_poly(n, Rat(2, 3)));
    v.canonicalize();
    return v;
}

namespace {

Rat bernoulli_product(int r) {
    Rat p(1);
    for (int j = 1; j <= r / 2; ++j)
        p *= abs(bernoulli(2 * j) * bernoulli_chi3(2 * j - 1));
    p.canonicalize();
    return p;
}

void check_rank(int r) {
    if (r <= 0 || r % 4 != 0)
        throw std::domain_error("mass: rank must be a positive multiple of 4");
}

Int pow_int(long base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace

MassValue mass_even(int r) {
    check_rank(r);
    Rat v = bernoulli_product(r) / Rat(pow_int(2, r - 1) * factorial(r));
    v.canonicalize();
    return {r, v};
}

MassValue mass_odd(int r) {
    check_rank(r);
    Rat v = Rat(pow_int(3, r / 2) + 1) * bernoulli_product(r) / Rat(pow_int(2, r) * factorial(r));
    v.canonicalize();
    return {r, v};
}

Int isotropic_count(int r, Geometry g) {
    if (r <= 0 || r % 2 != 0) throw std::domain_error("isotropic_count: rank must be even");
    Int p = 1;
    for (int j = 1; j <= r / 2; ++j)
        p *= (g == Geometry::orthogonal) ? pow_int(3, j - 1) + 1 : pow_int(3, j) + 1;
    return p;
}

namespace {

// Enumeration over F_3^r.  Vectors are digit strings; subspaces are listed
// once each via reduced row echelon form enumeration.
struct F3Space {
    int n;
    Geometry geom;

    // Form value B(x,y).  Orthogonal: hyperbolic sum x1 y2 + x2 y1 + ...
    // (the polarization of Q = x1 x2 + x3 x4 + ...).  Symplectic:
    // x1 y2 - x2 y1 + ...
    int bilinear(const std::vector<int>& x, const std::vector<int>& y) const {
        int s = 0;
        for (int i = 0; i + 1 < n; i += 2) {
            if (geom == Geometry::orthogonal)
                s += x[i] * y[i + 1] + x[i + 1] * y[i];
            else
                s += x[i] * y[i + 1] - x[i + 1] * y[i];
        }
        return ((s % 3) + 3) % 3;
    }
    int quad(const std::vector<int>& x) const {
        int s = 0;
        for (int i = 0; i + 1 < n; i += 2) s += x[i] * x[i + 1];
        return ((s % 3) + 3) % 3;
    }
};

// Recursively enumerate reduced-row-echelon bases of k-dim subspaces and
// count the totally isotropic ones.  Each subspace has a unique RREF basis,
// so each is counted once: a candidate extension is kept only when all
// earlier rows vanish at the new pivot column.
void rref_enum(const F3Space& sp, int k, int start_col, std::vector<std::vector<int>>& rows,
               Int& count) {
    int n = sp.n;
    int need = k - static_cast<int>(rows.size());
    if (need == 0) {
        count += 1;
        return;
    }
    for (int pivot = start_col; pivot <= n - need; ++pivot) {
        bool rref_ok = true;
        for (auto& r : rows)
            if (r[pivot] != 0) { rref_ok = false; break; }
        if (!rref_ok) continue;
        long total = 1;
        for (int c = pivot + 1; c < n; ++c) total *= 3;
        for (long mask = 0; mask < total; ++mask) {
            std::vector<int> v(n, 0);
            v[pivot] = 1;
            long m = mask;
            for (int c = pivot + 1; c < n; ++c) { v[c] = static_cast<int>(m % 3); m /= 3; }
            if (sp.geom == Geometry::orthogonal && sp.quad(v) != 0) continue;
            bool ok = true;
            for (auto& r : rows)
                if (sp.bilinear(r, v) != 0) { ok = false; break; }
            if (!ok) continue;
            rows.push_back(v);
            rref_enum(sp, k, pivot + 1, rows, count);
            rows.pop_back();
        }
    }
}

} // namespace

Int brute_force_isotropic(int r, Geometry g) {
    if (r <= 0 || r % 2 != 0) throw std::domain_error("brute_force_isotropic: rank must be even");
    if (r > 6) throw std::domain_error("brute_force_isotropic: guarded to r <= 6");
    F3Space sp{r, g};
    Int count = 0;
    std::vector<std::vector<int>> rows;
    rref_enum(sp, r / 2, 0, rows, count);
    return count;
}

} // namespace eislat
