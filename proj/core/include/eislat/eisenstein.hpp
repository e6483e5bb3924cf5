#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eislat {

using Int = mpz_class;
using Rat = mpq_class;

/**
 * EisInt: an element a + b*w of the ring O = Z[w], where w = (1 + i*sqrt(3))/2
 * is a primitive sixth root of unity.  Multiplication uses w^2 = w - 1.
 * The ring is Euclidean for the norm N(a + b*w) = a^2 + ab + b^2.
 */
class EisInt {
public:
    Int a, b;

    EisInt() : a(0), b(0) {}
    EisInt(Int x) : a(std::move(x)), b(0) {}
    EisInt(long x) : a(x), b(0) {}
    EisInt(Int x, Int y) : a(std::move(x)), b(std::move(y)) {}
    EisInt(long x, long y) : a(x), b(y) {}

    static EisInt omega() { return EisInt(0, 1); }
    // theta = 2w - 1 represents i*sqrt(3); theta^2 = -3.
    static EisInt theta() { return EisInt(-1, 2); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }

    Int norm() const { return a * a + a * b + b * b; }

    EisInt conj() const { return EisInt(a + b, -b); }

    EisInt operator-() const { return EisInt(-a, -b); }
    EisInt operator+(const EisInt& o) const { return EisInt(a + o.a, b + o.b); }
    EisInt operator-(const EisInt& o) const { return EisInt(a - o.a, b - o.b); }
    EisInt operator*(const EisInt& o) const {
        // (a + bw)(c + dw) = ac - bd + (ad + bc + bd) w
        return EisInt(a * o.a - b * o.b, a * o.b + b * o.a + b * o.b);
    }
    EisInt& operator+=(const EisInt& o) { a += o.a; b += o.b; return *this; }
    EisInt& operator-=(const EisInt& o) { a -= o.a; b -= o.b; return *this; }
    EisInt& operator*=(const EisInt& o) { *this = *this * o; return *this; }

    bool operator==(const EisInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const EisInt& o) const { return !(*this == o); }

    // The six units 1, w, w-1, -1, -w, 1-w as powers of w.
    static const std::vector<EisInt>& units();

    std::string str() const;
};

// Euclidean division: x = q*y + r with N(r) < N(y).  Throws on y = 0.
std::pair<EisInt, EisInt> eis_divmod(const EisInt& x, const EisInt& y);

EisInt eis_gcd(EisInt x, EisInt y);

// Canonical associate: the unit multiple with a > 0, b >= 0
// (sextant fundamental domain); 0 maps to 0.
EisInt canonical_associate(const EisInt& x);

/**
 * KScalar: an element a + b*w of the field K = Q(i*sqrt(3)), with a, b
 * exact rationals.  Conjugation sends w to 1 - w.
 */
class KScalar {
public:
    Rat a, b;

    KScalar() : a(0), b(0) {}
    KScalar(Rat x) : a(std::move(x)), b(0) { canon(); }
    KScalar(long x) : a(x), b(0) {}
    KScalar(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) { canon(); }
    KScalar(long x, long y) : a(x), b(y) {}
    KScalar(const EisInt& z) : a(z.a), b(z.b) {}

    static KScalar omega() { return KScalar(0L, 1L); }
    static KScalar theta() { return KScalar(-1L, 2L); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    // Re(a + bw) = a + b/2, Im(a + bw) = b*sqrt(3)/2.
    Rat real() const { return a + b / 2; }
    // norm x * conj(x) = a^2 + ab + b^2 (nonnegative rational)
    Rat norm() const { return a * a + a * b + b * b; }

    KScalar conj() const { return KScalar(a + b, -b); }

    KScalar operator-() const { return KScalar(-a, -b); }
    KScalar operator+(const KScalar& o) const { return KScalar(a + o.a, b + o.b); }
    KScalar operator-(const KScalar& o) const { return KScalar(a - o.a, b - o.b); }
    KScalar operator*(const KScalar& o) const {
        return KScalar(a * o.a - b * o.b, a * o.b + b * o.a + b * o.b);
    }
    KScalar operator/(const KScalar& o) const;
    KScalar& operator+=(const KScalar& o) { a += o.a; b += o.b; canon(); return *this; }
    KScalar& operator-=(const KScalar& o) { a -= o.a; b -= o.b; canon(); return *this; }
    KScalar& operator*=(const KScalar& o) { *this = *this * o; return *this; }

    bool operator==(const KScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const KScalar& o) const { return !(*this == o); }

    // True when both coordinates are integers.
    bool is_integral() const {
        return a.get_den() == 1 && b.get_den() == 1;
    }
    EisInt to_eisenstein() const {
        if (!is_integral()) throw std::domain_error("KScalar::to_eisenstein: not integral");
        return EisInt(a.get_num(), b.get_num());
    }

    // Canonical text form "a/b + c/d*w" in lowest terms.
    std::string str() const;
    static KScalar parse(const std::string& s);

private:
    void canon() { a.canonicalize(); b.canonicalize(); }
};

inline KScalar operator*(const Rat& r, const KScalar& x) { return KScalar(r * x.a, r * x.b); }

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Prime factorization of a positive integer as (prime, exponent) pairs.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
// Factored display, e.g. "2^7*3^5*5"; returns "1" for 1.
std::string factored_str(const Int& n);
// "p/q" with both sides factored, for mass-formula reports.
std::string factored_rat_str(const Rat& r);

} // namespace eislat
