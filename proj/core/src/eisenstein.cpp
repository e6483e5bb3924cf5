#include "eislat/eisenstein.hpp"

#include <sstream>

namespace eislat {

const std::vector<EisInt>& EisInt::units() {
    static const std::vector<EisInt> u = {
        EisInt(1, 0),  EisInt(0, 1),  EisInt(-1, 1),
        EisInt(-1, 0), EisInt(0, -1), EisInt(1, -1),
    };
    return u;
}

std::string EisInt::str() const {
    std::ostringstream os;
    os << a.get_str() << (b >= 0 ? " + " : " - ")
       << (b >= 0 ? b : Int(-b)).get_str() << "*w";
    return os.str();
}

std::pair<EisInt, EisInt> eis_divmod(const EisInt& x, const EisInt& y) {
    if (y.is_zero()) throw std::domain_error("eis_divmod: division by zero");
    // Exact quotient x * conj(y) / N(y), rounded to nearest integers.
    EisInt p = x * y.conj();
    Int n = y.norm();
    auto rounddiv = [&n](const Int& t) {
        // nearest integer to t/n, n > 0
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        if (2 * r > n) q += 1;
        return q;
    };
    Int qa = rounddiv(p.a), qb = rounddiv(p.b);
    EisInt q(qa, qb);
    EisInt r = x - y * q;
    if (r.norm() < y.norm()) return {q, r};
    // Rounding both coordinates independently can land just outside the
    // Euclidean bound; one of the four neighbours always works.
    static const long off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (auto& d : off) {
        EisInt q2(qa + d[0], qb + d[1]);
        EisInt r2 = x - y * q2;
        if (r2.norm() < y.norm()) return {q2, r2};
    }
    throw std::logic_error("eis_divmod: no Euclidean quotient found");
}

EisInt eis_gcd(EisInt x, EisInt y) {
    while (!y.is_zero()) {
        EisInt r = eis_divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

EisInt canonical_associate(const EisInt& x) {
    if (x.is_zero()) return x;
    // The six unit rotations partition the punctured plane into the cones
    // [60k, 60(k+1)) degrees; the cone [0, 60) is {a > 0, b >= 0}.
    for (const EisInt& u : EisInt::units()) {
        EisInt y = x * u;
        if (y.a > 0 && y.b >= 0) return y;
    }
    throw std::logic_error("canonical_associate: no sextant hit");
}

KScalar KScalar::operator/(const KScalar& o) const {
    if (o.is_zero()) throw std::domain_error("KScalar: division by zero");
    Rat n = o.norm();
    KScalar p = *this * o.conj();
    return KScalar(p.a / n, p.b / n);
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string KScalar::str() const {
    Rat bb = b >= 0 ? b : Rat(-b);
    return rat_str(a) + (b >= 0 ? " + " : " - ") + rat_str(bb) + "*w";
}

KScalar KScalar::parse(const std::string& s) {
    // forms: "x", "x + y*w", "x - y*w"
    auto strip = [](std::string t) {
        size_t i = t.find_first_not_of(" \t");
        size_t j = t.find_last_not_of(" \t");
        if (i == std::string::npos) return std::string();
        return t.substr(i, j - i + 1);
    };
    size_t wpos = s.find("*w");
    if (wpos == std::string::npos) return KScalar(parse_rat(strip(s)));
    // split at the last '+' or '-' that is preceded by a space
    size_t split = std::string::npos;
    for (size_t i = 1; i + 1 < wpos; ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') split = i;
    if (split == std::string::npos) throw std::invalid_argument("bad KScalar: " + s);
    Rat a = parse_rat(strip(s.substr(0, split)));
    Rat b = parse_rat(strip(s.substr(split + 1, wpos - split - 1)));
    if (s[split] == '-') b = -b;
    return KScalar(a, b);
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n <= 0) throw std::domain_error("factorize: need positive input");
    std::vector<std::pair<Int, unsigned>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string factored_str(const Int& n) {
    if (n == 1) return "1";
    std::string s;
    for (auto& [p, e] : factorize(n)) {
        if (!s.empty()) s += "*";
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string factored_rat_str(const Rat& r) {
    std::string num = r.get_num() == 1 ? "1" : factored_str(r.get_num());
    if (r.get_den() == 1) return num;
    return num + " / " + factored_str(r.get_den());
}

} // namespace eislat
