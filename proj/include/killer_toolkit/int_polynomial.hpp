#pragma once
// Exact univariate polynomials over Z with arbitrary-precision coefficients.
// Enough machinery for the representation-theoretic certificates: ring
// arithmetic, exact division, contents, subresultant gcd and Yun's
// squarefree decomposition. Coefficients are stored ascending.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace kt {

using BigInt = boost::multiprecision::cpp_int;

struct IntPolynomial {
    std::vector<BigInt> c;  // c[i] multiplies w^i; no trailing zeros

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }
    static IntPolynomial variable() { return IntPolynomial({0, 1}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool isZero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const BigInt& leading() const {
        static const BigInt zero = 0;
        return c.empty() ? zero : c.back();
    }
    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return 0;
        return c[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a) {
        IntPolynomial r = a;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<BigInt> r(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
        IntPolynomial r = a;
        for (auto& v : r.c) v *= s;
        r.trim();
        return r;
    }

    template <typename T>
    T evaluate(const T& x) const {
        T acc{};
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * x + static_cast<T>(c[i].template convert_to<double>());
        return acc;
    }
    BigInt evaluateExact(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    IntPolynomial derivative() const {
        if (c.size() <= 1) return {};
        std::vector<BigInt> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = BigInt(i) * c[i];
        return IntPolynomial(std::move(r));
    }

    std::string str(const std::string& var = "w") const {
        if (isZero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            BigInt a = c[i];
            if (first) {
                if (a < 0) out << "-";
            } else {
                out << (a < 0 ? " - " : " + ");
            }
            BigInt mag = abs(a);
            if (i == 0 || mag != 1) out << mag.str();
            if (i > 0) {
                if (mag != 1) out << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
            first = false;
        }
        return out.str();
    }
};

inline BigInt intGcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// gcd of coefficients, always >= 0; zero polynomial has content 0
inline BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& v : p.c) g = intGcd(g, v);
    return g;
}

inline IntPolynomial primitivePart(const IntPolynomial& p) {
    if (p.isZero()) return p;
    BigInt g = content(p);
    IntPolynomial r = p;
    for (auto& v : r.c) v /= g;
    if (r.leading() < 0)
        for (auto& v : r.c) v = -v;
    return r;
}

// exact division; throws when the division leaves a remainder
inline IntPolynomial divExact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.isZero()) throw Error("polynomial division by zero");
    if (a.isZero()) return {};
    if (a.degree() < b.degree()) throw Error("polynomial division is not exact");
    std::vector<BigInt> rem = a.c;
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top % b.leading() != 0) throw Error("polynomial division is not exact");
        BigInt f = top / b.leading();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * b.c[static_cast<std::size_t>(i)];
    }
    for (const auto& v : rem)
        if (v != 0) throw Error("polynomial division is not exact");
    return IntPolynomial(std::move(q));
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[w]
inline IntPolynomial pseudoRemainder(IntPolynomial a, const IntPolynomial& b) {
    if (b.isZero()) throw Error("pseudo-remainder by zero");
    int e = a.degree() - b.degree() + 1;
    while (!a.isZero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        BigInt lead = a.leading();
        a = b.leading() * a;
        IntPolynomial sub = b;
        sub.c.insert(sub.c.begin(), static_cast<std::size_t>(shift), BigInt(0));
        a = a - lead * sub;
        --e;
    }
    // normalize so the result equals lc(b)^(deg gap + 1) * a mod b exactly
    BigInt fix = 1;
    for (int i = 0; i < e; ++i) fix *= b.leading();
    return fix * a;
}

// primitive gcd via the subresultant polynomial remainder sequence,
// positive leading coefficient
inline IntPolynomial polyGcd(IntPolynomial a, IntPolynomial b) {
    if (a.isZero()) return primitivePart(b);
    if (b.isZero()) return primitivePart(a);
    BigInt contentGcd = intGcd(content(a), content(b));
    a = primitivePart(a);
    b = primitivePart(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    BigInt g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPolynomial r = pseudoRemainder(a, b);
        if (r.isZero()) break;
        if (r.degree() == 0) {
            b = IntPolynomial::constant(1);
            break;
        }
        a = b;
        BigInt denom = g;
        for (int i = 0; i < delta; ++i) denom *= h;
        IntPolynomial next = r;
        for (auto& v : next.c) {
            if (v % denom != 0) throw Error("subresultant sequence lost exactness");
            v /= denom;
        }
        b = next;
        g = a.leading();
        if (delta > 0) {
            // h = g^delta / h^(delta-1); integral along a genuine
            // subresultant sequence
            BigInt num = 1;
            for (int i = 0; i < delta; ++i) num *= g;
            BigInt den = 1;
            for (int i = 0; i + 1 < delta; ++i) den *= h;
            if (num % den != 0) throw Error("subresultant sequence lost exactness");
            h = num / den;
        }
    }
    return contentGcd * primitivePart(b);
}

// Yun's squarefree decomposition of the primitive part:
// returns factors [a1, a2, ...] with primitive(p) = prod a_i^i up to sign,
// each a_i squarefree (possibly constant 1).
inline std::vector<IntPolynomial> squarefreeDecomposition(const IntPolynomial& p) {
    if (p.isZero()) throw Error("squarefree decomposition of zero");
    IntPolynomial f = primitivePart(p);
    if (f.degree() == 0) return {};
    IntPolynomial fd = f.derivative();
    IntPolynomial g = polyGcd(f, fd);
    std::vector<IntPolynomial> out;
    if (g.degree() == 0) {
        out.push_back(f);
        return out;
    }
    IntPolynomial ci = divExact(f, g);
    IntPolynomial di = divExact(fd, g) - ci.derivative();
    while (true) {
        IntPolynomial ai = polyGcd(ci, di);
        out.push_back(primitivePart(ai));
        IntPolynomial cn = divExact(ci, ai);
        if (cn.degree() == 0) break;
        di = divExact(di, ai) - cn.derivative();
        ci = cn;
    }
    return out;
}

}
