#pragma once
// Parabolic 2x2 representations, exact in Z[w]:
//   x -> X = [[1,1],[0,1]],   y -> Y = [[1,0],[w,1]].
// The Riley polynomial of a two-bridge pair cuts out the parameter values w
// where this assignment satisfies the group relator. Trace polynomials of
// the pseudo-meridian family follow the three-term recurrence
//   tau_n = (2-w) tau_{n-1} - tau_{n-2},  tau_0 = tau_1 = 2,
// and separate the family members whenever they take distinct values.

#include <complex>
#include <limits>
#include <vector>

#include "int_polynomial.hpp"
#include "two_bridge.hpp"
#include "word.hpp"

namespace kt {

struct PolyMat22 {
    IntPolynomial a, b, c, d;  // [[a, b], [c, d]]

    static PolyMat22 identity() {
        return {IntPolynomial({1}), IntPolynomial(), IntPolynomial(), IntPolynomial({1})};
    }
    IntPolynomial trace() const { return a + d; }

    friend PolyMat22 operator*(const PolyMat22& l, const PolyMat22& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend bool operator==(const PolyMat22&, const PolyMat22&) = default;
};

inline PolyMat22 parabolicX() {
    return {IntPolynomial({1}), IntPolynomial({1}), IntPolynomial(), IntPolynomial({1})};
}
inline PolyMat22 parabolicXInverse() {
    return {IntPolynomial({1}), IntPolynomial({-1}), IntPolynomial(), IntPolynomial({1})};
}
inline PolyMat22 parabolicY() {
    return {IntPolynomial({1}), IntPolynomial(), IntPolynomial({0, 1}), IntPolynomial({1})};
}
inline PolyMat22 parabolicYInverse() {
    return {IntPolynomial({1}), IntPolynomial(), IntPolynomial({0, -1}), IntPolynomial({1})};
}

// exact image of a word in the generators x (gen 0) and y (gen 1)
inline PolyMat22 parabolicWordMatrix(const Word& w, Gen x = 0, Gen y = 1) {
    PolyMat22 acc = PolyMat22::identity();
    forEachLetter(w, [&](Gen g, int sign) {
        if (g == x)
            acc = acc * (sign > 0 ? parabolicX() : parabolicXInverse());
        else if (g == y)
            acc = acc * (sign > 0 ? parabolicY() : parabolicYInverse());
        else
            throw Error("parabolic evaluation only covers the two meridian generators");
    });
    return acc;
}

// entries of rho(relator) - I; all four must vanish at a parabolic parameter
inline std::vector<IntPolynomial> parabolicRelatorEntries(const TwoBridgeKnot& k) {
    Presentation pres = twoBridgePresentation(k);
    PolyMat22 m = parabolicWordMatrix(pres.relators[0]);
    return {m.a - IntPolynomial({1}), m.b, m.c, m.d - IntPolynomial({1})};
}

// content-normalized gcd of the relator entries, positive leading
// coefficient; its degree is (p-1)/2
inline IntPolynomial rileyPolynomial(const TwoBridgeKnot& k) {
    auto entries = parabolicRelatorEntries(k);
    IntPolynomial g;
    for (const auto& e : entries) g = polyGcd(g, e);
    if (g.isZero()) throw Error("relator entries all vanish identically");
    g = primitivePart(g);
    if (g.degree() != static_cast<int>((k.p - 1) / 2))
        throw Error("riley polynomial degree " + std::to_string(g.degree()) +
                    " does not match (p-1)/2 = " + std::to_string((k.p - 1) / 2));
    return g;
}

// --- pseudo-meridian traces ----------------------------------------------

// exact trace of rho(mu_n) via the matrix product, any integer n
inline IntPolynomial traceDirect(long long n) {
    PolyMat22 m = parabolicWordMatrix(muWord(0, 1, n));
    return m.trace();
}

// exact trace via the three-term recurrence, any integer n
inline IntPolynomial traceRecurrence(long long n) {
    IntPolynomial prev({2}), cur({2});  // tau_0, tau_1
    IntPolynomial mult({2, -1});        // 2 - w
    if (n >= 0) {
        for (long long i = 1; i < n; ++i) {
            IntPolynomial next = mult * cur - prev;
            prev = cur;
            cur = next;
        }
        return n == 0 ? prev : cur;
    }
    // run the recurrence backwards: tau_{n-1} = (2-w) tau_n - tau_{n+1}
    for (long long i = 0; i > n; --i) {
        IntPolynomial before = mult * prev - cur;
        cur = prev;
        prev = before;
    }
    return prev;
}

// numeric trace from the recurrence at a complex parameter
inline std::complex<double> traceNumeric(long long n, std::complex<double> omega) {
    std::complex<double> prev = 2.0, cur = 2.0;
    std::complex<double> mult = 2.0 - omega;
    if (n >= 0) {
        for (long long i = 1; i < n; ++i) {
            std::complex<double> next = mult * cur - prev;
            prev = cur;
            cur = next;
        }
        return n == 0 ? prev : cur;
    }
    for (long long i = 0; i > n; --i) {
        std::complex<double> before = mult * prev - cur;
        cur = prev;
        prev = before;
    }
    return prev;
}

// roots of z^2 + (omega - 2) z + 1: lambda with |lambda| >= 1, ties by
// nonnegative imaginary part; the product of the pair is 1
struct CharacteristicRoots {
    std::complex<double> lambda;
    std::complex<double> lambdaInverse;
};

inline CharacteristicRoots characteristicRoots(std::complex<double> omega) {
    std::complex<double> b = omega - 2.0;
    std::complex<double> disc = std::sqrt(b * b - 4.0);
    std::complex<double> r1 = (-b + disc) / 2.0;
    std::complex<double> r2 = (-b - disc) / 2.0;
    bool firstBig = std::abs(r1) > std::abs(r2) ||
                    (std::abs(std::abs(r1) - std::abs(r2)) < 1e-12 && r1.imag() >= r2.imag());
    CharacteristicRoots out;
    out.lambda = firstBig ? r1 : r2;
    out.lambdaInverse = firstBig ? r2 : r1;
    return out;
}

// tau_n = 2 (lambda^(n-1/2) + lambda^(1/2-n)) / (lambda^(1/2) + lambda^(-1/2));
// the branch of the square root cancels. Degenerate at lambda = -1 (omega 4).
inline std::complex<double> closedFormTrace(long long n, std::complex<double> omega) {
    CharacteristicRoots cr = characteristicRoots(omega);
    if (std::abs(cr.lambda + 1.0) < 1e-9)
        throw DegenerateLambda("characteristic root is -1 (parameter near 4)");
    std::complex<double> s = std::sqrt(cr.lambda);
    std::complex<double> num = std::pow(s, 2 * n - 1) + std::pow(s, 1 - 2 * n);
    std::complex<double> den = s + 1.0 / s;
    return 2.0 * num / den;
}

enum class RootClass { NonReal, RealNegative, RealPositiveUnitCase, RealOther };

inline RootClass classifyRoot(std::complex<double> root) {
    if (std::abs(root.imag()) > 1e-8 * (1.0 + std::abs(root))) return RootClass::NonReal;
    double x = root.real();
    if (x < 0) return RootClass::RealNegative;
    if (x > 0 && x <= 4) return RootClass::RealPositiveUnitCase;
    return RootClass::RealOther;
}

// Pairwise separation of the numeric traces: with the parameter known to
// accuracy eps, index n carries the error allowance
//   b_n = 3 n eps max_{k <= n} |tau_k|,
// and indices i, j count as certified distinct when
//   |tau_i - tau_j| > 10 (b_i + b_j).
struct TraceSeparationCertificate {
    bool separated = false;
    long long nMin = 0, nMax = 0;
    double epsilon = 0;
    std::vector<std::complex<double>> traces;  // indexed nMin..nMax
    std::vector<double> bounds;
    double worstMargin = 0;  // min over pairs of |t_i - t_j| - 10 (b_i + b_j)
    long long worstI = 0, worstJ = 0;
};

inline TraceSeparationCertificate distinctTraceCertificate(std::complex<double> omega,
                                                           double epsilon, long long nMin,
                                                           long long nMax) {
    if (nMin < 0 || nMax < nMin) throw InvalidParameters("trace certificate needs 0 <= nMin <= nMax");
    TraceSeparationCertificate cert;
    cert.nMin = nMin;
    cert.nMax = nMax;
    cert.epsilon = epsilon;
    double runningMax = 0;
    std::vector<double> boundAt(static_cast<std::size_t>(nMax) + 1, 0.0);
    for (long long n = 0; n <= nMax; ++n) {
        std::complex<double> t = traceNumeric(n, omega);
        runningMax = std::max(runningMax, std::abs(t));
        boundAt[static_cast<std::size_t>(n)] = 3.0 * static_cast<double>(n) * epsilon * runningMax;
        if (n >= nMin) {
            cert.traces.push_back(t);
            cert.bounds.push_back(boundAt[static_cast<std::size_t>(n)]);
        }
    }
    cert.separated = true;
    cert.worstMargin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cert.traces.size(); ++i)
        for (std::size_t j = i + 1; j < cert.traces.size(); ++j) {
            double gap = std::abs(cert.traces[i] - cert.traces[j]);
            double margin = gap - 10.0 * (cert.bounds[i] + cert.bounds[j]);
            if (margin < cert.worstMargin) {
                cert.worstMargin = margin;
                cert.worstI = nMin + static_cast<long long>(i);
                cert.worstJ = nMin + static_cast<long long>(j);
            }
            if (margin <= 0) cert.separated = false;
        }
    return cert;
}

}
