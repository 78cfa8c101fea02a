#pragma once

// Torus knots: the Bezout rewrite of <u, v | u^p = v^q> onto generators x, a,
// the pseudo-meridian family mu_n in u,v coordinates, and nonconjugacy
// certificates in the quotient Z/p * Z/q via alternating normal forms.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "killer_toolkit/errors.hpp"
#include "killer_toolkit/presentation.hpp"
#include "killer_toolkit/word.hpp"

namespace kt {

struct TorusKnotParams {
    long long p = 0;
    long long q = 0;
};

inline TorusKnotParams torusKnot(long long p, long long q) {
    if (q < 2) throw InvalidParameters("torus knot needs q >= 2; T(p,1) is unknotted");
    if (p <= q) throw InvalidParameters("torus knot needs p > q");
    if (std::gcd(p, q) != 1) throw InvalidParameters("torus knot parameters must be coprime");
    return {p, q};
}

// r p + s q = 1 normalized to -q < r < 0 and 1 < s < p. s is the inverse of q
// mod p, and s = 1 would force p | q - 1, impossible for 1 < q < p.
struct BezoutPair {
    long long r = 0;
    long long s = 0;
};

inline BezoutPair bezoutRS(const TorusKnotParams& t) {
    BezoutPair out;
    for (out.s = 2; out.s < t.p; ++out.s)
        if ((out.s * t.q) % t.p == 1) break;
    out.r = (1 - out.s * t.q) / t.p;
    if (out.r * t.p + out.s * t.q != 1 || out.r <= -t.q || out.r >= 0 || out.s <= 1 ||
        out.s >= t.p)
        throw Error("bezout normalization failed");
    return out;
}

// standard: <u, v | u^p v^-q>
// xa:       <x, v, a | (a x^q)^p v^-q, (a x^q)^-s x v^-r>
// obtained by adjoining x = u^s v^r, a = u x^-q and eliminating u. Both
// abelianize to Z with chi(u) = q, chi(v) = p, chi(x) = 1 up to a global sign.
struct TorusPresentations {
    Presentation standard;
    Presentation xa;
    BezoutPair rs;
};

inline TorusPresentations torusPresentations(const TorusKnotParams& t) {
    TorusPresentations out;
    out.rs = bezoutRS(t);
    out.standard.gens = {"u", "v"};
    out.standard.relators = {word({{0, t.p}, {1, -t.q}})};
    out.xa.gens = {"x", "v", "a"};
    const Word axq = word({{2, 1}, {0, t.q}});
    out.xa.relators = {
        freeReduce(concat(power(axq, t.p), word({{1, -t.q}}))),
        freeReduce(concat(concat(power(axq, -out.rs.s), word({{0, 1}})), word({{1, -out.rs.r}}))),
    };
    return out;
}

// mu_n = u^s v^r [(u^s v^r)^q u^-1]^n, freely reduced. In the x,a coordinates
// this is x a^-n; chi(mu_n) = s q + r p = 1 for every n.
inline Word muInUV(const TorusKnotParams& t, long long n) {
    BezoutPair rs = bezoutRS(t);
    Word head = word({{0, rs.s}, {1, rs.r}});
    Word block = concat(power(head, t.q), word({{0, -1}}));
    return freeReduce(concat(head, power(block, n)));
}

// ---- Z/p * Z/q --------------------------------------------------------------
// Alternating normal form: letters strictly alternate, u-exponents lie in
// {1..p-1} and v-exponents in {1..q-1}. Two words are equal in the free
// product iff their normal forms are literally identical syllable lists.

enum class FpLetter { U, V };

struct FpSyllable {
    FpLetter letter;
    long long e;
    bool operator==(const FpSyllable&) const = default;
};

struct FpWord {
    long long p = 0;
    long long q = 0;
    std::vector<FpSyllable> syls;
    bool operator==(const FpWord&) const = default;
    bool identity() const { return syls.empty(); }
};

inline std::string fpStr(const FpWord& w) {
    if (w.syls.empty()) return "1";
    std::string out;
    for (const auto& s : w.syls) {
        if (!out.empty()) out += ' ';
        out += s.letter == FpLetter::U ? 'u' : 'v';
        out += '^' + std::to_string(s.e);
    }
    return out;
}

inline FpWord fpNormalForm(const Word& w, const TorusKnotParams& t) {
    FpWord out;
    out.p = t.p;
    out.q = t.q;
    auto push = [&](FpLetter letter, long long e) {
        const long long m = letter == FpLetter::U ? t.p : t.q;
        if (!out.syls.empty() && out.syls.back().letter == letter) {
            e += out.syls.back().e;
            out.syls.pop_back();
        }
        e = ((e % m) + m) % m;
        if (e != 0) out.syls.push_back({letter, e});
    };
    for (const auto& s : w.syls) {
        if (s.g == 0)
            push(FpLetter::U, s.e);
        else if (s.g == 1)
            push(FpLetter::V, s.e);
        else
            throw MalformedInput("word is not over the torus generators u, v");
    }
    return out;
}

// Conjugate away matching first/last letters until they lie in distinct free
// factors (or the word has at most one syllable). The result is the shortest
// word in the conjugacy class, unique up to rotation.
inline FpWord cyclicReduce(const FpWord& w0) {
    FpWord w = w0;
    while (w.syls.size() >= 2 && w.syls.front().letter == w.syls.back().letter) {
        const FpLetter letter = w.syls.front().letter;
        const long long m = letter == FpLetter::U ? w.p : w.q;
        long long e = w.syls.back().e + w.syls.front().e;
        e = ((e % m) + m) % m;
        w.syls.erase(w.syls.begin());
        w.syls.pop_back();
        if (e != 0) w.syls.push_back({letter, e});
    }
    return w;
}

// Conjugacy in Z/p * Z/q: cyclically reduced words are conjugate iff one is a
// syllable rotation of the other; length <= 1 words iff they are identical
// (the free factors are abelian).
inline bool fpConjugateTest(const FpWord& a0, const FpWord& b0) {
    if (a0.p != b0.p || a0.q != b0.q)
        throw MalformedInput("conjugacy test across different free products");
    FpWord a = cyclicReduce(a0);
    FpWord b = cyclicReduce(b0);
    if (a.syls.size() != b.syls.size()) return false;
    if (a.syls.size() <= 1) return a.syls == b.syls;
    std::vector<FpSyllable> doubled = a.syls;
    doubled.insert(doubled.end(), a.syls.begin(), a.syls.end());
    for (std::size_t off = 0; off < a.syls.size(); ++off)
        if (std::equal(b.syls.begin(), b.syls.end(), doubled.begin() + off)) return true;
    return false;
}

// Rotation-invariant, hence a conjugacy invariant of cyclically reduced words.
inline std::size_t vSyllableCount(const FpWord& w) {
    std::size_t n = 0;
    for (const auto& s : w.syls)
        if (s.letter == FpLetter::V) ++n;
    return n;
}

// ---- symbolic killer proof --------------------------------------------------

struct TorusKillerProof {
    long long n = 0;
    BezoutPair rs;
    long long exponentOne = 0;  // p (n q + 1), from the first x,a relator
    long long exponentTwo = 0;  // -s (n q + 1) + n, from the second
    std::vector<std::string> transcript;
};

// Collapse of the x,a presentation after killing mu_n = x a^-n. Every step is
// an integer identity recomputed and checked here, so a surviving transcript
// is a killer proof independent of coset enumeration.
inline TorusKillerProof symbolicTorusKillerProof(const TorusKnotParams& t, long long n) {
    TorusKillerProof out;
    out.n = n;
    out.rs = bezoutRS(t);
    const long long p = t.p, q = t.q, r = out.rs.r, s = out.rs.s;
    auto check = [](bool ok, const char* what) {
        if (!ok) throw Error(std::string("torus killer transcript check failed: ") + what);
    };
    auto num = [](long long v) { return std::to_string(v); };

    check(r * p + s * q == 1, "bezout identity");
    out.transcript.push_back("bezout: r p + s q = (" + num(r) + ")*" + num(p) + " + " + num(s) +
                             "*" + num(q) + " = 1");
    out.transcript.push_back("kill mu_" + num(n) + " = x a^-" + num(n) + ": set x = a^" + num(n));

    out.exponentOne = p * (n * q + 1);
    out.transcript.push_back("relator (a x^q)^" + num(p) + " v^-" + num(q) + " becomes a^" +
                             num(out.exponentOne) + " = v^" + num(q) + "   [p(nq+1) = " +
                             num(out.exponentOne) + "]");
    out.exponentTwo = -s * (n * q + 1) + n;
    out.transcript.push_back("relator (a x^q)^-" + num(s) + " x v^-(" + num(r) +
                             ") becomes a^" + num(out.exponentTwo) + " = v^" + num(r) +
                             "   [-s(nq+1)+n = " + num(out.exponentTwo) + "]");

    const long long lhs = r * out.exponentOne;
    const long long rhs = q * out.exponentTwo;
    check(lhs - rhs == 1, "exponent difference (rp+sq)(nq+1) - nq = 1");
    out.transcript.push_back("raise to the r-th and q-th powers: v^" + num(r * q) + " = a^" +
                             num(lhs) + " = a^" + num(rhs) + ", and " + num(lhs) + " - (" +
                             num(rhs) + ") = 1, so a = 1");
    out.transcript.push_back("a = 1 gives x = a^" + num(n) + " = 1");
    check(std::gcd(q, std::llabs(r)) == 1, "gcd(q, r) = 1");
    out.transcript.push_back("then v^" + num(q) + " = 1 and v^" + num(r) +
                             " = 1 with gcd(q, r) = 1, so v = 1");
    out.transcript.push_back("(a=1, x=1, v=1)");
    return out;
}

}  // namespace kt
