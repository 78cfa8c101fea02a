#pragma once
// Two-bridge knot groups. For parameters (p, q) the group has the standard
// 2-generator presentation < x, y | w x w^-1 y^-1 > where
//   w = x^e1 y^e2 x^e3 ... y^e(p-1),   ei = (-1)^floor(i*q/p).
// x and y are meridians. The relator is stored with orientation normalized
// so its exponent sums are (-1 on x, +1 on y): killing the pseudo-meridian
// mu_n then collapses the rewritten relator to a single positive letter.

#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace kt {

struct TwoBridgeKnot {
    long long p = 0;
    long long q = 0;
};

inline TwoBridgeKnot twoBridgeKnot(long long p, long long q) {
    if (p < 3 || p % 2 == 0)
        throw InvalidParameters("two-bridge parameter p must be odd and at least 3, got " +
                                std::to_string(p));
    if (q <= 0 || q >= p)
        throw InvalidParameters("two-bridge parameter q must satisfy 0 < q < p, got " +
                                std::to_string(q));
    // normal form takes q odd; the parabolic machinery (Riley polynomial,
    // trace table) is only valid there
    if (q % 2 == 0)
        throw InvalidParameters("two-bridge parameter q must be odd, got " + std::to_string(q));
    long long a = p, b = q;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    if (a != 1)
        throw InvalidParameters("two-bridge parameters must be coprime, got gcd " +
                                std::to_string(a));
    return {p, q};
}

// the p-1 exponents of w, alternating letters x, y, x, y, ...
inline std::vector<int> twoBridgeSigns(const TwoBridgeKnot& k) {
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(k.p - 1));
    for (long long i = 1; i < k.p; ++i) signs.push_back((i * k.q / k.p) % 2 == 0 ? 1 : -1);
    return signs;
}

inline Word twoBridgeWord(const TwoBridgeKnot& k) {
    std::vector<Syllable> syls;
    auto signs = twoBridgeSigns(k);
    for (std::size_t i = 0; i < signs.size(); ++i)
        syls.push_back({i % 2 == 0 ? 0 : 1, signs[i]});  // odd positions x, even y (1-based)
    return {freeReduce(std::move(syls))};
}

// raw relator w x w^-1 y^-1; exponent sums are always (+1, -1)
inline Word twoBridgeRelatorRaw(const TwoBridgeKnot& k) {
    Word w = twoBridgeWord(k);
    return concat(concat(w, word({{0, 1}})), concat(inverseOf(w), word({{1, -1}})));
}

// Fix the relator orientation by inversion only: a two-bridge relator has
// exponent sums (+1, -1) or (-1, +1) on (x, y); we pin (-1, +1).
inline Word normalizeRelatorOrientation(const Word& relator, Gen x, Gen y) {
    long long ex = exponentSum(relator, x), ey = exponentSum(relator, y);
    if (ex == -1 && ey == 1) return relator;
    if (ex == 1 && ey == -1) return inverseOf(relator);
    throw NotNormalizable("relator exponent sums (" + std::to_string(ex) + ", " +
                          std::to_string(ey) + ") are not (+-1, -+1)");
}

inline Presentation twoBridgePresentation(const TwoBridgeKnot& k) {
    Presentation pres;
    pres.gens = {"x", "y"};
    pres.meridians = {0, 1};
    pres.relators = {normalizeRelatorOrientation(twoBridgeRelatorRaw(k), 0, 1)};
    pres.check();
    return pres;
}

// --- rewriting onto the meridian x and the commutator-like a = y x^-1 -----

struct XATerm {
    long long k = 0;  // conjugating exponent: the term is x^-k a^eps x^k
    int epsilon = 1;
};

// Greedy split of a relator over {x, a} into conjugates of a-letters.
// Valid exactly when the total x-exponent vanishes.
inline std::vector<XATerm> xaDecomposition(const Word& relator, Gen x, Gen a) {
    std::vector<XATerm> terms;
    long long prefix = 0;  // running x-exponent
    for (const auto& s : relator.syls) {
        if (s.g == x) {
            prefix += s.e;
        } else if (s.g == a) {
            int sign = s.e > 0 ? 1 : -1;
            for (long long i = 0; i < std::llabs(s.e); ++i) terms.push_back({-prefix, sign});
        } else {
            throw DecompositionFailure("relator contains a letter outside {x, a}");
        }
    }
    if (prefix != 0)
        throw DecompositionFailure("x-exponent of the relator is " + std::to_string(prefix) +
                                   ", so conjugate terms cannot absorb every x");
    return terms;
}

inline Word recomposeXA(const std::vector<XATerm>& terms, Gen x, Gen a) {
    Word out;
    for (const auto& t : terms) {
        std::vector<Syllable> syls{{x, -t.k}, {a, t.epsilon}, {x, t.k}};
        out = concat(out, Word{freeReduce(std::move(syls))});
    }
    return out;
}

struct TwoBridgeXA {
    Presentation pres;           // gens x, a
    Word relator;                // single relator over x, a
    std::vector<XATerm> terms;   // its conjugate decomposition
    std::vector<std::string> transcript;  // the generator-calculus steps taken
};

// Substitute y = a x through the presentation: introduce a with defining
// relator a x y^-1, then eliminate y. Records the steps taken.
inline TwoBridgeXA rewriteToXA(const TwoBridgeKnot& k) {
    TwoBridgeXA out;
    Presentation pres = twoBridgePresentation(k);
    out.transcript.push_back("start: " + printWord(pres.relators[0], pres) + " = 1");
    pres = tietzeAddGenerator(pres, "a", parseWord("y x^-1", pres));
    out.transcript.push_back("introduce a = y x^-1 (defining relator " +
                             printWord(pres.relators[1], pres) + ")");
    pres = tietzeEliminate(pres, pres.genIndex("y"), 1);
    out.transcript.push_back("eliminate y = a x: relator becomes " +
                             printWord(pres.relators[0], pres));
    out.pres = pres;
    out.relator = pres.relators[0];
    out.terms = xaDecomposition(out.relator, pres.genIndex("x"), pres.genIndex("a"));
    std::string sum;
    long long total = 0;
    for (const auto& t : out.terms) total += t.epsilon;
    out.transcript.push_back("conjugate decomposition has " + std::to_string(out.terms.size()) +
                             " terms with exponent sum " + std::to_string(total));
    return out;
}

// pseudo-meridian mu_n in the (x, a) coordinates: x a^n
inline Word muWordXA(long long n, Gen x = 0, Gen a = 1) {
    return concat(word({{x, 1}}), power(word({{a, 1}}), n));
}

// Killing mu_n = x a^n forces x = a^-n; each conjugate term x^-k a^e x^k
// becomes a^(nk) a^e a^(-nk) = a^e, so the relator collapses to a^(sum eps).
// Returns the collapsed word (a single positive a when the decomposition has
// exponent sum one); throws when the collapse is not a lone letter.
inline Word symbolicCollapse(const std::vector<XATerm>& terms, long long n, Gen a = 1) {
    std::vector<Syllable> syls;
    for (const auto& t : terms) {
        syls.push_back({a, n * t.k});
        syls.push_back({a, t.epsilon});
        syls.push_back({a, -n * t.k});
    }
    Word collapsed{freeReduce(std::move(syls))};
    if (collapsed.syls.size() != 1 || collapsed.syls[0].e != 1)
        throw CollapseFailure("collapse left " + std::to_string(collapsed.letterCount()) +
                              " letters instead of a single generator");
    return collapsed;
}

}
