#pragma once
// Free-group words stored run-length: a word is a list of syllables g^e.
// mu_n = x(yx^-1)^n grows linearly in n, so syllable form keeps every
// operation O(syllables), not O(letters).

#include <cstdlib>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace kt {

using Gen = int;  // index into the owning presentation's generator list

struct Syllable {
    Gen g = 0;
    long long e = 0;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Word {
    std::vector<Syllable> syls;

    bool empty() const { return syls.empty(); }
    std::size_t syllableCount() const { return syls.size(); }
    long long letterCount() const {
        long long n = 0;
        for (const auto& s : syls) n += std::llabs(s.e);
        return n;
    }
    friend bool operator==(const Word&, const Word&) = default;
};

// Merge adjacent syllables of the same generator, dropping empty ones.
// A single left-to-right pass over a stack is enough: merging two
// neighbours can only expose one earlier neighbour.
inline Word freeReduce(const std::vector<Syllable>& raw) {
    Word out;
    for (const auto& s : raw) {
        if (s.e == 0) continue;
        if (!out.syls.empty() && out.syls.back().g == s.g) {
            out.syls.back().e += s.e;
            if (out.syls.back().e == 0) out.syls.pop_back();
        } else {
            out.syls.push_back(s);
        }
    }
    return out;
}

inline Word freeReduce(const Word& w) { return freeReduce(w.syls); }

inline Word word(std::initializer_list<Syllable> syls) {
    return freeReduce(std::vector<Syllable>(syls));
}

inline Word inverseOf(const Word& w) {
    Word out;
    out.syls.reserve(w.syls.size());
    for (auto it = w.syls.rbegin(); it != w.syls.rend(); ++it)
        out.syls.push_back({it->g, -it->e});
    return out;  // already reduced if w was
}

inline Word concat(const Word& a, const Word& b) {
    std::vector<Syllable> raw = a.syls;
    raw.insert(raw.end(), b.syls.begin(), b.syls.end());
    return freeReduce(raw);
}

inline Word power(const Word& w, long long n) {
    Word base = n < 0 ? inverseOf(w) : w;
    long long k = n < 0 ? -n : n;
    Word out;
    for (long long i = 0; i < k; ++i) out = concat(out, base);
    return out;
}

// g w g^-1
inline Word conjugate(const Word& w, const Word& by) {
    return concat(concat(by, w), inverseOf(by));
}

inline long long exponentSum(const Word& w, Gen g) {
    long long n = 0;
    for (const auto& s : w.syls)
        if (s.g == g) n += s.e;
    return n;
}

inline bool contains(const Word& w, Gen g) {
    for (const auto& s : w.syls)
        if (s.g == g) return true;
    return false;
}

// Replace every occurrence of g^e by replacement^e and freely reduce.
inline Word substitute(const Word& w, Gen g, const Word& replacement) {
    if (contains(replacement, g))
        throw SelfReferentialSubstitution("replacement word contains the substituted generator");
    std::vector<Syllable> raw;
    for (const auto& s : w.syls) {
        if (s.g != g) {
            raw.push_back(s);
            continue;
        }
        Word rep = power(replacement, s.e);
        raw.insert(raw.end(), rep.syls.begin(), rep.syls.end());
    }
    return freeReduce(raw);
}

struct PseudoMeridianSpec {
    Gen x = 0;
    Gen y = 0;
    long long n = 0;
};

// mu_n = x (y x^-1)^n, freely reduced; n may be negative.
inline Word muWord(const PseudoMeridianSpec& spec) {
    Word a = word({{spec.y, 1}, {spec.x, -1}});
    return concat(word({{spec.x, 1}}), power(a, spec.n));
}

inline Word muWord(Gen x, Gen y, long long n) { return muWord({x, y, n}); }

// Cyclic reduction: strip matching conjugating ends.
inline Word cyclicReduce(const Word& w0) {
    Word w = freeReduce(w0);
    while (w.syls.size() >= 2 && w.syls.front().g == w.syls.back().g) {
        auto& f = w.syls.front();
        auto& b = w.syls.back();
        // cancel as much of the shorter end as possible
        if ((f.e > 0) == (b.e > 0)) break;  // same sign cannot cancel... but
        // opposite signs: move the smaller magnitude into the larger
        long long cancel = std::min(std::llabs(f.e), std::llabs(b.e));
        f.e += (f.e > 0 ? -cancel : cancel);
        b.e += (b.e > 0 ? -cancel : cancel);
        if (b.e == 0) w.syls.pop_back();
        if (!w.syls.empty() && w.syls.front().e == 0) w.syls.erase(w.syls.begin());
        w = freeReduce(w.syls);
    }
    // a fully cyclic word like x y x (front/back same gen, same sign) merges
    // only in the cyclic sense; for free-group cyclic reduction that case is
    // already reduced, so nothing more to do.
    return w;
}

// Letter-by-letter visitor: f(gen, sign) once per letter, left to right.
template <class F>
void forEachLetter(const Word& w, F&& f) {
    for (const auto& s : w.syls) {
        int sign = s.e > 0 ? 1 : -1;
        long long n = s.e > 0 ? s.e : -s.e;
        for (long long i = 0; i < n; ++i) f(s.g, sign);
    }
}

}
