#pragma once
// Finite presentations <gens | relators> with an optional marked subset of
// meridianal generators. Presentations own their generator namespace; words
// refer to generators by index.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace kt {

struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    std::vector<Gen> meridians;  // indices into gens; may be empty

    Gen genIndex(std::string_view name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return static_cast<Gen>(i);
        return -1;
    }

    void check() const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (gens[i] == gens[j])
                    throw DuplicateGenerator(gens[i]);
        auto inRange = [&](Gen g) { return g >= 0 && g < static_cast<Gen>(gens.size()); };
        for (const auto& r : relators)
            for (const auto& s : r.syls)
                if (!inRange(s.g))
                    throw MalformedInput("relator uses undeclared generator index");
        for (Gen m : meridians)
            if (!inRange(m))
                throw MalformedInput("meridian index out of range");
    }
};

inline void requireWordOver(const Presentation& p, const Word& w) {
    for (const auto& s : w.syls)
        if (s.g < 0 || s.g >= static_cast<Gen>(p.gens.size()))
            throw MalformedInput("word uses undeclared generator index");
}

// Tietze move 1: introduce g with a definition; adds relator g * defn^-1.
inline Presentation tietzeAddGenerator(const Presentation& p, const std::string& name,
                                       const Word& definition) {
    if (p.genIndex(name) >= 0) throw DuplicateGenerator(name);
    requireWordOver(p, definition);
    Presentation out = p;
    Gen g = static_cast<Gen>(out.gens.size());
    out.gens.push_back(name);
    out.relators.push_back(concat(word({{g, 1}}), inverseOf(definition)));
    return out;
}

// Tietze move 2: eliminate g using relator relIdx, which must contain g in
// exactly one syllable with exponent +-1. Solves for g, substitutes
// everywhere, drops the relator and the generator (indices above g shift
// down by one).
inline Presentation tietzeEliminate(const Presentation& p, Gen g, std::size_t relIdx) {
    if (g < 0 || g >= static_cast<Gen>(p.gens.size()))
        throw MalformedInput("no such generator");
    if (relIdx >= p.relators.size())
        throw MalformedInput("no such relator");
    const Word r = freeReduce(p.relators[relIdx]);

    int occurrences = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < r.syls.size(); ++i) {
        if (r.syls[i].g == g) {
            occurrences += static_cast<int>(std::llabs(r.syls[i].e));
            at = i;
        }
    }
    if (occurrences != 1)
        throw NotSolvable("generator must occur exactly once with exponent +-1");

    // r = u g^s v = 1  =>  g^s = u^-1 v^-1  =>  g = (v u)^-s ... careful:
    // g^s = u^-1 v^-1, so for s=+1, g = u^-1 v^-1; for s=-1, g = v u.
    Word u, v;
    u.syls.assign(r.syls.begin(), r.syls.begin() + at);
    v.syls.assign(r.syls.begin() + at + 1, r.syls.end());
    long long s = r.syls[at].e;
    Word solved = s == 1 ? concat(inverseOf(u), inverseOf(v)) : concat(v, u);

    auto drop = [&](Gen h) { return h > g ? h - 1 : h; };
    Presentation out;
    out.gens = p.gens;
    out.gens.erase(out.gens.begin() + g);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i == relIdx) continue;
        Word w = substitute(p.relators[i], g, solved);
        for (auto& syl : w.syls) syl.g = drop(syl.g);
        out.relators.push_back(freeReduce(w));
    }
    for (Gen m : p.meridians)
        if (m != g) out.meridians.push_back(drop(m));
    return out;
}

// ---- text format ----------------------------------------------------------
// gens: x y a
// meridians: x y          (optional)
// x y x y^-1 x^-1 y^-1    (one relator per line, syllable notation)
// '#' starts a comment; blank lines ignored.

inline std::string printWord(const Word& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w.syls) {
        if (!first) os << ' ';
        first = false;
        os << p.gens.at(static_cast<std::size_t>(s.g));
        if (s.e != 1) os << '^' << s.e;
    }
    return os.str();
}

inline Word parseWord(const std::string& text, const Presentation& p) {
    std::istringstream is(text);
    std::vector<Syllable> raw;
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;  // the empty word
        std::string name = tok;
        long long e = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string exp = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                e = std::stoll(exp, &used);
                if (used != exp.size()) throw std::invalid_argument(exp);
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + exp + "' in word");
            }
        }
        Gen g = p.genIndex(name);
        if (g < 0) throw ParseError("undeclared generator '" + name + "' in word");
        raw.push_back({g, e});
    }
    return freeReduce(raw);
}

inline std::string stripComment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blankLine(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline Presentation parsePresentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Presentation p;
    bool sawGens = false;
    std::vector<std::string> relatorLines;
    while (std::getline(is, line)) {
        line = stripComment(line);
        if (blankLine(line)) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "gens:") {
            if (sawGens) throw ParseError("duplicate gens: line");
            sawGens = true;
            std::string name;
            while (ls >> name) {
                if (name == "1" || name.find('^') != std::string::npos)
                    throw ParseError("reserved or malformed generator name '" + name + "'");
                p.gens.push_back(name);
            }
            if (p.gens.empty()) throw ParseError("gens: line declares no generators");
        } else if (head == "meridians:") {
            if (!sawGens) throw ParseError("meridians: before gens:");
            std::string name;
            while (ls >> name) {
                Gen g = p.genIndex(name);
                if (g < 0) throw ParseError("unknown meridian '" + name + "'");
                p.meridians.push_back(g);
            }
        } else {
            relatorLines.push_back(line);
        }
    }
    if (!sawGens) throw ParseError("missing gens: line");
    p.check();
    for (const auto& rl : relatorLines) p.relators.push_back(parseWord(rl, p));
    return p;
}

inline std::string printPresentation(const Presentation& p) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : p.gens) os << ' ' << g;
    os << '\n';
    if (!p.meridians.empty()) {
        os << "meridians:";
        for (Gen m : p.meridians) os << ' ' << p.gens.at(static_cast<std::size_t>(m));
        os << '\n';
    }
    for (const auto& r : p.relators) os << printWord(r, p) << '\n';
    return os.str();
}

// Free equality (reduce and compare) and equality up to cyclic rotation,
// used when comparing independently derived relators.
inline bool freelyEqual(const Word& a, const Word& b) {
    return freeReduce(a) == freeReduce(b);
}

inline bool cyclicallyEqual(const Word& a, const Word& b) {
    Word ca = cyclicReduce(a), cb = cyclicReduce(b);
    auto lettersOf = [](const Word& w) {
        std::vector<int> out;
        forEachLetter(w, [&](Gen g, int s) { out.push_back(s * (g + 1)); });
        return out;
    };
    std::vector<int> la = lettersOf(ca), lb = lettersOf(cb);
    if (la.size() != lb.size()) return false;
    if (la.empty()) return true;
    for (std::size_t r = 0; r < la.size(); ++r) {
        bool match = true;
        for (std::size_t i = 0; i < la.size() && match; ++i)
            match = la[(r + i) % la.size()] == lb[i];
        if (match) return true;
    }
    return false;
}

}
