#pragma once

// Planar diagram (PD) codes for knot diagrams. A crossing is X(a,b,c,d)
// with a the incoming under-strand edge and b,c,d following counterclockwise
// around the crossing; edge labels run 1..2n consecutively along the knot.
// Validation rejects anything that is not a single-component classical
// diagram (bad labels, broken orientation, links, virtual codes).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "killer_toolkit/errors.hpp"

namespace kt {

struct PDCode {
    std::vector<std::array<long long, 4>> crossings;

    long long edgeCount() const { return 2 * static_cast<long long>(crossings.size()); }
    long long succ(long long e) const { return e % edgeCount() + 1; }
    bool operator==(const PDCode&) const = default;
};

inline void requireCrossing(const PDCode& pd, std::size_t i) {
    if (i >= pd.crossings.size())
        throw IndexOutOfRange("crossing index " + std::to_string(i) + " out of range (diagram has " +
                              std::to_string(pd.crossings.size()) + " crossings)");
}

namespace detail {

// one strand passing one crossing; `in`/`out` are edge labels
struct Passage {
    std::size_t crossing = 0;
    bool under = false;
    long long in = 0, out = 0;
};

// The passage entered by each edge (index in-edge - 1). Building this checks
// every combinatorial invariant except planarity: labels 1..2n twice each,
// under-strand consecutive, over direction inferable, every edge entering
// exactly one crossing with out == succ(in) (which forces one component).
inline std::vector<Passage> pdTraversal(const PDCode& pd) {
    const long long m = pd.edgeCount();
    if (m == 0) throw InvalidDiagram("diagram has no crossings");
    std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& x : pd.crossings)
        for (long long e : x) {
            if (e < 1 || e > m)
                throw InvalidDiagram("edge label " + std::to_string(e) + " out of range 1.." +
                                     std::to_string(m));
            ++seen[static_cast<std::size_t>(e)];
        }
    for (long long e = 1; e <= m; ++e)
        if (seen[static_cast<std::size_t>(e)] != 2)
            throw InvalidDiagram("edge label " + std::to_string(e) + " appears " +
                                 std::to_string(seen[static_cast<std::size_t>(e)]) +
                                 " times (want exactly 2)");

    std::vector<Passage> byEdge(static_cast<std::size_t>(m));
    std::vector<char> filled(static_cast<std::size_t>(m), 0);
    auto put = [&](std::size_t c, bool under, long long in, long long out) {
        if (filled[static_cast<std::size_t>(in) - 1])
            throw InvalidDiagram("edge " + std::to_string(in) + " enters two crossings (link?)");
        byEdge[static_cast<std::size_t>(in) - 1] = {c, under, in, out};
        filled[static_cast<std::size_t>(in) - 1] = 1;
    };
    for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
        auto [a, b, cc, d] = pd.crossings[c];
        if (cc != pd.succ(a))
            throw InvalidDiagram("crossing " + std::to_string(c) +
                                 ": under-strand edges are not consecutive");
        put(c, true, a, cc);
        const bool bIn = d == pd.succ(b), dIn = b == pd.succ(d);
        if (bIn && !dIn)
            put(c, false, b, d);
        else if (dIn && !bIn)
            put(c, false, d, b);
        else if (bIn && dIn)  // only in 1- or 2-edge degenerate diagrams
            filled[static_cast<std::size_t>(b) - 1] ? put(c, false, d, b) : put(c, false, b, d);
        else
            throw InvalidDiagram("crossing " + std::to_string(c) +
                                 ": over-strand orientation cannot be inferred");
    }
    for (long long e = 1; e <= m; ++e) {
        if (!filled[static_cast<std::size_t>(e) - 1])
            throw InvalidDiagram("edge " + std::to_string(e) + " never enters a crossing");
        if (byEdge[static_cast<std::size_t>(e) - 1].out != pd.succ(e))
            throw InvalidDiagram("edge " + std::to_string(e) +
                                 " does not continue into its successor (link?)");
    }
    return byEdge;
}

// Faces of the rotation system; a classical (planar) diagram has n + 2.
inline std::size_t faceCount(const PDCode& pd) {
    const std::size_t n = pd.crossings.size();
    std::map<long long, std::vector<std::size_t>> halves;  // edge -> half-edge ids (4v+slot)
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t s = 0; s < 4; ++s) halves[pd.crossings[v][s]].push_back(4 * v + s);
    std::vector<std::size_t> mate(4 * n, 0);
    for (auto& [e, hs] : halves) {
        mate[hs[0]] = hs[1];
        mate[hs[1]] = hs[0];
    }
    std::vector<char> visited(4 * n, 0);
    std::size_t faces = 0;
    for (std::size_t h0 = 0; h0 < 4 * n; ++h0) {
        if (visited[h0]) continue;
        ++faces;
        for (std::size_t h = h0; !visited[h];) {
            visited[h] = 1;
            std::size_t mm = mate[h];
            h = (mm / 4) * 4 + (mm % 4 + 1) % 4;
        }
    }
    return faces;
}

// Per-crossing view in strand terms. sign is +1 when the over strand enters
// at tuple position d, -1 when it enters at b.
struct CrossingView {
    long long underIn = 0, underOut = 0, overIn = 0, overOut = 0;
    int sign = 0;
};

inline CrossingView viewCrossing(const PDCode& pd, const std::vector<Passage>& traversal,
                                 std::size_t i) {
    CrossingView v;
    for (const auto& p : traversal) {
        if (p.crossing != i) continue;
        if (p.under) {
            v.underIn = p.in;
            v.underOut = p.out;
        } else {
            v.overIn = p.in;
            v.overOut = p.out;
        }
    }
    v.sign = v.overIn == pd.crossings[i][3] ? +1 : -1;
    return v;
}

}  // namespace detail

inline void validatePD(const PDCode& pd) {
    (void)detail::pdTraversal(pd);
    if (detail::faceCount(pd) != pd.crossings.size() + 2)
        throw InvalidDiagram("PD code is not planar (virtual diagram?)");
}

inline int crossingSign(const PDCode& pd, std::size_t i) {
    requireCrossing(pd, i);
    auto tr = detail::pdTraversal(pd);
    return detail::viewCrossing(pd, tr, i).sign;
}

// Arcs: maximal edge runs uninterrupted by an underpass. Arc ids are 0-based,
// ordered by the smallest edge label on the arc; result maps edge -> arc id
// (index 0 unused). An extra break after edge `extraBreak` refines the arcs.
namespace detail {
inline std::vector<int> groupArcs(const PDCode& pd, long long extraBreak = 0) {
    const long long m = pd.edgeCount();
    std::vector<char> breakAfter(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& x : pd.crossings) breakAfter[static_cast<std::size_t>(x[0])] = 1;
    if (extraBreak > 0) breakAfter[static_cast<std::size_t>(extraBreak)] = 1;
    std::vector<int> arcOf(static_cast<std::size_t>(m) + 1, -1);
    int aid = 0;
    for (long long e = 1; e <= m; ++e) {
        arcOf[static_cast<std::size_t>(e)] = aid;
        if (breakAfter[static_cast<std::size_t>(e)]) ++aid;
    }
    if (!breakAfter[static_cast<std::size_t>(m)]) {  // wrap: last run continues into edge 1
        int last = arcOf[static_cast<std::size_t>(m)];
        for (long long e = m; e >= 1 && arcOf[static_cast<std::size_t>(e)] == last; --e)
            arcOf[static_cast<std::size_t>(e)] = 0;
    }
    std::map<int, int> remap;  // walk order = min-edge order
    for (long long e = 1; e <= m; ++e) {
        int& id = arcOf[static_cast<std::size_t>(e)];
        auto it = remap.find(id);
        if (it == remap.end()) it = remap.emplace(id, static_cast<int>(remap.size())).first;
        id = it->second;
    }
    return arcOf;
}
}  // namespace detail

inline std::vector<int> arcLabels(const PDCode& pd) {
    validatePD(pd);
    return detail::groupArcs(pd);
}

// ---- text format -----------------------------------------------------------
// X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)   whitespace and commas interchangeable;
// '#' starts a comment.

inline PDCode parsePD(const std::string& text) {
    PDCode pd;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(msg + " at offset " + std::to_string(pos));
    };
    auto skip = [&] {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto number = [&]() -> long long {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an edge label");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != 'X' && text[pos] != 'x') fail("expected 'X'");
        ++pos;
        skip();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        std::array<long long, 4> tup{};
        for (int k = 0; k < 4; ++k) {
            skip();
            tup[static_cast<std::size_t>(k)] = number();
        }
        skip();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        pd.crossings.push_back(tup);
        skip();
    }
    if (pd.crossings.empty()) fail("no crossings in PD code");
    validatePD(pd);
    return pd;
}

inline std::string printPD(const PDCode& pd) {
    std::string out;
    for (const auto& x : pd.crossings) {
        if (!out.empty()) out += ' ';
        out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
               std::to_string(x[2]) + "," + std::to_string(x[3]) + ")";
    }
    return out;
}

// Named diagrams, one per line: "trefoil: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
inline std::vector<std::pair<std::string, PDCode>> parseNamedPDs(const std::string& text) {
    std::vector<std::pair<std::string, PDCode>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("expected 'name: X(...) ...' on line: " + line);
            continue;
        }
        std::string name = line.substr(0, colon);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (name.empty()) throw ParseError("empty diagram name before ':'");
        out.emplace_back(name, parsePD(line.substr(colon + 1)));
    }
    if (out.empty()) throw ParseError("no named diagrams in input");
    return out;
}

// Switch over and under strands at crossing i: rotate the tuple so the old
// over-in edge becomes the under-in entry. Involution; flips the sign.
inline PDCode crossingChange(const PDCode& pd, std::size_t i) {
    requireCrossing(pd, i);
    auto tr = detail::pdTraversal(pd);
    auto v = detail::viewCrossing(pd, tr, i);
    PDCode out = pd;
    auto& x = out.crossings[i];
    if (v.sign < 0)
        x = {x[1], x[2], x[3], x[0]};
    else
        x = {x[3], x[0], x[1], x[2]};
    return out;
}

// Insert |t| full twists in the two arcs leaving crossing i (the under-out
// and over-out strands), immediately downstream: 2|t| new crossings of equal
// sign, appended after the existing ones. t drives the twist chirality;
// t = 0 returns the diagram unchanged. Which strand crosses over first is
// forced by planarity and depends on the host crossing's sign.
inline PDCode twistArcs(const PDCode& pd, std::size_t i, long long t) {
    requireCrossing(pd, i);
    auto tr = detail::pdTraversal(pd);
    validatePD(pd);
    if (t == 0) return pd;
    auto v = detail::viewCrossing(pd, tr, i);
    const long long eZ = v.underOut, eW = v.overOut;  // distinct in any valid diagram
    const long long m = pd.edgeCount();
    const long long k = 2 * std::llabs(t);

    std::map<long long, std::vector<long long>> segs;  // old edge -> new labels, strand order
    long long next = 1;
    for (long long e = 1; e <= m; ++e) {
        long long pieces = (e == eZ || e == eW) ? k + 1 : 1;
        for (long long j = 0; j < pieces; ++j) segs[e].push_back(next++);
    }

    PDCode out;
    for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
        auto vc = detail::viewCrossing(pd, tr, c);
        long long aN = segs[vc.underIn].back(), cN = segs[vc.underOut].front();
        long long oInN = segs[vc.overIn].back(), oOutN = segs[vc.overOut].front();
        out.crossings.push_back(vc.sign > 0 ? std::array{aN, oOutN, cN, oInN}
                                            : std::array{aN, oInN, cN, oOutN});
    }
    const bool startW = (t > 0) != (v.sign > 0);
    for (long long j = 0; j < k; ++j) {
        long long zIn = segs[eZ][static_cast<std::size_t>(j)];
        long long zOut = segs[eZ][static_cast<std::size_t>(j) + 1];
        long long wIn = segs[eW][static_cast<std::size_t>(j)];
        long long wOut = segs[eW][static_cast<std::size_t>(j) + 1];
        const bool wOver = j % 2 == 0 ? startW : !startW;
        long long uIn = wOver ? zIn : wIn, uOut = wOver ? zOut : wOut;
        long long oIn = wOver ? wIn : zIn, oOut = wOver ? wOut : zOut;
        out.crossings.push_back(t > 0 ? std::array{uIn, oOut, uOut, oIn}
                                      : std::array{uIn, oIn, uOut, oOut});
    }
    try {
        validatePD(out);
    } catch (const Error& e) {
        throw Error(std::string("twistArcs produced an invalid diagram (bug): ") + e.what());
    }
    return out;
}

}  // namespace kt
