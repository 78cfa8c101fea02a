#pragma once
// Permutations on {0..d-1}. Convention: right action, so words act left to
// right and (a*b) means "apply a, then b": (a*b)[i] = b[a[i]].

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "word.hpp"

namespace kt {

struct Perm {
    std::vector<int> map;

    Perm() = default;
    explicit Perm(std::vector<int> m) : map(std::move(m)) {}

    static Perm identity(int degree) {
        Perm p;
        p.map.resize(static_cast<std::size_t>(degree));
        std::iota(p.map.begin(), p.map.end(), 0);
        return p;
    }

    int degree() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }

    bool isIdentity() const {
        for (int i = 0; i < degree(); ++i)
            if (map[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) { return a.map < b.map; }

    friend Perm operator*(const Perm& a, const Perm& b) {  // apply a, then b
        Perm c;
        c.map.resize(a.map.size());
        for (std::size_t i = 0; i < a.map.size(); ++i)
            c.map[i] = b.map[static_cast<std::size_t>(a.map[i])];
        return c;
    }

    Perm inverse() const {
        Perm c;
        c.map.resize(map.size());
        for (std::size_t i = 0; i < map.size(); ++i)
            c.map[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
        return c;
    }

    bool isEven() const {
        std::vector<bool> seen(map.size(), false);
        int parity = 0;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map[j])) {
                seen[j] = true;
                ++len;
            }
            parity ^= (len - 1) & 1;
        }
        return parity == 0;
    }

    long long order() const {
        std::vector<bool> seen(map.size(), false);
        long long ord = 1;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (seen[i]) continue;
            long long len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map[j])) {
                seen[j] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    // cycle notation, 1-based points, fixed points omitted: "(1 2 3)(4 5)"
    std::string cycleString() const {
        std::vector<bool> seen(map.size(), false);
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (seen[i] || map[i] == static_cast<int>(i)) continue;
            any = true;
            os << '(';
            bool first = true;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map[j])) {
                seen[j] = true;
                if (!first) os << ' ';
                first = false;
                os << j + 1;
            }
            os << ')';
        }
        return any ? os.str() : "()";
    }
};

inline Perm evalWord(const std::vector<Perm>& images, const Word& w) {
    Perm acc = Perm::identity(images.empty() ? 1 : images[0].degree());
    forEachLetter(w, [&](Gen g, int sign) {
        const Perm& p = images[static_cast<std::size_t>(g)];
        acc = sign > 0 ? acc * p : acc * p.inverse();
    });
    return acc;
}

// order of the subgroup generated by the given permutations (BFS closure)
inline long long subgroupOrder(const std::vector<Perm>& gens, int degree) {
    std::set<Perm> seen{Perm::identity(degree)};
    std::vector<Perm> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                Perm b = a * g;
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

}
