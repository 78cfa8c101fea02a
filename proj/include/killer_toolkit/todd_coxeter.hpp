#pragma once
// Todd-Coxeter coset enumeration, HLT strategy: scan-and-fill over relators
// with immediate deduction processing and union-find coincidence merging.
// Completed results carry a closed, compacted table that an independent
// validator re-checks before the result is returned.

#include <chrono>
#include <cstdint>
#include <queue>
#include <vector>

#include "presentation.hpp"

namespace kt {

struct EnumerationLimits {
    long long maxCosets = 1'000'000;
    long long maxTimeMillis = 30'000;
};

struct EnumerationResult {
    bool completed = false;
    long long index = 0;         // subgroup index when completed
    long long cosetsDefined = 0;  // total cosets ever defined
    long long maxLive = 0;        // high-water mark of simultaneously live cosets
    std::vector<std::vector<int>> table;  // closed table, rows = cosets, cols = 2*gen(+/-)
};

// Walk a closed table: coset * word. Column convention: 2g forward, 2g+1 inverse.
inline int traceWord(const std::vector<std::vector<int>>& table, int start, const Word& w) {
    int c = start;
    forEachLetter(w, [&](Gen g, int sign) {
        c = table[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * g + (sign < 0 ? 1 : 0))];
    });
    return c;
}

// Independent replay check: table closed and mutually inverse, relators fix
// every coset, subgroup generators fix coset 0.
inline bool validateCosetTable(const Presentation& p, const std::vector<Word>& subgroupGens,
                               const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    const std::size_t cols = 2 * p.gens.size();
    if (n == 0) return false;
    for (const auto& row : table) {
        if (row.size() != cols) return false;
        for (int e : row)
            if (e < 0 || e >= n) return false;
    }
    for (int c = 0; c < n; ++c)
        for (std::size_t g = 0; g < p.gens.size(); ++g) {
            int d = table[static_cast<std::size_t>(c)][2 * g];
            if (table[static_cast<std::size_t>(d)][2 * g + 1] != c) return false;
        }
    for (int c = 0; c < n; ++c)
        for (const auto& r : p.relators)
            if (traceWord(table, c, r) != c) return false;
    for (const auto& w : subgroupGens)
        if (traceWord(table, 0, w) != 0) return false;
    return true;
}

namespace detail {

class CosetEnumerator {
  public:
    CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroupGens,
                    EnumerationLimits limits)
        : ncols_(2 * p.gens.size()), limits_(limits) {
        p.check();
        for (const auto& w : subgroupGens) requireWordOver(p, w);

        auto toLetters = [&](const Word& w) {
            std::vector<int> cols;
            forEachLetter(w, [&](Gen g, int sign) { cols.push_back(2 * g + (sign < 0 ? 1 : 0)); });
            return cols;
        };
        for (const auto& r : p.relators) {
            auto letters = toLetters(freeReduce(r));
            if (!letters.empty()) relators_.push_back(std::move(letters));
        }
        // short relators first: cheap deductions propagate before long scans
        std::stable_sort(relators_.begin(), relators_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (const auto& w : subgroupGens) {
            auto letters = toLetters(freeReduce(w));
            if (!letters.empty()) subgroup_.push_back(std::move(letters));
        }
    }

    EnumerationResult run() {
        start_ = std::chrono::steady_clock::now();
        newCoset();  // coset 0 = the subgroup
        bool limited = false;
        try {
            for (const auto& w : subgroup_) scanAndFill(0, w);
            for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
                if (!live(c)) continue;
                for (const auto& r : relators_) {
                    scanAndFill(c, r);
                    if (!live(c)) break;
                }
                if (!live(c)) continue;
                for (std::size_t col = 0; col < ncols_; ++col)
                    if (entry(c, col) < 0) {
                        int d = newCoset();
                        set(c, col, d);
                        set(d, inv(col), c);
                    }
            }
        } catch (const Abort&) {
            limited = true;
        }

        EnumerationResult res;
        res.cosetsDefined = static_cast<long long>(parent_.size());
        res.maxLive = maxLive_;
        if (limited) return res;

        // compact to live cosets and replay-check
        std::vector<int> renumber(parent_.size(), -1);
        int live_n = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c)
            if (live(static_cast<int>(c))) renumber[c] = live_n++;
        res.table.assign(static_cast<std::size_t>(live_n), std::vector<int>(ncols_, -1));
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (renumber[c] < 0) continue;
            for (std::size_t col = 0; col < ncols_; ++col) {
                int d = entry(static_cast<int>(c), col);
                if (d < 0) return res;  // not closed: treat as not completed (cannot happen)
                res.table[static_cast<std::size_t>(renumber[c])][col] = renumber[static_cast<std::size_t>(rep(d))];
            }
        }
        res.completed = true;
        res.index = live_n;
        return res;
    }

  private:
    struct Abort {};

    std::size_t ncols_;
    EnumerationLimits limits_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> subgroup_;
    std::vector<int> parent_;   // union-find; parent_[c] == c iff live
    std::vector<int> tab_;      // flat ncols_ per coset, -1 undefined
    long long liveCount_ = 0, maxLive_ = 0;
    std::chrono::steady_clock::time_point start_;

    static std::size_t inv(std::size_t col) { return col ^ 1; }

    bool live(int c) { return parent_[static_cast<std::size_t>(c)] == c; }

    int rep(int c) {
        while (parent_[static_cast<std::size_t>(c)] != c) {
            parent_[static_cast<std::size_t>(c)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
            c = parent_[static_cast<std::size_t>(c)];
        }
        return c;
    }

    int entry(int c, std::size_t col) { return tab_[static_cast<std::size_t>(c) * ncols_ + col]; }
    void set(int c, std::size_t col, int d) { tab_[static_cast<std::size_t>(c) * ncols_ + col] = d; }

    int newCoset() {
        if (static_cast<long long>(parent_.size()) >= limits_.maxCosets) throw Abort{};
        if (parent_.size() % 4096 == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (ms > limits_.maxTimeMillis) throw Abort{};
        }
        int c = static_cast<int>(parent_.size());
        parent_.push_back(c);
        tab_.resize(tab_.size() + ncols_, -1);
        ++liveCount_;
        maxLive_ = std::max(maxLive_, liveCount_);
        return c;
    }

    void merge(int a, int b, std::queue<int>& q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        --liveCount_;
        q.push(b);
    }

    void coincidence(int a, int b) {
        std::queue<int> q;
        merge(a, b, q);
        while (!q.empty()) {
            int dead = q.front();
            q.pop();
            for (std::size_t col = 0; col < ncols_; ++col) {
                int target = entry(dead, col);
                if (target < 0) continue;
                set(dead, col, -1);
                // drop the reverse edge before transferring
                if (entry(target, inv(col)) == dead) set(target, inv(col), -1);
                int u = rep(dead), v = rep(target);
                int uCol = entry(u, col);
                int vInv = entry(v, inv(col));
                if (uCol >= 0)
                    merge(v, uCol, q);
                else if (vInv >= 0)
                    merge(u, vInv, q);
                else {
                    set(u, col, v);
                    set(v, inv(col), u);
                }
            }
        }
    }

    // entries may reference merged-away cosets; reads resolve to representatives
    int entryRep(int c, std::size_t col) {
        int d = entry(c, col);
        return d < 0 ? -1 : rep(d);
    }

    void scanAndFill(int c, const std::vector<int>& w) {
        int f = c, b = c;
        std::size_t i = 0, j = w.size() - 1;
        while (true) {
            while (i <= j && entryRep(f, static_cast<std::size_t>(w[i])) >= 0)
                f = entryRep(f, static_cast<std::size_t>(w[i])), ++i;
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entryRep(b, inv(static_cast<std::size_t>(w[j]))) >= 0) {
                b = entryRep(b, inv(static_cast<std::size_t>(w[j])));
                if (j == 0) { --j; break; }  // unsigned guard; j>=i rechecked below
                --j;
            }
            if (j + 1 <= i) {  // pointers crossed (j may have wrapped)
                coincidence(f, b);
                return;
            }
            if (i == j) {
                set(f, static_cast<std::size_t>(w[i]), b);
                set(b, inv(static_cast<std::size_t>(w[i])), f);
                return;
            }
            int d = newCoset();
            set(f, static_cast<std::size_t>(w[i]), d);
            set(d, inv(static_cast<std::size_t>(w[i])), f);
        }
    }
};

}  // namespace detail

inline EnumerationResult toddCoxeter(const Presentation& p, const std::vector<Word>& subgroupGens,
                                     EnumerationLimits limits = {}) {
    detail::CosetEnumerator enumerator(p, subgroupGens, limits);
    EnumerationResult res = enumerator.run();
    if (res.completed && !validateCosetTable(p, subgroupGens, res.table))
        throw Error("coset table failed replay validation (enumerator bug)");
    return res;
}

}
