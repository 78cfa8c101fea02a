#pragma once
// Abelianization via Smith normal form over Z. The column transform V is
// tracked so a refutation can name an explicit cyclic quotient: with
// U*A*V = D, generator i maps to V[i][j] (mod D[j][j]) in coordinate j of
// Z^n / rowspace(A).

#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace kt {

using Matrix = std::vector<std::vector<long long>>;

// rows = relators, columns = generators, entries = exponent sums
inline Matrix relationMatrix(const Presentation& p) {
    Matrix a(p.relators.size(), std::vector<long long>(p.gens.size(), 0));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const auto& s : p.relators[i].syls)
            a[i][static_cast<std::size_t>(s.g)] += s.e;
    return a;
}

struct SmithNormalForm {
    std::vector<long long> diag;  // d_1 | d_2 | ... | d_r, all positive
    std::size_t cols = 0;
    Matrix v;  // cols x cols, unimodular

    std::size_t rank() const { return diag.size(); }
    std::size_t freeRank() const { return cols - diag.size(); }
    // invariant factors of the quotient group: diag entries != 1, then a 0
    // per free coordinate
    std::vector<long long> invariantFactors() const {
        std::vector<long long> out;
        for (long long d : diag)
            if (d != 1) out.push_back(d);
        for (std::size_t i = 0; i < freeRank(); ++i) out.push_back(0);
        return out;
    }
    bool quotientTrivial() const { return invariantFactors().empty(); }
    bool quotientIsZ() const {
        auto f = invariantFactors();
        return f.size() == 1 && f[0] == 0;
    }
};

inline SmithNormalForm smithNormalForm(Matrix a, std::size_t cols) {
    SmithNormalForm out;
    out.cols = cols;
    out.v.assign(cols, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = 1;
    const std::size_t rows = a.size();

    auto swapRows = [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); };
    auto swapCols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(out.v[r][i], out.v[r][j]);
    };
    auto addRow = [&](std::size_t dst, std::size_t src, long long k) {  // row dst += k*src
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] += k * a[src][c];
    };
    auto addCol = [&](std::size_t dst, std::size_t src, long long k) {  // col dst += k*src
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += k * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) out.v[r][dst] += k * out.v[r][src];
    };
    auto negateCol = [&](std::size_t c) {
        for (std::size_t r = 0; r < rows; ++r) a[r][c] = -a[r][c];
        for (std::size_t r = 0; r < cols; ++r) out.v[r][c] = -out.v[r][c];
    };

    std::size_t t = 0;  // current pivot position
    while (t < rows && t < cols) {
        // locate smallest nonzero entry in the remaining block
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        swapRows(t, pi);
        swapCols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            long long q = a[i][t] / a[t][t];
            if (q != 0) addRow(i, t, -q);
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            long long q = a[t][j] / a[t][t];
            if (q != 0) addCol(j, t, -q);
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick pivot

        // pivot must divide every later entry for the divisibility chain
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    addCol(t, j, 1);  // drags a non-multiple into column t
                    divides = false;
                }
        if (!divides) continue;

        if (a[t][t] < 0) negateCol(t);
        ++t;
    }
    for (std::size_t i = 0; i < t; ++i) out.diag.push_back(a[i][i]);
    return out;
}

inline SmithNormalForm abelianization(const Presentation& p) {
    return smithNormalForm(relationMatrix(p), p.gens.size());
}

inline bool abelianizationIsZ(const Presentation& p) {
    return abelianization(p).quotientIsZ();
}

// Explicit homomorphism onto Z/modulus killing w, with nontrivial image —
// exists iff the abelianization of <gens | relators, w> is nontrivial.
struct CyclicQuotient {
    long long modulus = 0;
    std::vector<long long> genImages;  // generator i -> genImages[i] (mod modulus)

    long long imageOf(const Word& w) const {
        long long acc = 0;
        for (const auto& s : w.syls) {
            long long c = (s.e % modulus) * (genImages[static_cast<std::size_t>(s.g)] % modulus);
            acc = (acc + c) % modulus;
        }
        return ((acc % modulus) + modulus) % modulus;
    }
};

inline long long smallestPrimeFactor(long long n) {
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return f;
    return n;
}

inline std::optional<CyclicQuotient> findCyclicQuotientKilling(const Presentation& p,
                                                               const Word& w) {
    requireWordOver(p, w);
    Matrix a = relationMatrix(p);
    a.emplace_back(p.gens.size(), 0);
    for (const auto& s : w.syls) a.back()[static_cast<std::size_t>(s.g)] += s.e;
    SmithNormalForm snf = smithNormalForm(a, p.gens.size());
    // coordinate j of the quotient is Z/diag[j] (or Z when j >= rank)
    long long modulus = 0;
    std::size_t j = 0;
    for (; j < snf.rank(); ++j)
        if (snf.diag[j] != 1) {
            modulus = smallestPrimeFactor(snf.diag[j]);
            break;
        }
    if (modulus == 0) {
        if (snf.freeRank() == 0) return std::nullopt;  // quotient trivial
        j = snf.rank();  // a free Z coordinate; reduce it mod 2
        modulus = 2;
    }
    CyclicQuotient q;
    q.modulus = modulus;
    for (std::size_t i = 0; i < p.gens.size(); ++i) {
        long long img = snf.v[i][j] % modulus;
        q.genImages.push_back((img + modulus) % modulus);
    }
    return q;
}

}
