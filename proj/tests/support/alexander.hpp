#pragma once

// Test-support oracle: Alexander polynomial of a knot-group presentation by
// Fox calculus. Every generator maps to t; the (n-1)x(n-1) minor of the
// Jacobian (drop last relator and last generator) is evaluated by a
// fraction-free Bareiss determinant and normalized to lowest coefficient
// nonzero, content 1, positive leading coefficient.

#include <map>
#include <vector>

#include "killer_toolkit/errors.hpp"
#include "killer_toolkit/int_polynomial.hpp"
#include "killer_toolkit/presentation.hpp"

namespace ktt {

// Fox derivatives of one relator w.r.t. every generator, as exponent->coeff
// maps (exponents may be negative).
inline std::vector<std::map<long long, kt::BigInt>> foxDerivatives(const kt::Word& w, int ngens) {
    std::vector<std::map<long long, kt::BigInt>> rows(static_cast<std::size_t>(ngens));
    long long prefix = 0;
    for (const auto& s : w.syls) {
        auto& row = rows[static_cast<std::size_t>(s.g)];
        if (s.e > 0)
            for (long long j = 0; j < s.e; ++j) row[prefix + j] += 1;
        else
            for (long long j = s.e; j < 0; ++j) row[prefix + j] -= 1;
        prefix += s.e;
    }
    return rows;
}

inline kt::IntPolynomial bareissDet(std::vector<std::vector<kt::IntPolynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return kt::IntPolynomial{1};
    kt::IntPolynomial prev{1};
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k].isZero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].isZero()) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = kt::divExact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Alexander polynomial, defined up to units; returned with nonzero constant
// term, content 1, positive leading coefficient. Requires a presentation with
// exactly one more relator than the determinant needs (Wirtinger: n gens, n
// relators, one redundant).
inline kt::IntPolynomial alexanderPolynomial(const kt::Presentation& p) {
    const int n = static_cast<int>(p.gens.size());
    if (static_cast<int>(p.relators.size()) != n)
        throw kt::MalformedInput("alexander oracle expects n generators and n relators");
    std::vector<std::vector<kt::IntPolynomial>> mat;
    for (int r = 0; r + 1 < n; ++r) {
        auto rows = foxDerivatives(p.relators[static_cast<std::size_t>(r)], n);
        long long mn = 0;
        for (const auto& row : rows)
            for (const auto& [e, c] : row) mn = std::min(mn, e);
        std::vector<kt::IntPolynomial> out;
        for (int g = 0; g + 1 < n; ++g) {
            long long hi = mn;
            for (const auto& [e, c] : rows[static_cast<std::size_t>(g)]) hi = std::max(hi, e);
            std::vector<kt::BigInt> coeffs(static_cast<std::size_t>(hi - mn) + 1, 0);
            for (const auto& [e, c] : rows[static_cast<std::size_t>(g)])
                coeffs[static_cast<std::size_t>(e - mn)] += c;
            out.emplace_back(kt::IntPolynomial(std::move(coeffs)));
        }
        mat.push_back(std::move(out));
    }
    kt::IntPolynomial det = bareissDet(std::move(mat));
    if (det.isZero()) return det;
    std::size_t low = 0;
    while (det.c[low] == 0) ++low;
    det.c.erase(det.c.begin(), det.c.begin() + static_cast<long long>(low));
    det = kt::primitivePart(det);
    if (det.leading() < 0) det = -det;
    return det;
}

inline long long knotDeterminant(const kt::IntPolynomial& alex) {
    kt::BigInt v = alex.evaluateExact(-1);
    if (v < 0) v = -v;
    return v.convert_to<long long>();
}

}  // namespace ktt
