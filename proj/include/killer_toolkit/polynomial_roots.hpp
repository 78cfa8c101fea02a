#pragma once
// Numeric roots of exact integer polynomials. The input is first split into
// squarefree factors (Yun), so multiplicities come out exact and the
// simultaneous iteration only ever sees simple roots. Durand-Kerner with a
// deterministic seeded start, then a Newton polish per root.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "int_polynomial.hpp"

namespace kt {

struct PolynomialRoot {
    std::complex<double> value;
    int multiplicity = 1;
    double residual = 0;  // |f(value)| / max |coeff of f|, f the squarefree factor
};

namespace detail {

inline std::vector<std::complex<double>> coeffsAsComplex(const IntPolynomial& f) {
    std::vector<std::complex<double>> c;
    c.reserve(f.c.size());
    for (const auto& v : f.c) c.emplace_back(v.convert_to<double>(), 0.0);
    return c;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// all roots of a squarefree integer polynomial
inline std::vector<std::complex<double>> durandKerner(const IntPolynomial& f) {
    const int d = f.degree();
    std::vector<std::complex<double>> c = coeffsAsComplex(f);
    double lead = std::abs(c.back());
    double maxRatio = 0;
    for (const auto& v : c) maxRatio = std::max(maxRatio, std::abs(v) / lead);
    const double radius = 1.0 + maxRatio;

    // deterministic start: spread on a circle, tiny seeded jitter to break
    // symmetric stalls
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        double angle = 2.0 * M_PI * (static_cast<double>(j) + 0.25) / static_cast<double>(d);
        z[static_cast<std::size_t>(j)] =
            radius * std::polar(1.0, angle) +
            std::complex<double>(jitter(rng), jitter(rng)) * radius;
    }

    const int maxIterations = 600;
    bool converged = false;
    for (int it = 0; it < maxIterations && !converged; ++it) {
        double worstStep = 0;
        for (int j = 0; j < d; ++j) {
            std::complex<double> denom = c.back();
            for (int k = 0; k < d; ++k)
                if (k != j) denom *= z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)];
            if (std::abs(denom) == 0.0) {
                // collision: nudge deterministically and keep going
                z[static_cast<std::size_t>(j)] += radius * 1e-6 * std::polar(1.0, 0.1 * j + it);
                worstStep = radius;
                continue;
            }
            std::complex<double> step = horner(c, z[static_cast<std::size_t>(j)]) / denom;
            z[static_cast<std::size_t>(j)] -= step;
            worstStep = std::max(worstStep, std::abs(step));
        }
        converged = worstStep < 1e-13 * radius;
    }
    if (!converged)
        throw ConvergenceFailure("root iteration stalled on " + f.str() + " (degree " +
                                 std::to_string(d) + ")");

    // Newton polish against the same factor
    std::vector<std::complex<double>> dc = coeffsAsComplex(f.derivative());
    for (auto& root : z)
        for (int it = 0; it < 40; ++it) {
            std::complex<double> fd = horner(dc, root);
            if (std::abs(fd) == 0.0) break;
            std::complex<double> step = horner(c, root) / fd;
            root -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(root))) break;
        }
    return z;
}

}  // namespace detail

// Roots with exact multiplicities, sorted by (real, imaginary). Residuals are
// measured against the squarefree factor each root was found on. Throws
// ConvergenceFailure when the iteration stalls and InvalidParameters on
// constant input.
inline std::vector<PolynomialRoot> polynomialRoots(const IntPolynomial& f,
                                                   double residualTolerance = 1e-9) {
    if (f.degree() < 1) throw InvalidParameters("root finding needs degree at least 1");
    std::vector<PolynomialRoot> out;
    auto factors = squarefreeDecomposition(f);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPolynomial& factor = factors[i];
        if (factor.degree() < 1) continue;
        double scale = 0;
        for (const auto& v : factor.c) scale = std::max(scale, std::abs(v.convert_to<double>()));
        auto roots = detail::durandKerner(factor);
        auto c = detail::coeffsAsComplex(factor);
        for (const auto& z : roots) {
            PolynomialRoot r;
            r.value = z;
            r.multiplicity = static_cast<int>(i) + 1;
            r.residual = std::abs(detail::horner(c, z)) / scale;
            if (r.residual > residualTolerance)
                throw ConvergenceFailure("root residual " + std::to_string(r.residual) +
                                         " exceeds tolerance on " + factor.str());
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const PolynomialRoot& a, const PolynomialRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}
