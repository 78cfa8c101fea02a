#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "killer_toolkit/parabolic.hpp"
#include "killer_toolkit/polynomial_roots.hpp"

using namespace kt;

TEST_CASE("parabolic generator matrices multiply exactly") {
    PolyMat22 x = parabolicX(), y = parabolicY();
    REQUIRE(x * parabolicXInverse() == PolyMat22::identity());
    REQUIRE(y * parabolicYInverse() == PolyMat22::identity());
    PolyMat22 yx = y * x;
    REQUIRE(yx.a == IntPolynomial({1}));
    REQUIRE(yx.b == IntPolynomial({1}));
    REQUIRE(yx.c == IntPolynomial({0, 1}));
    REQUIRE(yx.d == IntPolynomial({1, 1}));
    // word evaluation against the hand product
    REQUIRE(parabolicWordMatrix(word({{1, 1}, {0, 1}})) == yx);
    REQUIRE(parabolicWordMatrix(word({{0, 1}, {0, -1}})) == PolyMat22::identity());
    REQUIRE_THROWS_AS(parabolicWordMatrix(word({{2, 1}})), Error);
}

TEST_CASE("known small polynomials") {
    // frozen from an independent exact computation
    REQUIRE(rileyPolynomial(twoBridgeKnot(3, 1)) == IntPolynomial({1, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(5, 1)) == IntPolynomial({1, 3, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(5, 3)) == IntPolynomial({1, -1, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(7, 1)) == IntPolynomial({1, 6, 5, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(7, 3)) == IntPolynomial({1, 2, 1, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(7, 5)) == IntPolynomial({1, 2, -3, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(9, 1)) == IntPolynomial({1, 10, 15, 7, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(11, 3)) == IntPolynomial({1, -1, 3, 8, 5, 1}));
    REQUIRE(rileyPolynomial(twoBridgeKnot(13, 5)) == IntPolynomial({1, 1, 2, 4, 5, 3, 1}));
}

TEST_CASE("degree always matches half of p minus one") {
    for (long long p = 3; p <= 21; p += 2)
        for (long long q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            REQUIRE(rileyPolynomial(twoBridgeKnot(p, q)).degree() == (p - 1) / 2);
        }
}

TEST_CASE("torus rows have positive coefficients and negative real roots") {
    for (long long p = 5; p <= 25; p += 2) {
        IntPolynomial f = rileyPolynomial(twoBridgeKnot(p, 1));
        for (const auto& coeff : f.c) REQUIRE(coeff > 0);
        for (const auto& root : polynomialRoots(f)) {
            REQUIRE(classifyRoot(root.value) == RootClass::RealNegative);
            REQUIRE(root.multiplicity == 1);
        }
    }
}

TEST_CASE("the figure-eight parameters are honestly nonreal") {
    IntPolynomial f = rileyPolynomial(twoBridgeKnot(5, 3));
    auto roots = polynomialRoots(f);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) REQUIRE(classifyRoot(r.value) == RootClass::NonReal);
    REQUIRE(roots[1].value.real() == Catch::Approx(0.5).margin(1e-9));
    REQUIRE(roots[1].value.imag() == Catch::Approx(std::sqrt(3.0) / 2).margin(1e-9));
}

TEST_CASE("every numeric root satisfies the relator") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{
             {3, 1}, {5, 3}, {7, 3}, {9, 5}, {11, 3}, {13, 5}}) {
        TwoBridgeKnot k = twoBridgeKnot(p, q);
        auto entries = parabolicRelatorEntries(k);
        for (const auto& root : polynomialRoots(rileyPolynomial(k))) {
            double worst = 0;
            for (const auto& e : entries)
                worst = std::max(worst, std::abs(e.evaluate(root.value)));
            REQUIRE(worst < 1e-8);
        }
    }
}

TEST_CASE("assignment residuals are reported against the coefficient scale") {
    IntPolynomial f = rileyPolynomial(twoBridgeKnot(25, 1));
    for (const auto& root : polynomialRoots(f)) REQUIRE(root.residual < 1e-10);
}
