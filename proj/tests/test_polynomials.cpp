#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "killer_toolkit/int_polynomial.hpp"
#include "killer_toolkit/polynomial_roots.hpp"

using namespace kt;

static IntPolynomial randomPoly(std::mt19937& rng, int maxDeg) {
    std::uniform_int_distribution<int> degDist(0, maxDeg), coeffDist(-5, 5);
    std::vector<BigInt> c(static_cast<std::size_t>(degDist(rng)) + 1);
    for (auto& v : c) v = coeffDist(rng);
    return IntPolynomial(std::move(c));
}

TEST_CASE("ring arithmetic basics") {
    IntPolynomial a({1, 2});      // 1 + 2w
    IntPolynomial b({0, 0, 3});   // 3w^2
    REQUIRE((a + b) == IntPolynomial({1, 2, 3}));
    REQUIRE((a - a).isZero());
    REQUIRE((a * b) == IntPolynomial({0, 0, 3, 6}));
    REQUIRE((-a) == IntPolynomial({-1, -2}));
    REQUIRE(a.degree() == 1);
    REQUIRE(IntPolynomial().degree() == -1);
    REQUIRE(IntPolynomial({0, 0}).isZero());  // trailing zeros trimmed
    REQUIRE(a.evaluateExact(3) == 7);
    REQUIRE(IntPolynomial({2, -1}).str() == "-w + 2");
    REQUIRE(IntPolynomial({1, 0, -3, 1}).str() == "w^3 - 3*w^2 + 1");
    REQUIRE(IntPolynomial().str() == "0");
}

TEST_CASE("derivative and content") {
    IntPolynomial f({4, 0, 6});  // 4 + 6w^2
    REQUIRE(f.derivative() == IntPolynomial({0, 12}));
    REQUIRE(content(f) == 2);
    REQUIRE(primitivePart(f) == IntPolynomial({2, 0, 3}));
    REQUIRE(primitivePart(IntPolynomial({0, -2})) == IntPolynomial({0, 1}));  // sign fixed
}

TEST_CASE("exact division") {
    IntPolynomial a({-1, 0, 1});  // (w-1)(w+1)
    REQUIRE(divExact(a, IntPolynomial({1, 1})) == IntPolynomial({-1, 1}));
    REQUIRE(divExact(a, IntPolynomial({-1, 1})) == IntPolynomial({1, 1}));
    REQUIRE_THROWS_AS(divExact(a, IntPolynomial({1, 2})), Error);   // not exact
    REQUIRE_THROWS_AS(divExact(a, IntPolynomial()), Error);         // by zero
    REQUIRE(divExact(IntPolynomial(), a).isZero());
}

TEST_CASE("gcd via the subresultant sequence") {
    IntPolynomial common({1, 1});  // w + 1
    IntPolynomial a = common * IntPolynomial({1, 0, 1});
    IntPolynomial b = common * IntPolynomial({-3, 1});
    REQUIRE(polyGcd(a, b) == common);
    REQUIRE(polyGcd(b, a) == common);
    REQUIRE(polyGcd(a, IntPolynomial()) == primitivePart(a));
    // coprime inputs give a constant
    REQUIRE(polyGcd(IntPolynomial({1, 1}), IntPolynomial({2, 1})).degree() == 0);
    // integer contents participate
    IntPolynomial c2 = BigInt(2) * common;
    IntPolynomial c4 = BigInt(4) * (common * common);
    REQUIRE(polyGcd(c2, c4) == BigInt(2) * common);
}

TEST_CASE("gcd contract on random products") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial a = randomPoly(rng, 4), b = randomPoly(rng, 4), c = randomPoly(rng, 3);
        if (c.isZero()) continue;
        IntPolynomial g = polyGcd(a * c, b * c);
        if ((a * c).isZero() && (b * c).isZero()) continue;
        // primitive part of c divides the gcd
        if (g.isZero()) continue;
        REQUIRE_NOTHROW(divExact(g, primitivePart(c)));
    }
}

TEST_CASE("squarefree decomposition") {
    IntPolynomial w = IntPolynomial::variable();
    IntPolynomial f = w * w * (w + IntPolynomial({1})) * (w + IntPolynomial({1})) *
                      (w + IntPolynomial({1})) * IntPolynomial({1, 0, 1});
    auto factors = squarefreeDecomposition(f);
    REQUIRE(factors.size() == 3);
    REQUIRE(factors[0] == IntPolynomial({1, 0, 1}));  // multiplicity 1: w^2 + 1
    REQUIRE(factors[1] == w);                          // multiplicity 2
    REQUIRE(factors[2] == IntPolynomial({1, 1}));      // multiplicity 3
    // squarefree input comes back whole
    auto single = squarefreeDecomposition(IntPolynomial({-6, 1, 1}));
    REQUIRE(single.size() == 1);
    REQUIRE(single[0] == IntPolynomial({-6, 1, 1}));
}

TEST_CASE("roots of a factored cubic") {
    // (w-1)(w-2)(w-3) = -6 + 11w - 6w^2 + w^3
    auto roots = polynomialRoots(IntPolynomial({-6, 11, -6, 1}));
    REQUIRE(roots.size() == 3);
    REQUIRE(roots[0].value.real() == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(roots[1].value.real() == Catch::Approx(2.0).margin(1e-10));
    REQUIRE(roots[2].value.real() == Catch::Approx(3.0).margin(1e-10));
    for (const auto& r : roots) {
        REQUIRE(r.multiplicity == 1);
        REQUIRE(std::abs(r.value.imag()) < 1e-10);
        REQUIRE(r.residual < 1e-12);
    }
}

TEST_CASE("complex pair") {
    auto roots = polynomialRoots(IntPolynomial({1, 0, 1}));  // w^2 + 1
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0].value.imag() == Catch::Approx(-1.0).margin(1e-12));
    REQUIRE(roots[1].value.imag() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("multiplicities are exact") {
    // (w-1)^2 (w+2) = w^3 - 3w + 2
    auto roots = polynomialRoots(IntPolynomial({2, -3, 0, 1}));
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0].value.real() == Catch::Approx(-2.0).margin(1e-10));
    REQUIRE(roots[0].multiplicity == 1);
    REQUIRE(roots[1].value.real() == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(roots[1].multiplicity == 2);
}

TEST_CASE("degree-12 all-real case matches an independent solver") {
    // computed with numpy.roots on the same coefficients
    IntPolynomial f({1, 78, 1001, 5005, 12870, 19448, 18564, 11628, 4845, 1330, 231, 23, 1});
    const double expected[12] = {-3.937166, -3.752613, -3.457937, -3.071654,
                                 -2.618034, -2.125581, -1.625237, -1.148441,
                                 -0.725152, -0.381966, -0.140447, -0.015771};
    auto roots = polynomialRoots(f);
    REQUIRE(roots.size() == 12);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        REQUIRE(roots[i].value.real() == Catch::Approx(expected[i]).margin(1e-5));
        REQUIRE(std::abs(roots[i].value.imag()) < 1e-8);
    }
}

TEST_CASE("root finding rejects constants") {
    REQUIRE_THROWS_AS(polynomialRoots(IntPolynomial({7})), InvalidParameters);
    REQUIRE_THROWS_AS(polynomialRoots(IntPolynomial()), InvalidParameters);
}

TEST_CASE("root finding is deterministic") {
    IntPolynomial f({1, 2, -3, 1, 4, 1});
    auto a = polynomialRoots(f);
    auto b = polynomialRoots(f);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].value == b[i].value);
        REQUIRE(a[i].multiplicity == b[i].multiplicity);
    }
}
