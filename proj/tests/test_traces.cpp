#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "killer_toolkit/parabolic.hpp"

using namespace kt;

TEST_CASE("symbolic traces at small index") {
    REQUIRE(traceRecurrence(0) == IntPolynomial({2}));
    REQUIRE(traceRecurrence(1) == IntPolynomial({2}));
    REQUIRE(traceRecurrence(2) == IntPolynomial({2, -2}));         // 2(1 - w)
    REQUIRE(traceRecurrence(3) == IntPolynomial({2, -6, 2}));      // 2(1 - 3w + w^2)
    REQUIRE(traceRecurrence(4) == IntPolynomial({2, -12, 10, -2}));  // 2(1 - 6w + 5w^2 - w^3)
}

TEST_CASE("matrix product and recurrence agree exactly") {
    for (long long n = -8; n <= 12; ++n) REQUIRE(traceDirect(n) == traceRecurrence(n));
}

TEST_CASE("negative indices reflect") {
    // tau_{-n} = tau_{n+1} is forced by the symmetric recurrence
    for (long long n = 0; n <= 8; ++n) REQUIRE(traceRecurrence(-n) == traceRecurrence(n + 1));
}

TEST_CASE("trefoil parameter values") {
    const long long expected[] = {2, 2, 4, 10, 26, 68, 178};
    for (long long n = 0; n <= 6; ++n)
        REQUIRE(traceRecurrence(n).evaluateExact(-1) == expected[n]);
    // and numerically
    for (long long n = 0; n <= 6; ++n) {
        auto t = traceNumeric(n, {-1.0, 0.0});
        REQUIRE(t.real() == Catch::Approx(static_cast<double>(expected[n])).epsilon(1e-12));
        REQUIRE(std::abs(t.imag()) < 1e-12);
    }
}

TEST_CASE("characteristic roots") {
    SECTION("hyperbolic real case") {
        auto cr = characteristicRoots({-1.0, 0.0});  // z^2 - 3z + 1
        REQUIRE(cr.lambda.real() == Catch::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
        REQUIRE(std::abs(cr.lambda * cr.lambdaInverse - 1.0) < 1e-12);
        REQUIRE(std::abs(cr.lambda) >= std::abs(cr.lambdaInverse));
    }
    SECTION("elliptic tie breaks to the upper half plane") {
        auto cr = characteristicRoots({2.0, 0.0});  // z^2 + 1
        REQUIRE(cr.lambda.imag() == Catch::Approx(1.0).epsilon(1e-12));
        REQUIRE(cr.lambdaInverse.imag() == Catch::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("closed form agrees with the recurrence") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(-5.0, 5.0);
    int checked = 0;
    while (checked < 60) {
        std::complex<double> omega(re(rng), re(rng));
        if (std::abs(omega) > 5.0) continue;
        auto cr = characteristicRoots(omega);
        if (std::abs(cr.lambda - 1.0) < 0.05 || std::abs(cr.lambda + 1.0) < 0.05) continue;
        for (long long n = 0; n <= 20; ++n) {
            auto a = closedFormTrace(n, omega);
            auto b = traceNumeric(n, omega);
            REQUIRE(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
        }
        ++checked;
    }
}

TEST_CASE("degenerate parameter is refused") {
    REQUIRE_THROWS_AS(closedFormTrace(3, {4.0, 0.0}), DegenerateLambda);
}

TEST_CASE("root classification") {
    REQUIRE(classifyRoot({-1.0, 0.0}) == RootClass::RealNegative);
    REQUIRE(classifyRoot({0.5, 0.8660254}) == RootClass::NonReal);
    REQUIRE(classifyRoot({3.99, 0.0}) == RootClass::RealPositiveUnitCase);
    REQUIRE(classifyRoot({4.0, 0.0}) == RootClass::RealPositiveUnitCase);
    REQUIRE(classifyRoot({5.2, 0.0}) == RootClass::RealOther);
    REQUIRE(classifyRoot({0.0, 0.0}) == RootClass::RealOther);
    REQUIRE(classifyRoot({-2.0, 1e-12}) == RootClass::RealNegative);  // tolerance scales
}

TEST_CASE("separation certificate for the trefoil parameter") {
    auto cert = distinctTraceCertificate({-1.0, 0.0}, 1e-12, 2, 50);
    REQUIRE(cert.separated);
    REQUIRE(cert.traces.size() == 49);
    REQUIRE(cert.worstMargin > 0);
    for (double b : cert.bounds) REQUIRE(b >= 0);
}

TEST_CASE("separation certificate for a nonreal parameter") {
    // figure-eight parameter (1 + i sqrt 3)/2
    std::complex<double> omega(0.5, std::sqrt(3.0) / 2);
    auto cert = distinctTraceCertificate(omega, 1e-12, 2, 50);
    REQUIRE(cert.separated);
}

TEST_CASE("separation honestly fails when traces coincide") {
    // at omega = 0 every trace equals 2
    auto cert = distinctTraceCertificate({0.0, 0.0}, 1e-12, 2, 6);
    REQUIRE_FALSE(cert.separated);
    REQUIRE(cert.worstMargin <= 0);
}

TEST_CASE("certificate input validation") {
    REQUIRE_THROWS_AS(distinctTraceCertificate({-1.0, 0.0}, 1e-12, -1, 5), InvalidParameters);
    REQUIRE_THROWS_AS(distinctTraceCertificate({-1.0, 0.0}, 1e-12, 5, 2), InvalidParameters);
}
