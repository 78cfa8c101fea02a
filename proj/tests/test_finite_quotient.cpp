#include <catch2/catch_amalgamated.hpp>

#include "killer_toolkit/finite_quotient.hpp"

using namespace kt;

static Presentation trefoil() {
    return parsePresentation(
        "gens: x y\n"
        "meridians: x\n"
        "y x y x^-1 y^-1 x^-1\n");
}

TEST_CASE("default search space is sorted by group order") {
    auto space = defaultSearchSpace();
    REQUIRE(space.size() == 6);
    for (std::size_t i = 0; i + 1 < space.size(); ++i)
        REQUIRE(space[i].order() < space[i + 1].order());
    REQUIRE(space.front().name() == "S3");
    REQUIRE(space.back().name() == "S7");
    REQUIRE(space.back().order() == 5040);
    REQUIRE(QuotientTarget{QuotientTarget::Kind::Alternating, 5}.order() == 60);
}

TEST_CASE("cube of the trefoil meridian dies in a 3-element quotient") {
    Presentation p = trefoil();
    Word w = word({{0, 3}});  // x^3
    auto cert = findFiniteQuotientKilling(p, w);
    REQUIRE(cert.has_value());
    CHECK(cert->target.degree == 3);
    CHECK(cert->imageOrder == 3);  // both generators land on the same 3-cycle
    REQUIRE(replayCertificate(p, *cert));
    REQUIRE(evalWord(cert->images, w).isIdentity());
    REQUIRE_FALSE(evalWord(cert->images, word({{0, 1}})).isIdentity());
}

TEST_CASE("no finite quotient kills a free generator") {
    Presentation p;
    p.gens = {"x"};
    auto cert = findFiniteQuotientKilling(p, word({{0, 1}}));
    REQUIRE_FALSE(cert.has_value());
}

TEST_CASE("pseudo-meridians of the trefoil survive every small quotient") {
    // they are killers, so no nontrivial quotient can kill them
    Presentation p = trefoil();
    std::vector<QuotientTarget> space = {{QuotientTarget::Kind::Symmetric, 3},
                                         {QuotientTarget::Kind::Symmetric, 4},
                                         {QuotientTarget::Kind::Symmetric, 5}};
    for (long long n = -2; n <= 2; ++n) {
        auto cert = findFiniteQuotientKilling(p, muWord(0, 1, n), space);
        REQUIRE_FALSE(cert.has_value());
    }
}

TEST_CASE("replay rejects corrupted certificates") {
    Presentation p = trefoil();
    auto cert = findFiniteQuotientKilling(p, word({{0, 3}}));
    REQUIRE(cert.has_value());

    SECTION("tampered image") {
        auto bad = *cert;
        bad.images[0] = Perm::identity(bad.target.degree);
        REQUIRE_FALSE(replayCertificate(p, bad));  // relator or word now fails
    }
    SECTION("wrong word") {
        auto bad = *cert;
        bad.word = word({{0, 1}});
        REQUIRE_FALSE(replayCertificate(p, bad));
    }
    SECTION("wrong arity") {
        auto bad = *cert;
        bad.images.pop_back();
        REQUIRE_FALSE(replayCertificate(p, bad));
    }
}

TEST_CASE("hom enumeration for the trefoil into S3") {
    // up to conjugation: x on a transposition admits y in any of the three
    // transpositions; x on a 3-cycle forces y = x; x = id forces triviality
    Presentation p = trefoil();
    auto homs = enumerateQuotientHoms(p, {QuotientTarget::Kind::Symmetric, 3});
    REQUIRE(homs.size() == 4);
    for (const auto& images : homs) {
        for (const auto& r : p.relators) REQUIRE(evalWord(images, r).isIdentity());
        bool nontrivial = false;
        for (const auto& q : images) nontrivial = nontrivial || !q.isIdentity();
        REQUIRE(nontrivial);
    }
}

TEST_CASE("parity restriction still finds the parity-respecting homs") {
    // x^3 has odd exponent sum on x, so any hom killing it sends x to an even
    // permutation; enumeration with that parity word must keep exactly the
    // all-even homs (the 3-cycle pair) and drop the transposition ones
    Presentation p = trefoil();
    auto homs = enumerateQuotientHoms(p, {QuotientTarget::Kind::Symmetric, 3}, word({{0, 3}}));
    REQUIRE(homs.size() == 1);
    REQUIRE(homs[0][0].isEven());
    REQUIRE(homs[0][1].isEven());
}

TEST_CASE("extra leaf checks filter the search") {
    Presentation p = trefoil();
    auto hom = searchQuotientHom(p, {QuotientTarget::Kind::Symmetric, 3}, std::nullopt,
                                 [](const std::vector<Perm>& images) {
                                     return !(images[0] * images[1] == images[1] * images[0]);
                                 });
    REQUIRE(hom.has_value());
    REQUIRE_FALSE((*hom)[0] * (*hom)[1] == (*hom)[1] * (*hom)[0]);
}

TEST_CASE("triangle quotient lands exactly at A5") {
    // <x,y | x^2, y^3> with w = (xy)^5: any quotient killing w needs an
    // element of order 5, so S3 and S4 yield nothing and A5 is the first hit
    Presentation p;
    p.gens = {"x", "y"};
    p.relators = {word({{0, 2}}), word({{1, 3}})};
    Word w = power(concat(word({{0, 1}}), word({{1, 1}})), 5);
    auto cert = findFiniteQuotientKilling(p, w);
    REQUIRE(cert.has_value());
    CHECK(cert->target.kind == QuotientTarget::Kind::Alternating);
    CHECK(cert->target.degree == 5);
    CHECK(cert->imageOrder == 60);
    REQUIRE(replayCertificate(p, *cert));
}

TEST_CASE("search is deterministic") {
    Presentation p = trefoil();
    auto a = findFiniteQuotientKilling(p, word({{0, 3}}));
    auto b = findFiniteQuotientKilling(p, word({{0, 3}}));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    REQUIRE(a->images == b->images);
    REQUIRE(a->target == b->target);
}
