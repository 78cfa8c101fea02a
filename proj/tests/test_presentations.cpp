#include <catch2/catch_amalgamated.hpp>

#include "killer_toolkit/presentation.hpp"

using namespace kt;

static Presentation trefoil() {
    Presentation p;
    p.gens = {"x", "y"};
    p.relators = {word({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}})};  // xyxy^-1x^-1y^-1
    p.meridians = {0, 1};
    return p;
}

TEST_CASE("parse and print round-trip") {
    std::string text =
        "# the trefoil\n"
        "gens: x y\n"
        "meridians: x y\n"
        "x y x y^-1 x^-1 y^-1\n";
    Presentation p = parsePresentation(text);
    REQUIRE(p.gens == std::vector<std::string>{"x", "y"});
    REQUIRE(p.meridians == std::vector<Gen>{0, 1});
    REQUIRE(p.relators.size() == 1);
    REQUIRE(p.relators[0] == trefoil().relators[0]);

    Presentation q = parsePresentation(printPresentation(p));
    REQUIRE(q.gens == p.gens);
    REQUIRE(q.relators == p.relators);
    REQUIRE(q.meridians == p.meridians);
}

TEST_CASE("parse words with exponents") {
    Presentation p = trefoil();
    REQUIRE(parseWord("x^-2 y x^2", p) == word({{0, -2}, {1, 1}, {0, 2}}));
    REQUIRE(parseWord("1", p).empty());
    REQUIRE(parseWord("x x^-1", p).empty());
    REQUIRE_THROWS_AS(parseWord("z", p), ParseError);
    REQUIRE_THROWS_AS(parseWord("x^two", p), ParseError);
}

TEST_CASE("parser rejects malformed input") {
    REQUIRE_THROWS_AS(parsePresentation("x y\n"), ParseError);          // no gens:
    REQUIRE_THROWS_AS(parsePresentation("gens: x x\n"), DuplicateGenerator);
    REQUIRE_THROWS_AS(parsePresentation("gens: x\nmeridians: q\n"), ParseError);
    REQUIRE_THROWS_AS(parsePresentation("gens: 1\n"), ParseError);
}

TEST_CASE("tietzeAddGenerator") {
    Presentation p = trefoil();
    // a := y x^-1
    Presentation q = tietzeAddGenerator(p, "a", word({{1, 1}, {0, -1}}));
    REQUIRE(q.gens == std::vector<std::string>{"x", "y", "a"});
    REQUIRE(q.relators.size() == 2);
    // new relator a x y^-1
    REQUIRE(q.relators[1] == word({{2, 1}, {0, 1}, {1, -1}}));
    REQUIRE_THROWS_AS(tietzeAddGenerator(p, "x", word({{1, 1}})), DuplicateGenerator);
}

TEST_CASE("tietzeEliminate inverts tietzeAddGenerator") {
    Presentation p = trefoil();
    Presentation q = tietzeAddGenerator(p, "a", word({{1, 1}, {0, -1}}));
    // eliminate a again via its defining relator
    Presentation back = tietzeEliminate(q, 2, 1);
    REQUIRE(back.gens == p.gens);
    REQUIRE(back.relators.size() == 1);
    REQUIRE(freelyEqual(back.relators[0], p.relators[0]));
    REQUIRE(back.meridians == p.meridians);
}

TEST_CASE("tietzeEliminate substitutes the solved word") {
    // <x,y,a | r, y (a x)^-1>  eliminate y  ->  <x,a | r[y := a x]>
    Presentation p;
    p.gens = {"x", "y", "a"};
    p.relators = {
        word({{1, 1}, {0, 1}, {1, 1}, {0, -1}, {1, -1}, {0, -1}}),  // y x y x^-1 y^-1 x^-1
        word({{1, 1}, {0, -1}, {2, -1}}),                           // y (a x)^-1 = y x^-1 a^-1
    };
    Presentation q = tietzeEliminate(p, 1, 1);
    REQUIRE(q.gens == std::vector<std::string>{"x", "a"});
    REQUIRE(q.relators.size() == 1);
    // a x^2 a x^-1 a^-1 x^-1 with x=0, a=1 after reindexing
    REQUIRE(q.relators[0] == word({{1, 1}, {0, 2}, {1, 1}, {0, -1}, {1, -1}, {0, -1}}));
}

TEST_CASE("tietzeEliminate preconditions") {
    Presentation p;
    p.gens = {"x", "y"};
    p.relators = {word({{0, 1}, {1, 1}, {0, 1}})};  // x y x
    REQUIRE_THROWS_AS(tietzeEliminate(p, 0, 0), NotSolvable);  // x occurs twice
    REQUIRE_NOTHROW(tietzeEliminate(p, 1, 0));                 // y occurs once
    Presentation q = tietzeEliminate(p, 1, 0);
    REQUIRE(q.gens == std::vector<std::string>{"x"});
    REQUIRE(q.relators.empty());
}

TEST_CASE("cyclicallyEqual") {
    Word a = word({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    // rotate by two letters
    Word b = word({{0, -1}, {1, -1}, {0, 1}, {1, 1}});
    REQUIRE(cyclicallyEqual(a, b));
    REQUIRE_FALSE(cyclicallyEqual(a, inverseOf(a)));
    REQUIRE(cyclicallyEqual(word({{0, 3}}), word({{0, 1}, {1, 1}, {0, -1}, {0, 3}, {0, 1}, {1, -1}, {0, -1}})));
}
