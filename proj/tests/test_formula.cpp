#include <doctest.h>

#include <filesystem>

#include "majpart/formula.hpp"
#include "support/oracles.hpp"

using namespace majpart;

namespace {

CnfFormula make_formula(int vars, std::vector<std::array<int, 3>> clauses) {
    CnfFormula f;
    f.num_vars = vars;
    f.clauses = std::move(clauses);
    return f;
}

}  // namespace

TEST_CASE("dimacs round trip") {
    const CnfFormula f = make_formula(3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, -3}, {-1, -2, 3}});
    const std::string text = serialize_dimacs(f);
    CHECK(text == "p cnf 3 4\n1 2 3 0\n-1 2 -3 0\n1 -2 -3 0\n-1 -2 3 0\n");
    CHECK(parse_dimacs(text) == f);
    // Comments, blank lines and clauses spanning lines all parse.
    CHECK(parse_dimacs("c intro\np cnf 3 1\n\n1 2\n3 0\n") ==
          make_formula(3, {{1, 2, 3}}));

    CHECK_THROWS_AS(parse_dimacs(""), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), MalformedFormula);   // 2 literals
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3 4 0\n"), MalformedFormula);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), MalformedFormula);  // var range
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), InvariantViolation);  // count off
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3\n"), SyntaxError);  // missing terminator

    const std::filesystem::path p =
        std::filesystem::temp_directory_path() / "majpart_ftest.cnf";
    save_dimacs(f, p.string());
    CHECK(load_dimacs(p.string()) == f);
    std::filesystem::remove(p);
}

TEST_CASE("formula well-formedness") {
    CHECK_NOTHROW(check_3sat(make_formula(3, {{1, -2, 3}})));
    CHECK_THROWS_AS(check_3sat(make_formula(3, {{1, 1, 2}})), MalformedFormula);
    CHECK_THROWS_AS(check_3sat(make_formula(3, {{1, -1, 2}})), MalformedFormula);
    CHECK_THROWS_AS(check_3sat(make_formula(2, {{1, 2, 3}})), MalformedFormula);
    CHECK_THROWS_AS(check_3sat(make_formula(3, {{0, 1, 2}})), MalformedFormula);
}

TEST_CASE("occurrence counts and satisfaction") {
    const CnfFormula f = make_formula(3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, -3}, {-1, -2, 3}});
    CHECK(occurrence_count(f, 1) == 2);
    CHECK(occurrence_count(f, -1) == 2);
    CHECK(occurrence_count(f, 2) == 2);
    CHECK(occurrence_count(f, -3) == 2);

    CHECK(satisfies(f, {true, true, true}));
    CHECK(satisfies(f, {true, false, false}));
    CHECK_FALSE(satisfies(f, {false, false, false}));  // first clause all false
    CHECK_FALSE(satisfies(f, {true, false, true}));    // second clause all false
    CHECK_THROWS_AS(satisfies(f, {true, true}), SizeMismatch);

    // NAE needs a false literal too.
    const CnfFormula one = make_formula(3, {{1, 2, 3}});
    CHECK(nae_satisfies(one, {true, true, false}));
    CHECK_FALSE(nae_satisfies(one, {true, true, true}));
    CHECK_FALSE(nae_satisfies(one, {false, false, false}));
}

TEST_CASE("nae normalization") {
    // A clause with complementary literals repeats its variable and is
    // rejected outright, never rewritten.
    CHECK_THROWS_AS(normalize_nae(make_formula(2, {{1, -1, 2}})), MalformedFormula);

    // Variables 1 and 3 occur both ways; variable 2 only positively and gets
    // the padding clause pair.
    const CnfFormula f = make_formula(3, {{1, 2, 3}, {-1, 2, -3}});
    const NaeNormalization norm = normalize_nae(f);
    CHECK(norm.original_vars == 3);
    CHECK(norm.formula.num_clauses() == 4);
    REQUIRE(norm.padded.size() == 1);
    CHECK(norm.padded[0][0] == 2);
    // Every variable of the normalized formula occurs in both polarities.
    for (int v = 1; v <= norm.formula.num_vars; ++v) {
        CHECK(occurrence_count(norm.formula, v) >= 1);
        CHECK(occurrence_count(norm.formula, -v) >= 1);
    }
    CHECK_NOTHROW(check_3sat(norm.formula));

    // NAE satisfaction carries over through extend_nae_assignment.
    const auto base = oracles::find_nae(f);
    REQUIRE(base.has_value());
    const std::vector<bool> extended = extend_nae_assignment(norm, *base);
    CHECK(static_cast<int>(extended.size()) == norm.formula.num_vars);
    CHECK(nae_satisfies(norm.formula, extended));
}

TEST_CASE("nae normalization is nae-equisatisfiable on random formulas") {
    for (int trial = 0; trial < 40; ++trial) {
        const CnfFormula f = oracles::random_3sat(4, 1 + trial % 4, 4400 + trial);
        const NaeNormalization norm = normalize_nae(f);
        const bool before = oracles::find_nae(f).has_value();
        const bool after = oracles::find_nae(norm.formula).has_value();
        CHECK(before == after);
    }
}

TEST_CASE("hypergraph round trip and coloring check") {
    Hypergraph3 h;
    h.num_vertices = 4;
    h.triples = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    const std::string text = serialize_hypergraph(h);
    CHECK(text == "p h3 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(parse_hypergraph(text) == h);
    CHECK_THROWS_AS(parse_hypergraph("p h3 3 1\n1 2 2\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_hypergraph("p h3 3 1\n1 2 4\n"), InvariantViolation);

    CHECK(proper_3_coloring(h, {1, 1, 2, 3}));
    CHECK_FALSE(proper_3_coloring(h, {1, 1, 1, 2}));  // triple {0,1,2} monochromatic
    CHECK_THROWS_AS(proper_3_coloring(h, {1, 1, 2}), SizeMismatch);
    CHECK_THROWS_AS(proper_3_coloring(h, {1, 1, 2, 4}), SizeMismatch);

    const std::filesystem::path p =
        std::filesystem::temp_directory_path() / "majpart_ftest.h3";
    save_hypergraph(h, p.string());
    CHECK(load_hypergraph(p.string()) == h);
    std::filesystem::remove(p);
}

TEST_CASE("proper coloring agrees with enumeration oracle") {
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph3 h;
        h.num_vertices = 4;
        // Pick a subset of the 4 possible triples from the trial bits.
        const std::array<std::array<int, 3>, 4> all = {
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
        for (int t = 0; t < 4; ++t) {
            if ((trial >> t) & 1) h.triples.push_back(all[t]);
        }
        const auto found = oracles::find_h3_coloring(h);
        if (found.has_value()) {
            CHECK(proper_3_coloring(h, *found));
        } else {
            CHECK(h.num_triples() > 0);  // empty hypergraphs are colorable
        }
    }
}
