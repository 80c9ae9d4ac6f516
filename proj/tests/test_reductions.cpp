#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "majpart/reductions.hpp"
#include "majpart/solvers.hpp"
#include "support/oracles.hpp"

using namespace majpart;

namespace {

// The four-clause formula with exactly four satisfying assignments; its
// reductions have hand-counted sizes used as frozen structure checks.
CnfFormula four_clause_formula() {
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = {{1, 2, 3}, {-1, 2, -3}, {1, -2, -3}, {-1, -2, 3}};
    return f;
}

int count_color(const EdgeColoredGraph& g, Color c) {
    int out = 0;
    for (const ColoredEdge& e : g.edges()) {
        if (e.color == c) ++out;
    }
    return out;
}

}  // namespace

TEST_CASE("triangle and K5 fixed graphs") {
    const EdgeColoredGraph t = triangle_nonmono();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.has_edge(0, 1, kRed));
    CHECK(t.has_edge(1, 2, kRed));
    CHECK(t.has_edge(0, 2, kBlue));

    const EdgeColoredGraph k5 = figure2_k5();
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(count_color(k5, kRed) == 5);
    CHECK(count_color(k5, kBlue) == 5);
    // Blue 5-cycle and red complementary 5-cycle; delta = 2 everywhere.
    for (int v = 0; v < 5; ++v) {
        CHECK(k5.color_degree(v, kRed) == 2);
        CHECK(k5.color_degree(v, kBlue) == 2);
    }
    CHECK(k5.has_edge(0, 1, kBlue));
    CHECK(k5.has_edge(0, 4, kBlue));
    CHECK(k5.has_edge(0, 2, kRed));
    CHECK(k5.has_edge(0, 3, kRed));
}

TEST_CASE("gadget append structure and errors") {
    const EdgeColoredGraph g = gadget_append(EdgeColoredGraph(3), 0, 1, 2);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 18);
    CHECK(count_color(g, kRed) == 10);
    CHECK(count_color(g, kBlue) == 8);
    // Internal wiring: x1..x4 sit at 3..6.
    CHECK(g.has_edge(3, 4, kRed));
    CHECK(g.has_edge(6, 3, kRed));
    CHECK(g.has_edge(6, 4, kRed));
    CHECK(g.has_edge(6, 5, kRed));
    CHECK(g.has_edge(5, 3, kBlue));
    CHECK(g.has_edge(5, 4, kBlue));
    for (int anchor = 0; anchor < 3; ++anchor) {
        CHECK(g.has_edge(anchor, 3, kRed));
        CHECK(g.has_edge(anchor, 4, kRed));
        CHECK(g.has_edge(anchor, 5, kBlue));
        CHECK(g.has_edge(anchor, 6, kBlue));
    }

    CHECK_THROWS_AS(gadget_append(EdgeColoredGraph(3), 0, 0, 2), AnchorCollision);
    CHECK_THROWS_AS(gadget_append(EdgeColoredGraph(3), 0, 1, 3), VertexOutOfRange);
    CHECK_THROWS_AS(gadget_append(EdgeColoredGraph(3), -1, 1, 2), VertexOutOfRange);
}

TEST_CASE("147-vertex counterexample structure") {
    const EdgeColoredGraph g = counterexample_147();
    CHECK(g.vertex_count() == 147);
    CHECK(g.edge_count() == 630);
    CHECK(count_color(g, kRed) == 350);
    CHECK(count_color(g, kBlue) == 280);
    // Each anchor joins 15 gadgets, contributing 2 red and 2 blue edges each.
    for (int a = 0; a < 7; ++a) {
        CHECK(g.color_degree(a, kRed) == 30);
        CHECK(g.color_degree(a, kBlue) == 30);
    }

    const std::vector<std::string> roles = counterexample_147_roles();
    REQUIRE(roles.size() == 147);
    CHECK(roles[0] == "a:1");
    CHECK(roles[6] == "a:7");
    CHECK(roles[7] == "g:1:2:3:x1");
    CHECK(roles[10] == "g:1:2:3:x4");
    CHECK(roles[146] == "g:5:6:7:x4");
}

TEST_CASE("no-good-trees family") {
    for (const int k : {1, 2, 3}) {
        const EdgeColoredGraph g = no_good_trees(k);
        const int s = std::max(k + 1, 3);
        CHECK(g.vertex_count() == 2 * s);
        const NoGoodTreesReport rep = check_no_good_trees(g, k);
        CHECK(rep.k == k);
        CHECK(rep.blue_regular);
        CHECK(rep.parallel_free);
        // The report's min-cut numbers agree with brute-force enumeration.
        CHECK(rep.blue_edge_connectivity ==
              oracles::edge_connectivity_bruteforce(g, kBlue));
        CHECK(rep.red_edge_connectivity ==
              oracles::edge_connectivity_bruteforce(g, kRed));

        const std::vector<std::string> roles = no_good_trees_roles(k);
        REQUIRE(static_cast<int>(roles.size()) == 2 * s);
        CHECK(roles[0] == "A:1");
        CHECK(roles[static_cast<std::size_t>(s)] == "B:1");
    }
    // Red side-cliques keep red well connected; blue circulants are only as
    // connected as their regularity allows. Frozen small values:
    CHECK(check_no_good_trees(no_good_trees(1), 1).blue_edge_connectivity == 0);
    CHECK(check_no_good_trees(no_good_trees(2), 2).blue_edge_connectivity == 2);
    CHECK(check_no_good_trees(no_good_trees(3), 3).blue_edge_connectivity == 3);
}

TEST_CASE("3-SAT to bicolor-cut graph") {
    const ReductionArtifact r = reduce_sat_bicolor(four_clause_formula());
    CHECK(r.reduction_id == "sat-bicolor");
    CHECK(r.graph.vertex_count() == 22);  // 2*3 + 2*4 + 8
    CHECK(r.graph.edge_count() == 37);
    CHECK(count_color(r.graph, kRed) == 11);  // perfect matching: 3 + 4 + 4
    CHECK(count_color(r.graph, kBlue) == 26);

    REQUIRE(r.roles.size() == 22);
    CHECK(r.roles[0] == "v:1");
    CHECK(r.roles[1] == "~v:1");
    CHECK(r.roles[6] == "w:1");
    CHECK(r.roles[7] == "w':1");
    CHECK(r.roles[14] == "z:1");
    CHECK(r.roles[18] == "h:1");

    // Spot checks of the wiring: literal vertices pair into a red matching,
    // clause vertices reach their literals in blue, z1 collects the w' row,
    // h1 collects every literal vertex.
    CHECK(r.graph.has_edge(0, 1, kRed));    // v1 / ~v1
    CHECK(r.graph.has_edge(6, 7, kRed));    // w1 / w'1
    CHECK(r.graph.has_edge(7, 14, kBlue));  // w'1 - z1
    CHECK(r.graph.has_edge(0, 18, kBlue));  // v1 - h1
    CHECK(r.graph.has_edge(1, 18, kBlue));  // ~v1 - h1
    CHECK(r.graph.has_edge(0, 6, kBlue));   // clause 1 contains literal x1
    CHECK(r.graph.has_edge(14, 15, kBlue)); // z1 z2
    CHECK(r.graph.has_edge(15, 16, kRed));  // z2 z3
    CHECK(r.graph.has_edge(18, 19, kRed));  // h1 h2
    CHECK(r.graph.has_edge(19, 20, kBlue)); // h2 h3

    // A variable that occurs in no clause breaks the equivalence.
    CnfFormula missing;
    missing.num_vars = 4;
    missing.clauses = {{1, 2, 3}};
    CHECK_THROWS_AS(reduce_sat_bicolor(missing), MalformedFormula);
    CHECK_THROWS_AS(reduce_sat_majority2(missing), MalformedFormula);
}

TEST_CASE("bicolor-cut lift and project round trip") {
    const ReductionArtifact r = reduce_sat_bicolor(four_clause_formula());
    const std::vector<std::vector<bool>> sat_assignments = {
        {true, true, true}, {true, false, false}, {false, true, false},
        {false, false, true}};
    for (const auto& a : sat_assignments) {
        const KPartition p = lift_witness(r, WitnessValue{a});
        CHECK(verify_bicolor_cut(r.graph, p).ok);
        CHECK(oracles::bicolor_cut_ok(r.graph, p));
        const WitnessValue back = project_witness(r, p);
        CHECK(std::get<std::vector<bool>>(back) == a);
    }
    // Unsatisfying witnesses are rejected up front.
    CHECK_THROWS_AS(lift_witness(r, WitnessValue{std::vector<bool>{false, false, false}}),
                    WitnessInvalid);
    CHECK_THROWS_AS(lift_witness(r, WitnessValue{std::vector<int>{1, 2, 3}}),
                    WitnessInvalid);
    // A partition that fails the cut condition cannot be projected.
    KPartition junk;
    junk.k = 2;
    junk.part.assign(22, 1);
    CHECK_THROWS_AS(project_witness(r, junk), PartitionInvalid);
}

TEST_CASE("3-SAT to majority-2 graph") {
    const ReductionArtifact r = reduce_sat_majority2(four_clause_formula());
    CHECK(r.reduction_id == "sat-majority2");
    CHECK(r.graph.vertex_count() == 74);
    CHECK(r.graph.edge_count() == 99);
    CHECK(count_color(r.graph, kRed) == 39);
    CHECK(count_color(r.graph, kBlue) == 60);
    REQUIRE(r.roles.size() == 74);
    CHECK(r.roles[22] == "w'':1");
    CHECK(r.roles[26] == "H:1:1:h1");

    // Clause vertices now see exactly 4 blue edges: three literals plus w''.
    for (int j = 0; j < 4; ++j) {
        const int w = 6 + 2 * j;
        CHECK(r.graph.color_degree(w, kBlue) == 4);
        CHECK(r.graph.color_degree(w, kRed) == 1);
    }
    // h1 lost its literal edges.
    CHECK_FALSE(r.graph.has_edge(0, 18, kBlue));

    for (const auto& a : std::vector<std::vector<bool>>{
             {true, true, true}, {true, false, false}, {false, true, false},
             {false, false, true}}) {
        const KPartition p = lift_witness(r, WitnessValue{a});
        CHECK(verify_majority(r.graph, p).ok);
        CHECK(oracles::majority_ok(r.graph, p));
        const WitnessValue back = project_witness(r, p);
        CHECK(std::get<std::vector<bool>>(back) == a);
    }
}

TEST_CASE("hypergraph coloring to majority-3 graph") {
    Hypergraph3 h;
    h.num_vertices = 4;
    h.triples = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    const ReductionArtifact r = reduce_h3c_majority3(h);
    CHECK(r.reduction_id == "h3c-majority3");
    CHECK(r.graph.vertex_count() == 4 + 4 * 4);
    CHECK(r.graph.edge_count() == 4 * 18);
    REQUIRE(r.roles.size() == 20);
    CHECK(r.roles[0] == "a:1");
    CHECK(r.roles[4] == "g:1:2:3:x1");

    const std::vector<int> coloring = {1, 1, 2, 3};
    REQUIRE(proper_3_coloring(h, coloring));
    const KPartition p = lift_witness(r, WitnessValue{coloring});
    CHECK(p.k == 3);
    CHECK(verify_majority(r.graph, p).ok);
    CHECK(oracles::majority_ok(r.graph, p));
    const WitnessValue back = project_witness(r, p);
    CHECK(std::get<std::vector<int>>(back) == coloring);

    CHECK_THROWS_AS(lift_witness(r, WitnessValue{std::vector<int>{1, 1, 1, 2}}),
                    WitnessInvalid);
}

TEST_CASE("NAE to spanning-connected-cut graph") {
    CnfFormula f;
    f.num_vars = 4;
    f.clauses = {{1, 2, 3}, {-1, -2, 4}, {1, -3, -4}};
    const ReductionArtifact r = reduce_nae_connected(f);
    CHECK(r.reduction_id == "nae-connected");
    CHECK(r.graph.vertex_count() == 17);  // 3*3 + 8
    CHECK(r.graph.edge_count() == 44);
    CHECK(count_color(r.graph, kRed) == 23);
    CHECK(count_color(r.graph, kBlue) == 21);
    REQUIRE(r.roles.size() == 17);
    CHECK(r.roles[0] == "x:1:1");
    CHECK(r.roles[9] == "s:1");
    CHECK(r.roles[13] == "t:1");
    // One blue occurrence pick per variable: {clause, position} 1-based.
    const std::vector<std::array<int, 2>> expected_e5 = {{1, 1}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(r.e5_choices == expected_e5);

    const std::vector<bool> w = {true, false, false, true};
    REQUIRE(nae_satisfies(f, w));
    const KPartition p = lift_witness(r, WitnessValue{w});
    CHECK(verify_connected_cut(r.graph, p).ok());
    CHECK(oracles::connected_cut_ok(r.graph, p));
    const WitnessValue back = project_witness(r, p);
    CHECK(std::get<std::vector<bool>>(back) == w);
}

TEST_CASE("NAE-unsatisfiable formula yields no spanning connected cut") {
    // The four clauses cover every equal/unequal pattern of (x1, x2, x3), so
    // each assignment makes one of them monochromatic.
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = {{1, 2, 3}, {-1, 2, 3}, {1, 2, -3}, {1, -2, 3}};
    REQUIRE_FALSE(oracles::find_nae(f).has_value());
    const ReductionArtifact r = reduce_nae_connected(f);
    CHECK(r.graph.vertex_count() == 20);  // already both-polarity: 3*4 + 8
    CHECK(exact_connected_cut(r.graph, std::chrono::milliseconds(60000)).status ==
          SolveStatus::Unsat);
}

TEST_CASE("role sidecars are stable json") {
    const ReductionArtifact r = reduce_sat_bicolor(four_clause_formula());
    const std::string text = serialize_roles(r);
    CHECK(serialize_roles(r) == text);  // deterministic
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc.at("reduction") == "sat-bicolor");
    CHECK(doc.at("n") == 22);
    CHECK(doc.at("roles").at("1") == "v:1");
    CHECK(doc.at("roles").at("22") == "h:4");

    CnfFormula f;
    f.num_vars = 4;
    f.clauses = {{1, 2, 3}, {-1, -2, 4}, {1, -3, -4}};
    const nlohmann::json nae_doc =
        nlohmann::json::parse(serialize_roles(reduce_nae_connected(f)));
    CHECK(nae_doc.contains("e5_choices"));
    CHECK(nae_doc.contains("padded_variables"));
}

TEST_CASE("reductions are deterministic") {
    const CnfFormula f = four_clause_formula();
    CHECK(serialize_graph(reduce_sat_bicolor(f).graph) ==
          serialize_graph(reduce_sat_bicolor(f).graph));
    CHECK(serialize_graph(reduce_sat_majority2(f).graph) ==
          serialize_graph(reduce_sat_majority2(f).graph));
}
