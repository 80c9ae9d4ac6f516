#include <doctest.h>

#include <filesystem>
#include <string>

#include "majpart/graph.hpp"

using namespace majpart;

TEST_CASE("edges, degrees and parallel colors") {
    EdgeColoredGraph g(4);
    g.add_edge(0, 1, kRed);
    g.add_edge(0, 1, kBlue);  // parallel edge of the other color is fine
    g.add_edge(2, 1, kBlue);
    g.add_edge(0, 3, kRed);

    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1, kRed));
    CHECK(g.has_edge(1, 0, kRed));
    CHECK(g.has_edge(1, 2, kBlue));
    CHECK_FALSE(g.has_edge(1, 2, kRed));
    CHECK(g.color_degree(0, kRed) == 2);
    CHECK(g.color_degree(0, kBlue) == 1);
    CHECK(g.degree(0) == 3);
    CHECK(g.neighbors(1, kBlue) == std::vector<int>{0, 2});

    const std::vector<ColoredEdge> e = g.edges();
    REQUIRE(e.size() == 4);
    CHECK(e[0] == ColoredEdge{0, 1, kRed});
    CHECK(e[1] == ColoredEdge{0, 1, kBlue});
    CHECK(e[2] == ColoredEdge{0, 3, kRed});
    CHECK(e[3] == ColoredEdge{1, 2, kBlue});
}

TEST_CASE("structural errors") {
    EdgeColoredGraph g(3);
    g.add_edge(0, 1, kRed);
    CHECK_THROWS_AS(g.add_edge(0, 0, kRed), SelfLoop);
    CHECK_THROWS_AS(g.add_edge(1, 0, kRed), DuplicateEdge);
    CHECK_THROWS_AS(g.add_edge(0, 3, kRed), VertexOutOfRange);
    CHECK_THROWS_AS(g.add_edge(-1, 0, kBlue), VertexOutOfRange);
    CHECK_THROWS_AS((void)g.neighbors(5, kRed), VertexOutOfRange);
}

TEST_CASE("color degree into subsets") {
    EdgeColoredGraph g(5);
    g.add_edge(0, 1, kRed);
    g.add_edge(0, 2, kRed);
    g.add_edge(0, 3, kRed);
    g.add_edge(0, 4, kBlue);
    const std::vector<int> ids = {1, 3};
    CHECK(color_degree_into(g, 0, kRed, ids) == 2);
    CHECK(color_degree_into(g, 0, kBlue, ids) == 0);
    const std::vector<char> mask = {0, 1, 1, 0, 1};
    CHECK(color_degree_into(g, 0, kRed, mask) == 2);
    CHECK(color_degree_into(g, 0, kBlue, mask) == 1);
}

TEST_CASE("degree extremes") {
    EdgeColoredGraph g(3);
    g.add_edge(0, 1, kRed);
    g.add_edge(0, 2, kRed);
    g.add_edge(1, 2, kBlue);
    CHECK(min_color_degree(g) == 0);  // vertex 0 has no blue edge
    CHECK(max_degree(g) == 2);
    CHECK_THROWS_AS(min_color_degree(EdgeColoredGraph()), EmptyGraph);
    CHECK_THROWS_AS(max_degree(EdgeColoredGraph()), EmptyGraph);
}

TEST_CASE("graph text round trip is canonical") {
    EdgeColoredGraph g(3);
    g.add_edge(2, 0, kBlue);
    g.add_edge(0, 1, kRed);
    const std::string text = serialize_graph(g);
    CHECK(text == "p ecg 3 2\ne 1 2 1\ne 1 3 2\n");
    const EdgeColoredGraph back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
}

TEST_CASE("parser accepts comments and rejects malformed input") {
    CHECK(parse_graph("c hello\n\np ecg 2 1\nc mid\ne 1 2 2\n").has_edge(0, 1, kBlue));
    CHECK_THROWS_AS(parse_graph(""), SyntaxError);
    CHECK_THROWS_AS(parse_graph("p ecg 2 1\ne 1 2 3\n"), InvariantViolation);  // bad color
    CHECK_THROWS_AS(parse_graph("p ecg 2 2\ne 1 2 1\n"), InvariantViolation);  // count off
    CHECK_THROWS_AS(parse_graph("p ecg 2 1\ne 1 1 1\n"), InvariantViolation);  // self loop
    CHECK_THROWS_AS(parse_graph("p ecg 2 1\ne 1 3 1\n"), InvariantViolation);  // range
    CHECK_THROWS_AS(parse_graph("p ecg 2 2\ne 1 2 1\ne 1 2 1\n"), InvariantViolation);
}

TEST_CASE("graph file round trip") {
    const std::filesystem::path p = std::filesystem::temp_directory_path() / "majpart_gtest.ecg";
    EdgeColoredGraph g(2);
    g.add_edge(0, 1, kRed);
    g.add_edge(0, 1, kBlue);
    save_graph(g, p.string());
    CHECK(load_graph(p.string()) == g);
    std::filesystem::remove(p);
    CHECK_THROWS_AS(load_graph((p / "missing").string()), SyntaxError);
}
