#pragma once

#include <array>
#include <string>
#include <vector>

#include "majpart/errors.hpp"

namespace majpart {

// Edge colors. Every edge carries exactly one of the two; a vertex pair may
// be joined by one edge of each color, but never by two of the same color.
using Color = int;
inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;
inline constexpr std::array<Color, 2> kColors = {kRed, kBlue};

struct ColoredEdge {
    int u;
    int v;
    Color color;
    auto operator<=>(const ColoredEdge&) const = default;
};

// Undirected graph on dense vertex ids 0..n-1 with red/blue edges, stored as
// per-color neighbor lists kept sorted by id. Parallel edges of distinct
// colors are allowed; self loops and same-color duplicates are not.
class EdgeColoredGraph {
  public:
    EdgeColoredGraph() = default;
    explicit EdgeColoredGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v, Color c);
    bool has_edge(int u, int v, Color c) const;

    const std::vector<int>& neighbors(int v, Color c) const;
    int color_degree(int v, Color c) const;
    int degree(int v) const;  // red degree + blue degree

    // All edges as (u, v, color) with u < v, sorted lexicographically.
    std::vector<ColoredEdge> edges() const;

    bool operator==(const EdgeColoredGraph&) const = default;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::array<std::vector<std::vector<int>>, 2> adj_;  // [color-1][vertex]
};

// Number of color-c edges from v into the subset s (a list of vertex ids).
int color_degree_into(const EdgeColoredGraph& g, int v, Color c, const std::vector<int>& s);
// Same, with the subset given as a 0/1 membership mask of length n.
int color_degree_into(const EdgeColoredGraph& g, int v, Color c, const std::vector<char>& mask);

// Minimum of color_degree(v, c) over all vertices and both colors.
int min_color_degree(const EdgeColoredGraph& g);
// Maximum total degree over all vertices.
int max_degree(const EdgeColoredGraph& g);

// ECG text format:
//   c <comment>
//   p ecg <n> <m>
//   e <u> <v> <color>     (1-indexed endpoints, color 1=red 2=blue)
// parse_graph accepts any edge order and blank/comment lines; SyntaxError
// carries the offending line number. Structural problems (self loop,
// duplicate edge, endpoint out of range, edge-count mismatch) raise
// InvariantViolation. serialize_graph is canonical: no comments, edges
// sorted by (u, v, color) with u < v, one trailing newline.
EdgeColoredGraph parse_graph(const std::string& text);
std::string serialize_graph(const EdgeColoredGraph& g);

EdgeColoredGraph load_graph(const std::string& path);
void save_graph(const EdgeColoredGraph& g, const std::string& path);

}  // namespace majpart
