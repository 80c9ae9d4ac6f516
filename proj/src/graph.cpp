#include "majpart/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace majpart {

namespace {

int color_index(Color c) {
    if (c != kRed && c != kBlue) {
        throw InvariantViolation("edge color must be 1 (red) or 2 (blue), got " +
                                 std::to_string(c));
    }
    return c - 1;
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(int n) : n_(n) {
    if (n < 0) throw VertexOutOfRange("vertex count must be nonnegative");
    adj_[0].resize(static_cast<std::size_t>(n));
    adj_[1].resize(static_cast<std::size_t>(n));
}

void EdgeColoredGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 0.." +
                               std::to_string(n_ - 1));
    }
}

void EdgeColoredGraph::add_edge(int u, int v, Color c) {
    const int ci = color_index(c);
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
    if (has_edge(u, v, c)) {
        throw DuplicateEdge("duplicate color-" + std::to_string(c) + " edge " +
                            std::to_string(u) + "-" + std::to_string(v));
    }
    auto& nu = adj_[ci][static_cast<std::size_t>(u)];
    auto& nv = adj_[ci][static_cast<std::size_t>(v)];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool EdgeColoredGraph::has_edge(int u, int v, Color c) const {
    const int ci = color_index(c);
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[ci][static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& EdgeColoredGraph::neighbors(int v, Color c) const {
    const int ci = color_index(c);
    check_vertex(v);
    return adj_[ci][static_cast<std::size_t>(v)];
}

int EdgeColoredGraph::color_degree(int v, Color c) const {
    return static_cast<int>(neighbors(v, c).size());
}

int EdgeColoredGraph::degree(int v) const {
    return color_degree(v, kRed) + color_degree(v, kBlue);
}

std::vector<ColoredEdge> EdgeColoredGraph::edges() const {
    std::vector<ColoredEdge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v) {
        for (Color c : kColors) {
            for (int u : neighbors(v, c)) {
                if (v < u) out.push_back({v, u, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    assert(static_cast<int>(out.size()) == m_);
    return out;
}

int color_degree_into(const EdgeColoredGraph& g, int v, Color c, const std::vector<int>& s) {
    std::vector<char> mask(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int u : s) {
        if (u < 0 || u >= g.vertex_count()) {
            throw VertexOutOfRange("subset vertex " + std::to_string(u) + " outside graph");
        }
        mask[static_cast<std::size_t>(u)] = 1;
    }
    return color_degree_into(g, v, c, mask);
}

int color_degree_into(const EdgeColoredGraph& g, int v, Color c, const std::vector<char>& mask) {
    if (static_cast<int>(mask.size()) != g.vertex_count()) {
        throw SizeMismatch("membership mask length " + std::to_string(mask.size()) +
                           " does not match vertex count " +
                           std::to_string(g.vertex_count()));
    }
    int count = 0;
    for (int u : g.neighbors(v, c)) {
        if (mask[static_cast<std::size_t>(u)]) ++count;
    }
    return count;
}

int min_color_degree(const EdgeColoredGraph& g) {
    if (g.vertex_count() == 0) throw EmptyGraph("min_color_degree of an empty graph");
    int best = g.color_degree(0, kRed);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (Color c : kColors) best = std::min(best, g.color_degree(v, c));
    }
    return best;
}

int max_degree(const EdgeColoredGraph& g) {
    if (g.vertex_count() == 0) throw EmptyGraph("max_degree of an empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

EdgeColoredGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    int m = 0;
    int seen = 0;
    EdgeColoredGraph g;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) {
                throw SyntaxError("line " + std::to_string(lineno) + ": repeated header");
            }
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "ecg" || n < 0 || m < 0) {
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 'p ecg <n> <m>'");
            }
            g = EdgeColoredGraph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) {
                throw SyntaxError("line " + std::to_string(lineno) + ": edge before header");
            }
            int u = 0, v = 0, c = 0;
            if (!(ls >> u >> v >> c)) {
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 'e <u> <v> <color>'");
            }
            if (c != kRed && c != kBlue) {
                throw InvariantViolation("line " + std::to_string(lineno) +
                                         ": color must be 1 or 2");
            }
            try {
                g.add_edge(u - 1, v - 1, c);
            } catch (const Error& e) {
                throw InvariantViolation("line " + std::to_string(lineno) + ": " + e.what());
            }
            ++seen;
            continue;
        }
        throw SyntaxError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    if (!have_header) throw SyntaxError("line " + std::to_string(lineno) + ": missing header");
    if (seen != m) {
        throw InvariantViolation("header announces " + std::to_string(m) + " edges but " +
                                 std::to_string(seen) + " present");
    }
    return g;
}

std::string serialize_graph(const EdgeColoredGraph& g) {
    std::ostringstream out;
    out << "p ecg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const ColoredEdge& e : g.edges()) {
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.color << '\n';
    }
    return out.str();
}

EdgeColoredGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open graph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph(const EdgeColoredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write graph file " + path);
    out << serialize_graph(g);
}

}  // namespace majpart
