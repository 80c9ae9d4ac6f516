#include "majpart/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "majpart/connectivity.hpp"
#include "majpart/solvers.hpp"

namespace majpart {

EdgeColoredGraph triangle_nonmono() {
    EdgeColoredGraph g(3);
    g.add_edge(0, 1, kRed);
    g.add_edge(1, 2, kRed);
    g.add_edge(0, 2, kBlue);
    return g;
}

EdgeColoredGraph figure2_k5() {
    EdgeColoredGraph g(5);
    // Blue 5-cycle x1..x5 and the complementary red 5-cycle x1 x3 x5 x2 x4.
    g.add_edge(0, 1, kBlue);
    g.add_edge(1, 2, kBlue);
    g.add_edge(2, 3, kBlue);
    g.add_edge(3, 4, kBlue);
    g.add_edge(0, 4, kBlue);
    g.add_edge(0, 2, kRed);
    g.add_edge(2, 4, kRed);
    g.add_edge(1, 4, kRed);
    g.add_edge(1, 3, kRed);
    g.add_edge(0, 3, kRed);
    return g;
}

EdgeColoredGraph gadget_append(const EdgeColoredGraph& g, int a, int b, int c) {
    if (a == b || a == c || b == c) {
        throw AnchorCollision("gadget anchors must be three distinct vertices, got " +
                              std::to_string(a) + ", " + std::to_string(b) + ", " +
                              std::to_string(c));
    }
    for (int anchor : {a, b, c}) {
        if (anchor < 0 || anchor >= g.vertex_count()) {
            throw VertexOutOfRange("gadget anchor " + std::to_string(anchor) +
                                   " outside graph");
        }
    }
    const int base = g.vertex_count();
    EdgeColoredGraph out(base + 4);
    for (const ColoredEdge& e : g.edges()) out.add_edge(e.u, e.v, e.color);
    const int x1 = base, x2 = base + 1, x3 = base + 2, x4 = base + 3;
    out.add_edge(x1, x2, kRed);
    out.add_edge(x4, x1, kRed);
    out.add_edge(x4, x2, kRed);
    out.add_edge(x4, x3, kRed);
    out.add_edge(x3, x1, kBlue);
    out.add_edge(x3, x2, kBlue);
    for (int anchor : {a, b, c}) {
        out.add_edge(x1, anchor, kRed);
        out.add_edge(x2, anchor, kRed);
        out.add_edge(x3, anchor, kBlue);
        out.add_edge(x4, anchor, kBlue);
    }
    return out;
}

EdgeColoredGraph counterexample_147() {
    EdgeColoredGraph g(7);
    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            for (int k = j + 1; k < 7; ++k) g = gadget_append(g, i, j, k);
        }
    }
    return g;
}

std::vector<std::string> counterexample_147_roles() {
    std::vector<std::string> roles;
    for (int i = 1; i <= 7; ++i) roles.push_back("a:" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) {
        for (int j = i + 1; j <= 7; ++j) {
            for (int k = j + 1; k <= 7; ++k) {
                const std::string prefix = "g:" + std::to_string(i) + ":" + std::to_string(j) +
                                           ":" + std::to_string(k) + ":x";
                for (int t = 1; t <= 4; ++t) roles.push_back(prefix + std::to_string(t));
            }
        }
    }
    return roles;
}

namespace {

int ngt_side_size(int k) { return std::max(k + 1, 3); }

}  // namespace

EdgeColoredGraph no_good_trees(int k) {
    if (k < 1) throw BadArgs("no_good_trees needs k >= 1, got " + std::to_string(k));
    const int s = ngt_side_size(k);
    // Side A is 0..s-1, side B is s..2s-1.
    EdgeColoredGraph g(2 * s);

    // Blue bipartite circulant: A_i to B_{i..i+k-1 mod s}; k-regular on both
    // sides by construction.
    for (int i = 0; i < s; ++i) {
        for (int t = 0; t < k; ++t) g.add_edge(i, s + (i + t) % s, kBlue);
    }

    // Red perfect matching across, at the first offset free of blue edges.
    int offset = (k + 1) / 2 + 1;
    while (offset % s < k) ++offset;
    offset %= s;
    assert(offset >= k);
    for (int i = 0; i < s; ++i) g.add_edge(i, s + (i + offset) % s, kRed);

    // Red cliques inside each side.
    for (int side = 0; side < 2; ++side) {
        const int base = side * s;
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) g.add_edge(base + i, base + j, kRed);
        }
    }
    return g;
}

std::vector<std::string> no_good_trees_roles(int k) {
    const int s = ngt_side_size(k);
    std::vector<std::string> roles;
    for (int i = 1; i <= s; ++i) roles.push_back("A:" + std::to_string(i));
    for (int i = 1; i <= s; ++i) roles.push_back("B:" + std::to_string(i));
    return roles;
}

NoGoodTreesReport check_no_good_trees(const EdgeColoredGraph& g, int k) {
    NoGoodTreesReport report;
    report.k = k;
    report.blue_regular = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.color_degree(v, kBlue) != k) report.blue_regular = false;
    }
    report.parallel_free = true;
    std::array<std::vector<std::pair<int, int>>, 2> color_edges;
    for (const ColoredEdge& e : g.edges()) {
        color_edges[static_cast<std::size_t>(e.color - 1)].emplace_back(e.u, e.v);
        const Color other = e.color == kRed ? kBlue : kRed;
        if (g.has_edge(e.u, e.v, other)) report.parallel_free = false;
    }
    report.red_edge_connectivity = edge_connectivity(g.vertex_count(), color_edges[0]);
    report.blue_edge_connectivity = edge_connectivity(g.vertex_count(), color_edges[1]);
    return report;
}

// Shared vertex layout of the two SAT reductions: literal vertices first
// (v_i at 2(i-1), ~v_i right after), then w_j/w'_j pairs, then z_1..z_4 and
// h_1..h_4.
namespace sat_layout {

int v_pos(int i) { return 2 * (i - 1); }                       // i is 1-based
int v_neg(int i) { return 2 * (i - 1) + 1; }
int w(int n, int j) { return 2 * n + 2 * (j - 1); }            // j is 1-based
int w_prime(int n, int j) { return 2 * n + 2 * (j - 1) + 1; }
int z(int n, int m, int t) { return 2 * n + 2 * m + (t - 1); }  // t in 1..4
int h(int n, int m, int t) { return 2 * n + 2 * m + 4 + (t - 1); }
int base_count(int n, int m) { return 2 * n + 2 * m + 8; }

int literal_vertex(int lit) {
    return lit > 0 ? v_pos(lit) : v_neg(-lit);
}

// Edges common to both reductions; with_h1_literal_edges distinguishes the
// bicolor-cut graph from the majority-2 graph.
void add_base_edges(EdgeColoredGraph& g, const CnfFormula& f, bool with_h1_literal_edges) {
    const int n = f.num_vars;
    const int m = f.num_clauses();
    for (int i = 1; i <= n; ++i) g.add_edge(v_pos(i), v_neg(i), kRed);
    for (int j = 1; j <= m; ++j) g.add_edge(w(n, j), w_prime(n, j), kRed);
    g.add_edge(z(n, m, 2), z(n, m, 3), kRed);
    g.add_edge(z(n, m, 4), z(n, m, 1), kRed);
    g.add_edge(h(n, m, 1), h(n, m, 2), kRed);
    g.add_edge(h(n, m, 3), h(n, m, 4), kRed);
    g.add_edge(z(n, m, 1), z(n, m, 2), kBlue);
    g.add_edge(z(n, m, 3), z(n, m, 4), kBlue);
    g.add_edge(h(n, m, 2), h(n, m, 3), kBlue);
    g.add_edge(h(n, m, 4), h(n, m, 1), kBlue);
    for (int j = 1; j <= m; ++j) g.add_edge(z(n, m, 1), w_prime(n, j), kBlue);
    if (with_h1_literal_edges) {
        for (int i = 1; i <= n; ++i) {
            g.add_edge(h(n, m, 1), v_pos(i), kBlue);
            g.add_edge(h(n, m, 1), v_neg(i), kBlue);
        }
    }
    for (int j = 1; j <= m; ++j) {
        for (int lit : f.clauses[static_cast<std::size_t>(j - 1)]) {
            g.add_edge(w(n, j), literal_vertex(lit), kBlue);
        }
    }
}

std::vector<std::string> base_roles(int n, int m) {
    std::vector<std::string> roles;
    for (int i = 1; i <= n; ++i) {
        roles.push_back("v:" + std::to_string(i));
        roles.push_back("~v:" + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        roles.push_back("w:" + std::to_string(j));
        roles.push_back("w':" + std::to_string(j));
    }
    for (int t = 1; t <= 4; ++t) roles.push_back("z:" + std::to_string(t));
    for (int t = 1; t <= 4; ++t) roles.push_back("h:" + std::to_string(t));
    return roles;
}

}  // namespace sat_layout

namespace {

// Both SAT reductions share this precondition: a variable with no occurrence
// contributes an isolated literal pair, making the target unconditionally
// infeasible and breaking the equivalence.
void check_every_variable_occurs(const CnfFormula& f, const char* target) {
    for (int i = 1; i <= f.num_vars; ++i) {
        if (occurrence_count(f, i) == 0 && occurrence_count(f, -i) == 0) {
            throw MalformedFormula("variable " + std::to_string(i) +
                                   " occurs in no clause; the " + std::string(target) +
                                   " target would be unconditionally infeasible");
        }
    }
}

}  // namespace

ReductionArtifact reduce_sat_bicolor(const CnfFormula& f) {
    check_3sat(f);
    check_every_variable_occurs(f, "bicolor-cut");
    ReductionArtifact r;
    r.reduction_id = "sat-bicolor";
    r.source_formula = f;
    const int n = f.num_vars;
    const int m = f.num_clauses();
    r.graph = EdgeColoredGraph(sat_layout::base_count(n, m));
    sat_layout::add_base_edges(r.graph, f, true);
    r.roles = sat_layout::base_roles(n, m);
    return r;
}

namespace {

int majority2_q(const CnfFormula& f, int var) {
    return std::max(occurrence_count(f, var), occurrence_count(f, -var));
}

// Vertex ids of the r-th 4-cycle copy attached to a literal vertex in the
// majority-2 graph. Copies are laid out after w''_1..w''_m: for each
// variable i, first the q_i copies on v_i, then the q_i copies on ~v_i.
struct Majority2Layout {
    int n = 0;
    int m = 0;
    std::vector<int> q;           // q[i-1]
    std::vector<int> copy_base;   // first vertex id of variable i's copies

    explicit Majority2Layout(const CnfFormula& f)
        : n(f.num_vars), m(f.num_clauses()) {
        int next = sat_layout::base_count(n, m) + m;
        for (int i = 1; i <= n; ++i) {
            q.push_back(majority2_q(f, i));
            copy_base.push_back(next);
            next += 8 * q.back();
        }
        total = next;
    }

    int w_second(int j) const { return sat_layout::base_count(n, m) + (j - 1); }
    // positive: copies on v_i; otherwise copies on ~v_i. r, t are 1-based.
    int copy_vertex(int i, bool positive, int r, int t) const {
        const int base = copy_base[static_cast<std::size_t>(i - 1)] +
                         (positive ? 0 : 4 * q[static_cast<std::size_t>(i - 1)]);
        return base + 4 * (r - 1) + (t - 1);
    }
    int total = 0;
};

}  // namespace

ReductionArtifact reduce_sat_majority2(const CnfFormula& f) {
    check_3sat(f);
    check_every_variable_occurs(f, "majority 2-partition");
    ReductionArtifact r;
    r.reduction_id = "sat-majority2";
    r.source_formula = f;
    const Majority2Layout lay(f);
    const int n = lay.n;
    const int m = lay.m;
    r.graph = EdgeColoredGraph(lay.total);
    sat_layout::add_base_edges(r.graph, f, false);
    for (int j = 1; j <= m; ++j) {
        r.graph.add_edge(lay.w_second(j), sat_layout::w(n, j), kBlue);
        r.graph.add_edge(lay.w_second(j), sat_layout::z(n, m, 1), kRed);
    }
    for (int i = 1; i <= n; ++i) {
        for (const bool positive : {true, false}) {
            const int attach = positive ? sat_layout::v_pos(i) : sat_layout::v_neg(i);
            for (int rr = 1; rr <= lay.q[static_cast<std::size_t>(i - 1)]; ++rr) {
                const int c1 = lay.copy_vertex(i, positive, rr, 1);
                const int c2 = lay.copy_vertex(i, positive, rr, 2);
                const int c3 = lay.copy_vertex(i, positive, rr, 3);
                const int c4 = lay.copy_vertex(i, positive, rr, 4);
                r.graph.add_edge(c1, c2, kRed);
                r.graph.add_edge(c3, c4, kRed);
                r.graph.add_edge(c2, c3, kBlue);
                r.graph.add_edge(c4, c1, kBlue);
                r.graph.add_edge(attach, c1, kBlue);
            }
        }
    }
    r.roles = sat_layout::base_roles(n, m);
    for (int j = 1; j <= m; ++j) r.roles.push_back("w'':" + std::to_string(j));
    for (int i = 1; i <= n; ++i) {
        for (const bool positive : {true, false}) {
            for (int rr = 1; rr <= lay.q[static_cast<std::size_t>(i - 1)]; ++rr) {
                const std::string prefix = std::string(positive ? "H:" : "~H:") +
                                           std::to_string(i) + ":" + std::to_string(rr) + ":h";
                for (int t = 1; t <= 4; ++t) r.roles.push_back(prefix + std::to_string(t));
            }
        }
    }
    assert(static_cast<int>(r.roles.size()) == lay.total);
    return r;
}

ReductionArtifact reduce_h3c_majority3(const Hypergraph3& h) {
    ReductionArtifact r;
    r.reduction_id = "h3c-majority3";
    r.source_hypergraph = h;
    EdgeColoredGraph g(h.num_vertices);
    for (int i = 1; i <= h.num_vertices; ++i) r.roles.push_back("a:" + std::to_string(i));
    for (const auto& [i, j, k] : h.triples) {
        g = gadget_append(g, i, j, k);
        const std::string prefix = "g:" + std::to_string(i + 1) + ":" + std::to_string(j + 1) +
                                   ":" + std::to_string(k + 1) + ":x";
        for (int t = 1; t <= 4; ++t) r.roles.push_back(prefix + std::to_string(t));
    }
    r.graph = std::move(g);
    return r;
}

// Vertex layout of the NAE reduction: occurrence vertices x_{j,p} at
// 3(j-1)+p-1, then s_1..s_4, then t_1..t_4.
namespace nae_layout {

int x(int j, int p) { return 3 * (j - 1) + (p - 1); }  // 1-based clause, position
int s(int m, int t) { return 3 * m + (t - 1); }
int t(int m, int tt) { return 3 * m + 4 + (tt - 1); }
int total(int m) { return 3 * m + 8; }

}  // namespace nae_layout

ReductionArtifact reduce_nae_connected(const CnfFormula& f) {
    ReductionArtifact r;
    r.reduction_id = "nae-connected";
    r.source_formula = f;
    r.nae = normalize_nae(f);
    const CnfFormula& nf = r.nae.formula;
    const int m = nf.num_clauses();
    EdgeColoredGraph g(nae_layout::total(m));

    // E1: red triangle on each clause's occurrence vertices.
    for (int j = 1; j <= m; ++j) {
        g.add_edge(nae_layout::x(j, 1), nae_layout::x(j, 2), kRed);
        g.add_edge(nae_layout::x(j, 2), nae_layout::x(j, 3), kRed);
        g.add_edge(nae_layout::x(j, 3), nae_layout::x(j, 1), kRed);
    }

    // E2: K_{4,4} on the special vertices as one blue and one red Hamilton
    // cycle (the fixed decomposition below is edge-disjoint and covers all
    // 16 pairs).
    const auto S = [&](int i) { return nae_layout::s(m, i); };
    const auto T = [&](int i) { return nae_layout::t(m, i); };
    const std::array<std::pair<int, int>, 8> blue_cycle = {{
        {S(1), T(1)}, {T(1), S(2)}, {S(2), T(2)}, {T(2), S(3)},
        {S(3), T(3)}, {T(3), S(4)}, {S(4), T(4)}, {T(4), S(1)},
    }};
    const std::array<std::pair<int, int>, 8> red_cycle = {{
        {S(4), T(1)}, {T(1), S(3)}, {S(3), T(4)}, {T(4), S(2)},
        {S(2), T(3)}, {T(3), S(1)}, {S(1), T(2)}, {T(2), S(4)},
    }};
    for (auto [u, v] : blue_cycle) g.add_edge(u, v, kBlue);
    for (auto [u, v] : red_cycle) g.add_edge(u, v, kRed);

    // E3: blue edge between every pair of complementary literal occurrences.
    for (int j = 1; j <= m; ++j) {
        for (int p = 1; p <= 3; ++p) {
            const int lit = nf.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(p - 1)];
            for (int a = j; a <= m; ++a) {
                for (int b = 1; b <= 3; ++b) {
                    if (a == j && b <= p) continue;
                    const int other =
                        nf.clauses[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
                    if (other == -lit) {
                        g.add_edge(nae_layout::x(j, p), nae_layout::x(a, b), kBlue);
                    }
                }
            }
        }
    }

    // E4: red edges from s_1 and t_1 to every clause's first occurrence.
    for (int j = 1; j <= m; ++j) {
        g.add_edge(S(1), nae_layout::x(j, 1), kRed);
        g.add_edge(T(1), nae_layout::x(j, 1), kRed);
    }

    // E5: blue edges from s_2 and t_2 to one positive occurrence of each
    // variable; the smallest (clause, position) is chosen. Normalization
    // guarantees one exists.
    for (int var = 1; var <= nf.num_vars; ++var) {
        int cj = 0, cp = 0;
        for (int j = 1; j <= m && cj == 0; ++j) {
            for (int p = 1; p <= 3; ++p) {
                if (nf.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(p - 1)] ==
                    var) {
                    cj = j;
                    cp = p;
                    break;
                }
            }
        }
        assert(cj != 0);
        r.e5_choices.push_back({cj, cp});
        g.add_edge(S(2), nae_layout::x(cj, cp), kBlue);
        g.add_edge(T(2), nae_layout::x(cj, cp), kBlue);
    }

    for (int j = 1; j <= m; ++j) {
        for (int p = 1; p <= 3; ++p) {
            r.roles.push_back("x:" + std::to_string(j) + ":" + std::to_string(p));
        }
    }
    for (int i = 1; i <= 4; ++i) r.roles.push_back("s:" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) r.roles.push_back("t:" + std::to_string(i));
    r.graph = std::move(g);
    return r;
}

namespace {

const std::vector<bool>& assignment_of(const WitnessValue& w) {
    if (!std::holds_alternative<std::vector<bool>>(w)) {
        throw WitnessInvalid("this reduction expects a truth assignment witness");
    }
    return std::get<std::vector<bool>>(w);
}

const std::vector<int>& coloring_of(const WitnessValue& w) {
    if (!std::holds_alternative<std::vector<int>>(w)) {
        throw WitnessInvalid("this reduction expects a 3-coloring witness");
    }
    return std::get<std::vector<int>>(w);
}

KPartition lift_sat_bicolor(const ReductionArtifact& r, const std::vector<bool>& assignment) {
    const CnfFormula& f = r.source_formula;
    if (!satisfies(f, assignment)) {
        throw WitnessInvalid("assignment does not satisfy the source formula");
    }
    // The transcription needs every true literal to occur in some clause;
    // flipping a variable whose satisfied polarity never occurs keeps the
    // formula satisfied (that literal satisfies no clause).
    std::vector<bool> phi = assignment;
    for (int i = 1; i <= f.num_vars; ++i) {
        const bool value = phi[static_cast<std::size_t>(i - 1)];
        const int lit = value ? i : -i;
        if (occurrence_count(f, lit) == 0) phi[static_cast<std::size_t>(i - 1)] = !value;
    }
    assert(satisfies(f, phi));

    const int n = f.num_vars;
    const int m = f.num_clauses();
    KPartition p;
    p.k = 2;
    p.part.assign(static_cast<std::size_t>(r.graph.vertex_count()), 1);
    const auto to_v2 = [&](int vertex) { p.part[static_cast<std::size_t>(vertex)] = 2; };
    for (int i = 1; i <= n; ++i) {
        to_v2(phi[static_cast<std::size_t>(i - 1)] ? sat_layout::v_pos(i)
                                                   : sat_layout::v_neg(i));
    }
    for (int j = 1; j <= m; ++j) to_v2(sat_layout::w_prime(n, j));
    to_v2(sat_layout::z(n, m, 2));
    to_v2(sat_layout::z(n, m, 4));
    to_v2(sat_layout::h(n, m, 1));
    to_v2(sat_layout::h(n, m, 3));
    return p;
}

KPartition lift_sat_majority2(const ReductionArtifact& r, const std::vector<bool>& assignment) {
    const CnfFormula& f = r.source_formula;
    if (!satisfies(f, assignment)) {
        throw WitnessInvalid("assignment does not satisfy the source formula");
    }
    const Majority2Layout lay(f);
    const int n = lay.n;
    const int m = lay.m;
    KPartition p;
    p.k = 2;
    p.part.assign(static_cast<std::size_t>(r.graph.vertex_count()), 1);
    const auto place = [&](int vertex, int side) {
        p.part[static_cast<std::size_t>(vertex)] = side;
    };
    for (int i = 1; i <= n; ++i) {
        const bool value = assignment[static_cast<std::size_t>(i - 1)];
        place(sat_layout::v_pos(i), value ? 2 : 1);
        place(sat_layout::v_neg(i), value ? 1 : 2);
    }
    for (int j = 1; j <= m; ++j) {
        place(sat_layout::w(n, j), 1);
        place(sat_layout::w_prime(n, j), 2);
        place(lay.w_second(j), 2);
    }
    place(sat_layout::z(n, m, 1), 1);
    place(sat_layout::z(n, m, 2), 2);
    place(sat_layout::z(n, m, 3), 1);
    place(sat_layout::z(n, m, 4), 2);
    // The original 4-cycle (its blue literal edges are gone) and every copy
    // alternate; a copy's alternation is anti-aligned with the side of the
    // literal vertex it hangs on, so the blue attachment edge crosses.
    place(sat_layout::h(n, m, 1), 1);
    place(sat_layout::h(n, m, 2), 2);
    place(sat_layout::h(n, m, 3), 1);
    place(sat_layout::h(n, m, 4), 2);
    for (int i = 1; i <= n; ++i) {
        for (const bool positive : {true, false}) {
            const int attach = positive ? sat_layout::v_pos(i) : sat_layout::v_neg(i);
            const int attach_side = p.part[static_cast<std::size_t>(attach)];
            const int odd_side = attach_side == 2 ? 1 : 2;
            const int even_side = attach_side;
            for (int rr = 1; rr <= lay.q[static_cast<std::size_t>(i - 1)]; ++rr) {
                place(lay.copy_vertex(i, positive, rr, 1), odd_side);
                place(lay.copy_vertex(i, positive, rr, 2), even_side);
                place(lay.copy_vertex(i, positive, rr, 3), odd_side);
                place(lay.copy_vertex(i, positive, rr, 4), even_side);
            }
        }
    }
    return p;
}

KPartition lift_h3c(const ReductionArtifact& r, const std::vector<int>& coloring) {
    const Hypergraph3& h = r.source_hypergraph;
    if (!proper_3_coloring(h, coloring)) {
        throw WitnessInvalid("coloring is not a proper 3-coloring of the source hypergraph");
    }
    const GadgetExtensionTable table = gadget_extension_table();
    KPartition p;
    p.k = 3;
    p.part.assign(static_cast<std::size_t>(r.graph.vertex_count()), 1);
    for (int v = 0; v < h.num_vertices; ++v) {
        p.part[static_cast<std::size_t>(v)] = coloring[static_cast<std::size_t>(v)];
    }
    int next = h.num_vertices;
    for (const auto& [i, j, k] : h.triples) {
        const auto& entry = table.at(coloring[static_cast<std::size_t>(i)],
                                     coloring[static_cast<std::size_t>(j)],
                                     coloring[static_cast<std::size_t>(k)]);
        assert(entry.has_value());  // proper coloring: the triple is not monochromatic
        for (int t = 0; t < 4; ++t) {
            p.part[static_cast<std::size_t>(next + t)] = (*entry)[static_cast<std::size_t>(t)];
        }
        next += 4;
    }
    assert(next == r.graph.vertex_count());
    return p;
}

KPartition lift_nae(const ReductionArtifact& r, const std::vector<bool>& assignment) {
    const CnfFormula& f = r.source_formula;
    if (!nae_satisfies(f, assignment)) {
        throw WitnessInvalid("assignment does not NAE-satisfy the source formula");
    }
    const std::vector<bool> full = extend_nae_assignment(r.nae, assignment);
    assert(nae_satisfies(r.nae.formula, full));
    const int m = r.nae.formula.num_clauses();
    KPartition p;
    p.k = 2;
    p.part.assign(static_cast<std::size_t>(r.graph.vertex_count()), 1);
    // Part 1 holds the s vertices and all true literal occurrences; part 2
    // the t vertices and the false occurrences.
    for (int t = 1; t <= 4; ++t) {
        p.part[static_cast<std::size_t>(nae_layout::t(m, t))] = 2;
    }
    for (int j = 1; j <= m; ++j) {
        for (int pos = 1; pos <= 3; ++pos) {
            const int lit = r.nae.formula
                                .clauses[static_cast<std::size_t>(j - 1)]
                                        [static_cast<std::size_t>(pos - 1)];
            const bool value = full[static_cast<std::size_t>(std::abs(lit) - 1)];
            const bool literal_true = lit > 0 ? value : !value;
            p.part[static_cast<std::size_t>(nae_layout::x(j, pos))] = literal_true ? 1 : 2;
        }
    }
    return p;
}

std::vector<bool> project_sat(const ReductionArtifact& r, const KPartition& p,
                              bool majority_target) {
    const CnfFormula& f = r.source_formula;
    if (majority_target) {
        if (!verify_majority(r.graph, p).ok || p.k != 2) {
            throw PartitionInvalid("partition is not a verified majority 2-partition");
        }
    } else {
        if (!verify_bicolor_cut(r.graph, p).ok) {
            throw PartitionInvalid("partition is not a verified bicolor-cut 2-partition");
        }
    }
    const int n = f.num_vars;
    const int side_w = p.part[static_cast<std::size_t>(sat_layout::w(n, 1))];
    for (int j = 1; j <= f.num_clauses(); ++j) {
        if (p.part[static_cast<std::size_t>(sat_layout::w(n, j))] != side_w) {
            throw PartitionInvalid("clause vertices split across parts; not a partition this "
                                   "reduction can project");
        }
    }
    std::vector<bool> assignment;
    for (int i = 1; i <= n; ++i) {
        assignment.push_back(p.part[static_cast<std::size_t>(sat_layout::v_pos(i))] != side_w);
    }
    if (!satisfies(f, assignment)) {
        throw PartitionInvalid("projected assignment fails the source formula");
    }
    return assignment;
}

std::vector<int> project_h3c(const ReductionArtifact& r, const KPartition& p) {
    if (p.k != 3 || !verify_majority(r.graph, p).ok) {
        throw PartitionInvalid("partition is not a verified majority 3-partition");
    }
    const Hypergraph3& h = r.source_hypergraph;
    std::vector<int> coloring;
    for (int v = 0; v < h.num_vertices; ++v) {
        coloring.push_back(p.part[static_cast<std::size_t>(v)]);
    }
    if (!proper_3_coloring(h, coloring)) {
        throw PartitionInvalid("anchor labels are not a proper 3-coloring");
    }
    return coloring;
}

std::vector<bool> project_nae(const ReductionArtifact& r, const KPartition& p) {
    const ConnectedCutReport cut = verify_connected_cut(r.graph, p);
    if (!cut.ok()) {
        throw PartitionInvalid("partition is not a verified spanning-connected cut");
    }
    const CnfFormula& nf = r.nae.formula;
    const int m = nf.num_clauses();
    const int side_s = p.part[static_cast<std::size_t>(nae_layout::s(m, 1))];
    // A literal is read as true when its occurrence vertices sit on the
    // s_1 side; all occurrences of a literal must agree.
    std::vector<int> value(static_cast<std::size_t>(nf.num_vars), 0);  // 0 unset, +1 true, -1 false
    for (int j = 1; j <= m; ++j) {
        for (int pos = 1; pos <= 3; ++pos) {
            const int lit =
                nf.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(pos - 1)];
            const bool on_s_side =
                p.part[static_cast<std::size_t>(nae_layout::x(j, pos))] == side_s;
            const bool lit_true = on_s_side;
            const int var = std::abs(lit);
            const int implied = (lit > 0) == lit_true ? +1 : -1;
            auto& slot = value[static_cast<std::size_t>(var - 1)];
            if (slot == 0) {
                slot = implied;
            } else if (slot != implied) {
                throw PartitionInvalid("occurrences of variable " + std::to_string(var) +
                                       " disagree; not a projectable partition");
            }
        }
    }
    std::vector<bool> assignment;
    for (int i = 1; i <= r.source_formula.num_vars; ++i) {
        assignment.push_back(value[static_cast<std::size_t>(i - 1)] > 0);
    }
    if (!nae_satisfies(r.source_formula, assignment)) {
        throw PartitionInvalid("projected assignment fails the source formula");
    }
    return assignment;
}

}  // namespace

KPartition lift_witness(const ReductionArtifact& r, const WitnessValue& w) {
    KPartition p;
    if (r.reduction_id == "sat-bicolor") {
        p = lift_sat_bicolor(r, assignment_of(w));
        assert(verify_bicolor_cut(r.graph, p).ok);
    } else if (r.reduction_id == "sat-majority2") {
        p = lift_sat_majority2(r, assignment_of(w));
        assert(verify_majority(r.graph, p).ok);
    } else if (r.reduction_id == "h3c-majority3") {
        p = lift_h3c(r, coloring_of(w));
        assert(verify_majority(r.graph, p).ok);
    } else if (r.reduction_id == "nae-connected") {
        p = lift_nae(r, assignment_of(w));
        assert(verify_connected_cut(r.graph, p).ok());
    } else {
        throw WitnessInvalid("unknown reduction id " + r.reduction_id);
    }
    return p;
}

WitnessValue project_witness(const ReductionArtifact& r, const KPartition& p) {
    if (r.reduction_id == "sat-bicolor") return project_sat(r, p, false);
    if (r.reduction_id == "sat-majority2") return project_sat(r, p, true);
    if (r.reduction_id == "h3c-majority3") return project_h3c(r, p);
    if (r.reduction_id == "nae-connected") return project_nae(r, p);
    throw PartitionInvalid("unknown reduction id " + r.reduction_id);
}

std::string serialize_roles(const ReductionArtifact& r) {
    nlohmann::ordered_json doc;
    doc["reduction"] = r.reduction_id;
    doc["n"] = r.graph.vertex_count();
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (int v = 0; v < static_cast<int>(r.roles.size()); ++v) {
        roles[std::to_string(v + 1)] = r.roles[static_cast<std::size_t>(v)];
    }
    doc["roles"] = std::move(roles);
    if (r.reduction_id == "nae-connected") {
        nlohmann::ordered_json e5 = nlohmann::ordered_json::object();
        for (int var = 1; var <= static_cast<int>(r.e5_choices.size()); ++var) {
            const auto& [clause, pos] = r.e5_choices[static_cast<std::size_t>(var - 1)];
            e5[std::to_string(var)] = {clause, pos};
        }
        doc["e5_choices"] = std::move(e5);
        nlohmann::ordered_json padded = nlohmann::ordered_json::array();
        for (const auto& [v, a, b] : r.nae.padded) padded.push_back({v, a, b});
        doc["padded_variables"] = std::move(padded);
    }
    if (r.reduction_id == "sat-majority2") {
        nlohmann::ordered_json q = nlohmann::ordered_json::array();
        for (int i = 1; i <= r.source_formula.num_vars; ++i) {
            q.push_back(majority2_q(r.source_formula, i));
        }
        doc["q"] = std::move(q);
    }
    return doc.dump(2) + "\n";
}

void save_roles(const ReductionArtifact& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write role map " + path);
    out << serialize_roles(r);
}

}  // namespace majpart
