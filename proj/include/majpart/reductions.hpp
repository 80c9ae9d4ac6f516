#pragma once

#include <string>
#include <variant>
#include <vector>

#include "majpart/formula.hpp"
#include "majpart/graph.hpp"
#include "majpart/partition.hpp"

namespace majpart {

// Output of a reduction: the constructed graph, a role name per vertex
// ("v:2", "~v:2", "w:1", "z:3", "x:1:2", "a:5", "g:1:2:3:x4", ...), an id
// naming the reduction, and the source instance needed to lift and project
// witnesses deterministically.
struct ReductionArtifact {
    EdgeColoredGraph graph;
    std::vector<std::string> roles;
    std::string reduction_id;

    CnfFormula source_formula;        // sat-bicolor, sat-majority2, nae-connected
    Hypergraph3 source_hypergraph;    // h3c-majority3
    NaeNormalization nae;             // nae-connected only
    std::vector<std::array<int, 2>> e5_choices;  // nae-connected: {clause, position} per variable, 1-based
};

// Fixed small graphs.

// Triangle with two red edges and one blue edge; the smallest graph with no
// majority 2-partition.
EdgeColoredGraph triangle_nonmono();

// K5 whose blue edges form the cycle x1..x5 and whose red edges form the
// complementary 5-cycle; no majority 2-partition despite delta = 2.
EdgeColoredGraph figure2_k5();

// Appends one 4-vertex gadget to three existing anchor vertices and returns
// the extended graph: internal red edges x1x2, x4x1, x4x2, x4x3 and blue
// x3x1, x3x2; red edges {x1,x2} x anchors, blue edges {x3,x4} x anchors.
// The gadget forbids its anchors from sharing one label in any majority
// 3-partition.
EdgeColoredGraph gadget_append(const EdgeColoredGraph& g, int a, int b, int c);

// Seven anchors with a gadget on every one of the 35 anchor triples; the
// 147-vertex graph with no majority 3-partition.
EdgeColoredGraph counterexample_147();
std::vector<std::string> counterexample_147_roles();

// Blue bipartite circulant (sides of size max(k+1, 3), side vertex i joined
// to i..i+k-1 on the other side) plus a blue-disjoint red perfect matching
// across and red cliques inside each side.
EdgeColoredGraph no_good_trees(int k);
std::vector<std::string> no_good_trees_roles(int k);

struct NoGoodTreesReport {
    int k = 0;
    bool blue_regular = false;        // every vertex has blue degree exactly k
    int blue_edge_connectivity = 0;
    int red_edge_connectivity = 0;
    bool parallel_free = false;       // no red edge parallel to a blue edge
};

NoGoodTreesReport check_no_good_trees(const EdgeColoredGraph& g, int k);

// NP-hardness reductions.

// 3-SAT to bicolor-cut 2-partition on 2m+2n+8 vertices. Every variable must
// occur in some clause (a variable with no occurrences makes the target
// unconditionally infeasible, breaking the equivalence).
ReductionArtifact reduce_sat_bicolor(const CnfFormula& f);

// 3-SAT to majority 2-partition: the bicolor-cut graph with blue h1-literal
// edges removed, one w''_j per clause, and q_i = max(occ(x_i), occ(-x_i))
// blue-attached alternating 4-cycles on each literal vertex.
ReductionArtifact reduce_sat_majority2(const CnfFormula& f);

// 3-uniform hypergraph 3-colorability to majority 3-partition: one anchor
// per hypergraph vertex, one gadget per hyperedge.
ReductionArtifact reduce_h3c_majority3(const Hypergraph3& h);

// NAE-3-SAT to a 2-partition whose red and blue cut subgraphs are both
// spanning connected, on 3m+8 vertices (m counted after NAE normalization).
ReductionArtifact reduce_nae_connected(const CnfFormula& f);

// A witness for a reduction source: a truth assignment (SAT families) or a
// 3-coloring with values 1..3 (hypergraph family).
using WitnessValue = std::variant<std::vector<bool>, std::vector<int>>;

// Transcribes a satisfying source witness into a partition passing the
// reduction's target verifier. The witness is validated first.
KPartition lift_witness(const ReductionArtifact& r, const WitnessValue& w);

// Reads a satisfying source witness back off a partition that passes the
// target verifier. The partition is validated first.
WitnessValue project_witness(const ReductionArtifact& r, const KPartition& p);

// Role-map sidecar (JSON): reduction id plus vertex->role map with 1-based
// vertex ids, and per-reduction extras (E5 occurrence choices, padding).
std::string serialize_roles(const ReductionArtifact& r);
void save_roles(const ReductionArtifact& r, const std::string& path);

}  // namespace majpart
