#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majpart/graph.hpp"

namespace majpart {

// A k-partition of the vertex range, stored as 1-based part labels per
// vertex. Parts may be empty; labels outside 1..k are rejected by the
// verifiers and the parser.
struct KPartition {
    int k = 0;
    std::vector<int> part;  // part[v] in 1..k

    int size() const { return static_cast<int>(part.size()); }
    auto operator<=>(const KPartition&) const = default;
};

struct MajorityViolation {
    int v;
    Color color;
    int inside;      // edges of this color from v into its own part
    int color_deg;   // total edges of this color at v
    auto operator<=>(const MajorityViolation&) const = default;
};

struct MajorityReport {
    bool ok = false;
    std::vector<MajorityViolation> violations;
};

// Majority condition: every vertex has, in each color, at most as many edges
// into its own part as into the rest of the graph (2*inside <= color degree).
MajorityReport verify_majority(const EdgeColoredGraph& g, const KPartition& p);

struct BicolorCutViolation {
    int v;
    Color color;  // color with no crossing edge at v
    auto operator<=>(const BicolorCutViolation&) const = default;
};

struct BicolorCutReport {
    bool ok = false;
    std::vector<BicolorCutViolation> violations;
};

// Bicolor-cut condition (2-partitions only): every vertex has at least one
// crossing edge of each color.
BicolorCutReport verify_bicolor_cut(const EdgeColoredGraph& g, const KPartition& p);

// Part sizes pairwise differ by at most one.
bool is_balanced(const KPartition& p);

// Subgraph on the same vertex set containing exactly the crossing edges of
// color c of a 2-partition, kept in that color.
EdgeColoredGraph cut_color_subgraph(const EdgeColoredGraph& g, const KPartition& p, Color c);

struct ConnectedCutReport {
    bool red_connected = false;
    bool blue_connected = false;
    bool ok() const { return red_connected && blue_connected; }
};

// Whether each color's cut subgraph is spanning connected (one component
// covering every vertex). A partition with all vertices on one side has
// empty cut subgraphs and fails both flags for n >= 2.
ConnectedCutReport verify_connected_cut(const EdgeColoredGraph& g, const KPartition& p);

// A good subset is a nonempty proper subset s of the vertices such that every
// member has, in each color, at most half of its edges inside s.
bool verify_good_subset(const EdgeColoredGraph& g, const std::vector<int>& s);

struct GoodSubsetResult {
    std::optional<std::vector<int>> subset;  // sorted vertex ids when found
    bool inconclusive = false;               // search gave up without a verdict
};

// Finds a good subset with at least min_size vertices. Exhaustive over all
// proper subsets for n <= 25; beyond that a budgeted seeded local search
// that reports inconclusive=true on failure. Throws BadArgs for min_size < 1.
GoodSubsetResult search_good_subset(const EdgeColoredGraph& g, int min_size = 1);

// Partition text format:
//   s partition <n> <k>
//   <label> ... (n labels in 1..k, vertex order 0..n-1)
KPartition parse_partition(const std::string& text);
std::string serialize_partition(const KPartition& p);

KPartition load_partition(const std::string& path);
void save_partition(const KPartition& p, const std::string& path);

}  // namespace majpart
