#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majpart/graph.hpp"
#include "majpart/partition.hpp"

namespace majpart {

enum class SolveStatus { Sat, Unsat, Timeout };

std::string to_string(SolveStatus s);

// Outcome of a decision procedure. status == Sat iff witness is present, and
// every returned witness has already passed the matching verifier. For the
// resampling heuristic, Timeout means "gave up", not a nonexistence claim.
// nodes_explored is deterministic for runs that finish (Sat or Unsat).
struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<KPartition> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

// Local-search bipartition against color c only: starting from everything in
// part 1, any vertex with strictly more same-part than crossing color-c
// neighbors moves to the other part (scans by vertex id until a fixpoint).
// Each move strictly grows the color-c cut, so this terminates, and at the
// fixpoint every vertex has crossing color-c degree >= inside color-c degree.
KPartition erdos_bipartition(const EdgeColoredGraph& g, Color c);

// Overlays the red and the blue local-search bipartitions into a 4-partition
// (part = 2*(red side - 1) + blue side). The result always satisfies the
// majority condition, for every graph.
KPartition majority_4_partition(const EdgeColoredGraph& g);

// Exhaustive backtracking search for a majority k-partition.
//
// Vertex order: descending total degree, ties by vertex id. Symmetry
// breaking: a vertex may only take a label at most one larger than the
// largest label used before it (parts are interchangeable). Pruning: once a
// vertex's fixed same-part color degree exceeds what its remaining undecided
// neighbors could still push outside, the branch is dead.
//
// Unsat is only reported after the whole reduced space is exhausted; if the
// budget expires first the status is Timeout. Sat witnesses are re-verified
// before being returned. Throws BadArgs for k < 1 or a non-positive budget.
SolveOutcome exact_majority(const EdgeColoredGraph& g, int k,
                            std::chrono::milliseconds budget);

// Exhaustive backtracking search for a 2-partition giving every vertex at
// least one crossing edge of each color. Same ordering, symmetry breaking,
// budget and verification contract as exact_majority; the prune fires when
// some assigned vertex has no crossing edge of a color and no undecided
// neighbor of that color left.
SolveOutcome exact_bicolor_cut(const EdgeColoredGraph& g,
                               std::chrono::milliseconds budget);

// Exhaustive search for a 2-partition whose red crossing edges and blue
// crossing edges each form a spanning connected subgraph. Enumerates the
// 2^(n-1) cuts with vertex 0 pinned to part 1; graphs with n > 62 return
// Timeout immediately (the mask enumeration does not scale there anyway).
SolveOutcome exact_connected_cut(const EdgeColoredGraph& g,
                                 std::chrono::milliseconds budget);

// For each of the 27 label triples (a,b,c) on a gadget's three attachment
// vertices: a labeling of x1..x4 completing it to a majority-valid labeling
// of the 7-vertex local instance (the gadget plus its anchors, anchors
// checked against their local degrees), or nothing when no completion
// exists. The three monochromatic triples are exactly the infeasible ones;
// stored completions are the lexicographically first valid ones.
struct GadgetExtensionTable {
    std::array<std::optional<std::array<int, 4>>, 27> entries;

    static int index(int a, int b, int c);
    const std::optional<std::array<int, 4>>& at(int a, int b, int c) const;
};

GadgetExtensionTable gadget_extension_table();

// Enumeration evidence that the 147-vertex construction has no majority
// 3-partition: the gadget table above plus, for every one of the 3^7
// labelings of the seven attachment vertices, a monochromatic triple
// (1-based anchor ids, i<j<k). Labeling index t encodes anchor a_i's label
// as 1 + (t / 3^(7-i)) % 3 (a_1 most significant).
struct RefutationCertificate {
    int n = 0;
    GadgetExtensionTable table;
    std::vector<std::array<int, 3>> transcript;
};

// Builds the certificate. Throws StructureMismatch unless g equals the
// 147-vertex construction (vertex count and exact edge set).
RefutationCertificate refute_counterexample(const EdgeColoredGraph& g);

struct RefutationCheck {
    bool ok = false;
    std::string message;
};

// Independent re-check of a certificate against g. Verifies the graph
// structure, re-verifies every stored gadget extension on its 7-vertex
// local instance with verify_majority, re-establishes that the monochromatic
// triples admit no completion (all 81 candidates fail at an x vertex), and
// checks every transcript entry is monochromatic under its labeling.
RefutationCheck check_refutation(const EdgeColoredGraph& g,
                                 const RefutationCertificate& cert);

// JSON (de)serialization of certificates; layout documented in the README.
std::string serialize_refutation(const RefutationCertificate& cert);
RefutationCertificate parse_refutation(const std::string& text);
RefutationCertificate load_refutation(const std::string& path);
void save_refutation(const RefutationCertificate& cert, const std::string& path);

}  // namespace majpart
