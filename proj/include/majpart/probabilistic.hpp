#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "majpart/graph.hpp"
#include "majpart/partition.hpp"
#include "majpart/solvers.hpp"

namespace majpart {

// Partitions of the vertex range 0..n-1 into disjoint pairs / triples. The
// blocks need not be edges of any graph.
struct Matching2 {
    std::vector<std::array<int, 2>> blocks;
};

struct Matching3 {
    std::vector<std::array<int, 3>> blocks;
};

// Uniform random pairing / tripling of 0..n-1 (Fisher-Yates shuffle, then
// consecutive blocks). Deterministic per seed. Throws BadParity unless n is
// even / divisible by 3.
Matching2 pair_matching(int n, std::uint64_t seed);
Matching3 triple_matching(int n, std::uint64_t seed);

// Uniform random proper 2-coloring of the pairing: each pair gets one vertex
// per part, so the result is always exactly balanced. One fair bit per pair,
// drawn in block order.
KPartition random_bipartition(const Matching2& m, std::uint64_t seed);

// Uniform random rainbow 3-coloring: each triple gets one vertex per part
// via a uniformly drawn permutation of (1,2,3), one draw per triple in block
// order. Always exactly balanced.
KPartition rainbow_coloring(const Matching3& m, std::uint64_t seed);

struct BadEvent {
    int v;
    Color color;
    auto operator<=>(const BadEvent&) const = default;
};

// The pairs (v, color) whose crossing color degree fails the strict margin:
// flagged iff d_c(v) >= 1 and crossing <= d_c(v)/2. Vertices with no edges
// of a color cannot be flagged for it. An empty list implies the partition
// passes verify_majority with strict inequalities at every positive color
// degree. Results are ordered by vertex, then color.
std::vector<BadEvent> bad_events(const EdgeColoredGraph& g, const KPartition& p);

// Resampling heuristic for a balanced majority 3-partition: draw a triple
// matching and a rainbow coloring, then repeatedly pick the lowest flagged
// (v, color) and redraw every triple meeting N_color(v) or v itself. Each
// triple consumes its own random substream, so redrawing one triple never
// shifts another's draws. Sat outcomes are verified and balanced;
// Timeout status means the round budget ran out (not a nonexistence claim).
// nodes_explored counts resampling rounds. Throws BadParity unless
// n is divisible by 3, BadArgs unless max_rounds >= 1.
SolveOutcome resample_majority3(const EdgeColoredGraph& g, std::uint64_t seed, int max_rounds);

// e^{delta/18}/(9 delta) - 2, in extended precision; the largest maximum
// degree the balanced-3-partition existence bound tolerates at minimum
// color-degree delta. Returns -infinity for delta <= 0 (degenerate guard).
long double lll_threshold(int delta);

// Whether (delta, Delta) satisfies Delta <= lll_threshold(delta).
bool lll_hypothesis_holds(int delta, int Delta);

struct LLLCheck {
    bool holds = false;
    int delta = 0;
    int Delta = 0;
    long double threshold = 0;
};

// Evaluates the hypothesis on a graph's own delta and Delta. Throws
// EmptyGraph for n = 0.
LLLCheck lll_hypothesis_check(const EdgeColoredGraph& g);

// Parameter pack of the existence proof: per-color minimum degrees feed the
// slack sigma_i = sqrt(delta_i (ln(2ek)/2 + ln Delta)) with k = 2 colors,
// and each (vertex, color) carries weight e^{(1/delta - 1/18) d_c(v)}.
// Weights must lie in (0,1), which requires delta > 18; smaller delta throws
// InvariantViolation.
struct LLLParameters {
    int k = 2;
    int delta = 0;
    int Delta = 0;
    std::array<long double, 2> sigma{};
    std::vector<std::array<long double, 2>> weights;  // by vertex, [color-1]
};

LLLParameters lll_parameters(const EdgeColoredGraph& g);

struct PaddedGraph {
    EdgeColoredGraph graph;
    std::vector<int> added;  // ids of the appended duplicate vertices
};

// Appends 0-2 copies of vertex 0 (each inheriting all its colored edges,
// copies mutually non-adjacent) until the vertex count is divisible by 3.
PaddedGraph pad_to_multiple_of_3(const EdgeColoredGraph& g);

// e^{-2 sigma^2 / n}: upper bound on P(X <= E[X] - sigma) for a sum X of n
// independent 0/1 variables. Throws BadArgs for n < 1 or sigma < 0.
double hoeffding_bound(int n, double sigma);

// Monte-Carlo estimate of P(X <= threshold) for X ~ Binomial(n, p_success),
// using one substream per trial. Deterministic per seed. Throws BadArgs for
// n < 1, p outside [0,1], or trials < 1.
double empirical_tail(int n, double p_success, double threshold, int trials,
                      std::uint64_t seed);

}  // namespace majpart
