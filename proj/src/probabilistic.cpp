#include "majpart/probabilistic.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "majpart/rng.hpp"

namespace majpart {

namespace {

std::vector<int> shuffled_range(int n, std::uint64_t seed) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    SplitMix64 rng(seed);
    rng.shuffle(ids);
    return ids;
}

}  // namespace

Matching2 pair_matching(int n, std::uint64_t seed) {
    if (n < 0 || n % 2 != 0) {
        throw BadParity("pair matching needs an even vertex count, got " + std::to_string(n));
    }
    const std::vector<int> ids = shuffled_range(n, seed);
    Matching2 m;
    for (int b = 0; b < n / 2; ++b) {
        m.blocks.push_back({ids[static_cast<std::size_t>(2 * b)],
                            ids[static_cast<std::size_t>(2 * b + 1)]});
    }
    return m;
}

Matching3 triple_matching(int n, std::uint64_t seed) {
    if (n < 0 || n % 3 != 0) {
        throw BadParity("triple matching needs a vertex count divisible by 3, got " +
                        std::to_string(n));
    }
    const std::vector<int> ids = shuffled_range(n, seed);
    Matching3 m;
    for (int b = 0; b < n / 3; ++b) {
        m.blocks.push_back({ids[static_cast<std::size_t>(3 * b)],
                            ids[static_cast<std::size_t>(3 * b + 1)],
                            ids[static_cast<std::size_t>(3 * b + 2)]});
    }
    return m;
}

KPartition random_bipartition(const Matching2& m, std::uint64_t seed) {
    KPartition p;
    p.k = 2;
    p.part.assign(2 * m.blocks.size(), 0);
    SplitMix64 rng(seed);
    for (const auto& [a, b] : m.blocks) {
        const bool swap_sides = rng.next_below(2) == 1;
        p.part[static_cast<std::size_t>(a)] = swap_sides ? 2 : 1;
        p.part[static_cast<std::size_t>(b)] = swap_sides ? 1 : 2;
    }
    return p;
}

namespace {

// Permutations of (1,2,3) in lexicographic order.
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};

void apply_rainbow(KPartition& p, const std::array<int, 3>& block, std::uint64_t draw) {
    const auto& perm = kPerm3[static_cast<std::size_t>(draw)];
    for (int i = 0; i < 3; ++i) {
        p.part[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])] =
            perm[static_cast<std::size_t>(i)];
    }
}

}  // namespace

KPartition rainbow_coloring(const Matching3& m, std::uint64_t seed) {
    KPartition p;
    p.k = 3;
    p.part.assign(3 * m.blocks.size(), 0);
    SplitMix64 rng(seed);
    for (const auto& block : m.blocks) {
        apply_rainbow(p, block, rng.next_below(6));
    }
    return p;
}

std::vector<BadEvent> bad_events(const EdgeColoredGraph& g, const KPartition& p) {
    if (static_cast<int>(p.part.size()) != g.vertex_count()) {
        throw SizeMismatch("partition covers " + std::to_string(p.part.size()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    std::vector<BadEvent> events;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const Color c : kColors) {
            const int d = g.color_degree(v, c);
            if (d == 0) continue;
            int crossing = 0;
            for (int u : g.neighbors(v, c)) {
                if (p.part[static_cast<std::size_t>(u)] != p.part[static_cast<std::size_t>(v)]) {
                    ++crossing;
                }
            }
            if (2 * crossing <= d) events.push_back({v, c});
        }
    }
    return events;
}

SolveOutcome resample_majority3(const EdgeColoredGraph& g, std::uint64_t seed, int max_rounds) {
    const int n = g.vertex_count();
    if (n % 3 != 0) {
        throw BadParity("resampling needs a vertex count divisible by 3, got " +
                        std::to_string(n) + "; pad first");
    }
    if (max_rounds < 1) throw BadArgs("max_rounds must be at least 1");
    const auto start = std::chrono::steady_clock::now();

    const Matching3 matching = triple_matching(n, substream_seed(seed, 0));
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < matching.blocks.size(); ++t) {
        for (int v : matching.blocks[t]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(t);
    }
    std::vector<SplitMix64> streams;
    streams.reserve(matching.blocks.size());
    for (std::size_t t = 0; t < matching.blocks.size(); ++t) {
        streams.emplace_back(substream_seed(seed, 1 + t));
    }

    KPartition p;
    p.k = 3;
    p.part.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < matching.blocks.size(); ++t) {
        apply_rainbow(p, matching.blocks[t], streams[t].next_below(6));
    }

    SolveOutcome out;
    for (int round = 0;; ++round) {
        const std::vector<BadEvent> events = bad_events(g, p);
        if (events.empty()) {
            assert(verify_majority(g, p).ok);
            assert(is_balanced(p));
            out.status = SolveStatus::Sat;
            out.witness = std::move(p);
            break;
        }
        if (round == max_rounds) {
            out.status = SolveStatus::Timeout;  // gave up; no nonexistence claim
            break;
        }
        const auto& [v, color] = events.front();
        std::vector<char> redraw(matching.blocks.size(), 0);
        redraw[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])] = 1;
        for (int u : g.neighbors(v, color)) {
            redraw[static_cast<std::size_t>(block_of[static_cast<std::size_t>(u)])] = 1;
        }
        for (std::size_t t = 0; t < matching.blocks.size(); ++t) {
            if (redraw[t]) apply_rainbow(p, matching.blocks[t], streams[t].next_below(6));
        }
        ++out.nodes_explored;
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

long double lll_threshold(int delta) {
    if (delta <= 0) return -std::numeric_limits<long double>::infinity();
    const long double d = delta;
    return std::exp(d / 18.0L) / (9.0L * d) - 2.0L;
}

bool lll_hypothesis_holds(int delta, int Delta) {
    return delta >= 1 && static_cast<long double>(Delta) <= lll_threshold(delta);
}

LLLCheck lll_hypothesis_check(const EdgeColoredGraph& g) {
    LLLCheck check;
    check.delta = min_color_degree(g);  // throws EmptyGraph for n = 0
    check.Delta = max_degree(g);
    check.threshold = lll_threshold(check.delta);
    check.holds = lll_hypothesis_holds(check.delta, check.Delta);
    return check;
}

LLLParameters lll_parameters(const EdgeColoredGraph& g) {
    LLLParameters params;
    params.delta = min_color_degree(g);  // throws EmptyGraph for n = 0
    params.Delta = max_degree(g);
    if (params.delta <= 18) {
        throw InvariantViolation("weight scheme needs minimum color-degree > 18, got " +
                                 std::to_string(params.delta));
    }
    std::array<int, 2> delta_c = {std::numeric_limits<int>::max(),
                                  std::numeric_limits<int>::max()};
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const Color c : kColors) {
            delta_c[static_cast<std::size_t>(c - 1)] =
                std::min(delta_c[static_cast<std::size_t>(c - 1)], g.color_degree(v, c));
        }
    }
    const long double ln_term =
        std::log(2.0L * std::exp(1.0L) * params.k) / 2.0L + std::log((long double)params.Delta);
    for (const Color c : kColors) {
        params.sigma[static_cast<std::size_t>(c - 1)] =
            std::sqrt(static_cast<long double>(delta_c[static_cast<std::size_t>(c - 1)]) *
                      ln_term);
    }
    const long double exponent_rate = 1.0L / params.delta - 1.0L / 18.0L;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::array<long double, 2> w{};
        for (const Color c : kColors) {
            w[static_cast<std::size_t>(c - 1)] =
                std::exp(exponent_rate * g.color_degree(v, c));
            assert(w[static_cast<std::size_t>(c - 1)] > 0.0L &&
                   w[static_cast<std::size_t>(c - 1)] < 1.0L);
        }
        params.weights.push_back(w);
    }
    return params;
}

PaddedGraph pad_to_multiple_of_3(const EdgeColoredGraph& g) {
    PaddedGraph result;
    const int n = g.vertex_count();
    const int extra = (3 - n % 3) % 3;
    result.graph = EdgeColoredGraph(n + extra);
    for (const ColoredEdge& e : g.edges()) result.graph.add_edge(e.u, e.v, e.color);
    for (int i = 0; i < extra; ++i) {
        const int copy = n + i;
        for (const Color c : kColors) {
            for (int u : g.neighbors(0, c)) result.graph.add_edge(copy, u, c);
        }
        result.added.push_back(copy);
    }
    return result;
}

double hoeffding_bound(int n, double sigma) {
    if (n < 1) throw BadArgs("hoeffding bound needs n >= 1");
    if (sigma < 0.0) throw BadArgs("hoeffding bound needs sigma >= 0");
    return std::exp(-2.0 * sigma * sigma / n);
}

double empirical_tail(int n, double p_success, double threshold, int trials,
                      std::uint64_t seed) {
    if (n < 1) throw BadArgs("empirical tail needs n >= 1");
    if (p_success < 0.0 || p_success > 1.0) throw BadArgs("p_success must be in [0,1]");
    if (trials < 1) throw BadArgs("empirical tail needs trials >= 1");
    std::int64_t hits = 0;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(trial)));
        int x = 0;
        for (int j = 0; j < n; ++j) {
            if (rng.next_bernoulli(p_success)) ++x;
        }
        if (static_cast<double>(x) <= threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace majpart
