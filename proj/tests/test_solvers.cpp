#include <doctest.h>

#include <chrono>
#include <vector>

#include "majpart/reductions.hpp"
#include "majpart/solvers.hpp"
#include "support/oracles.hpp"

using namespace majpart;
using namespace std::chrono_literals;

namespace {

constexpr std::chrono::milliseconds kGenerous{10000};

}  // namespace

TEST_CASE("local search bipartition meets the half-degree bound") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 12;
        const EdgeColoredGraph g = oracles::random_graph(n, 0.5, 0.4, 3100 + trial);
        for (const Color c : kColors) {
            const KPartition p = erdos_bipartition(g, c);
            REQUIRE(p.k == 2);
            REQUIRE(p.size() == n);
            for (int v = 0; v < n; ++v) {
                int crossing = 0;
                for (const int u : g.neighbors(v, c)) {
                    if (p.part[u] != p.part[v]) ++crossing;
                }
                // At a fixpoint, at least half of every vertex's color-c
                // edges cross.
                CHECK(2 * crossing >= g.color_degree(v, c));
            }
            CHECK(p == erdos_bipartition(g, c));  // deterministic
        }
    }
}

TEST_CASE("overlay 4-partition always satisfies majority") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 15;
        const EdgeColoredGraph g =
            oracles::random_graph(n, 0.3 + 0.05 * (trial % 10), 0.6, 3300 + trial);
        const KPartition p = majority_4_partition(g);
        CHECK(p.k == 4);
        CHECK(verify_majority(g, p).ok);
        CHECK(oracles::majority_ok(g, p));
    }
    // Works on the graphs built to defeat small k as well.
    CHECK(oracles::majority_ok(counterexample_147(),
                               majority_4_partition(counterexample_147())));
}

TEST_CASE("exact majority argument validation") {
    const EdgeColoredGraph g(2);
    CHECK_THROWS_AS(exact_majority(g, 0, kGenerous), BadArgs);
    CHECK_THROWS_AS(exact_majority(g, 2, 0ms), BadArgs);
    CHECK_THROWS_AS(exact_majority(g, 2, -5ms), BadArgs);
    CHECK_THROWS_AS(exact_bicolor_cut(g, 0ms), BadArgs);
    CHECK_THROWS_AS(exact_connected_cut(g, 0ms), BadArgs);
}

TEST_CASE("exact majority small impossibilities") {
    const SolveOutcome tri2 = exact_majority(triangle_nonmono(), 2, kGenerous);
    CHECK(tri2.status == SolveStatus::Unsat);
    CHECK_FALSE(tri2.witness.has_value());

    const SolveOutcome tri3 = exact_majority(triangle_nonmono(), 3, kGenerous);
    REQUIRE(tri3.status == SolveStatus::Sat);
    CHECK(oracles::majority_ok(triangle_nonmono(), *tri3.witness));

    CHECK(exact_majority(figure2_k5(), 2, kGenerous).status == SolveStatus::Unsat);
    const SolveOutcome k53 = exact_majority(figure2_k5(), 3, kGenerous);
    REQUIRE(k53.status == SolveStatus::Sat);
    CHECK(oracles::majority_ok(figure2_k5(), *k53.witness));
}

TEST_CASE("exact majority agrees with enumeration") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 7;
        const EdgeColoredGraph g =
            oracles::random_graph(n, 0.45, 0.45, 5100 + trial);
        for (int k = 2; k <= 3; ++k) {
            const SolveOutcome got = exact_majority(g, k, kGenerous);
            const auto expect = oracles::find_majority(g, k);
            REQUIRE(got.status != SolveStatus::Timeout);
            CHECK((got.status == SolveStatus::Sat) == expect.has_value());
            if (got.status == SolveStatus::Sat) {
                CHECK(oracles::majority_ok(g, *got.witness));
            }
        }
    }
}

TEST_CASE("exact majority node counts are reproducible") {
    const EdgeColoredGraph g = oracles::random_graph(9, 0.5, 0.5, 987);
    const SolveOutcome a = exact_majority(g, 2, kGenerous);
    const SolveOutcome b = exact_majority(g, 2, kGenerous);
    CHECK(a.status == b.status);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness == b.witness);
}

TEST_CASE("tiny budgets time out on large searches") {
    const SolveOutcome out = exact_majority(counterexample_147(), 3, 1ms);
    CHECK(out.status == SolveStatus::Timeout);
    CHECK_FALSE(out.witness.has_value());
}

TEST_CASE("exact bicolor cut agrees with enumeration") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 8;
        const EdgeColoredGraph g =
            oracles::random_graph(n, 0.5, 0.5, 5600 + trial);
        const SolveOutcome got = exact_bicolor_cut(g, kGenerous);
        REQUIRE(got.status != SolveStatus::Timeout);
        CHECK((got.status == SolveStatus::Sat) ==
              oracles::find_bicolor_cut(g).has_value());
        if (got.status == SolveStatus::Sat) {
            CHECK(oracles::bicolor_cut_ok(g, *got.witness));
        }
    }
}

TEST_CASE("exact connected cut agrees with enumeration") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 8;
        const EdgeColoredGraph g =
            oracles::random_graph(n, 0.55, 0.55, 5900 + trial);
        const SolveOutcome got = exact_connected_cut(g, kGenerous);
        REQUIRE(got.status != SolveStatus::Timeout);
        CHECK((got.status == SolveStatus::Sat) ==
              oracles::find_connected_cut(g).has_value());
        if (got.status == SolveStatus::Sat) {
            CHECK(oracles::connected_cut_ok(g, *got.witness));
        }
    }

    CHECK(exact_connected_cut(EdgeColoredGraph(0), kGenerous).status ==
          SolveStatus::Unsat);
    // The mask enumeration refuses oversized instances outright.
    CHECK(exact_connected_cut(EdgeColoredGraph(63), kGenerous).status ==
          SolveStatus::Timeout);
}

TEST_CASE("gadget extension table") {
    const GadgetExtensionTable table = gadget_extension_table();
    const EdgeColoredGraph local = gadget_append(EdgeColoredGraph(3), 0, 1, 2);
    int feasible = 0;
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                const auto& entry = table.at(a, b, c);
                if (a == b && b == c) {
                    // Monochromatic anchors admit no completion.
                    CHECK_FALSE(entry.has_value());
                    continue;
                }
                REQUIRE(entry.has_value());
                ++feasible;
                KPartition p;
                p.k = 3;
                p.part = {a, b, c, (*entry)[0], (*entry)[1], (*entry)[2], (*entry)[3]};
                CHECK(oracles::majority_ok(local, p));
            }
        }
    }
    CHECK(feasible == 24);
    // Frozen sample entry: anchors (1,2,3) extend lexicographically first to
    // (3,2,1,3).
    REQUIRE(table.at(1, 2, 3).has_value());
    CHECK(*table.at(1, 2, 3) == std::array<int, 4>{1, 2, 3, 1});
}

TEST_CASE("refutation certificate round trip and checking") {
    const EdgeColoredGraph g = counterexample_147();
    const RefutationCertificate cert = refute_counterexample(g);
    CHECK(cert.n == 147);
    CHECK(cert.transcript.size() == 2187);

    const RefutationCheck ok = check_refutation(g, cert);
    CHECK(ok.ok);

    // Serialization round trips exactly.
    const std::string text = serialize_refutation(cert);
    const RefutationCertificate back = parse_refutation(text);
    CHECK(back.n == cert.n);
    CHECK(back.transcript == cert.transcript);
    CHECK(back.table.entries == cert.table.entries);
    CHECK(serialize_refutation(back) == text);
    CHECK_THROWS_AS(parse_refutation("not json"), SyntaxError);
    CHECK_THROWS_AS(parse_refutation("{}"), SyntaxError);

    // Tampering is caught: wrong vertex count,
    RefutationCertificate bad_n = cert;
    bad_n.n = 146;
    CHECK_FALSE(check_refutation(g, bad_n).ok);
    // a transcript entry pointing at a non-monochromatic triple (labeling 5
    // gives the last three anchors labels 1, 2, 3),
    RefutationCertificate bad_entry = cert;
    bad_entry.transcript[5] = {5, 6, 7};
    CHECK_FALSE(check_refutation(g, bad_entry).ok);
    // a gadget-table completion claimed impossible,
    RefutationCertificate bad_table = cert;
    bad_table.table.entries[GadgetExtensionTable::index(1, 2, 3)].reset();
    CHECK_FALSE(check_refutation(g, bad_table).ok);
    // a fabricated completion for a monochromatic triple,
    RefutationCertificate fake = cert;
    fake.table.entries[GadgetExtensionTable::index(1, 1, 1)] = {{1, 2, 3, 1}};
    CHECK_FALSE(check_refutation(g, fake).ok);
    // and the wrong graph altogether.
    CHECK_FALSE(check_refutation(figure2_k5(), cert).ok);
    CHECK_THROWS_AS(refute_counterexample(figure2_k5()), StructureMismatch);
}
