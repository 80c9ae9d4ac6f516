// majpart: batch front end for the 2-edge-colored graph partition toolkit.
//
// Exit codes: 0 Sat/ok/verified, 1 Unsat/refuted/invalid, 2 Timeout/GaveUp,
// 64 usage or input errors. The first stdout line is machine readable
// (space-separated key=value pairs); anything after it is human detail.
// Set MAJPART_LOG=1 for progress notes on stderr.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "majpart/formula.hpp"
#include "majpart/graph.hpp"
#include "majpart/partition.hpp"
#include "majpart/probabilistic.hpp"
#include "majpart/reductions.hpp"
#include "majpart/rng.hpp"
#include "majpart/solvers.hpp"

namespace {

bool log_enabled() {
    const char* v = std::getenv("MAJPART_LOG");
    return v != nullptr && *v != '\0';
}

void log_note(const std::string& msg) {
    if (log_enabled()) std::cerr << "log: " << msg << "\n";
}

// g.ecg -> g.<ext>; a path without an extension gets one appended.
std::string replace_extension(const std::string& path, const std::string& ext) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + ext;
    }
    return path.substr(0, dot) + ext;
}

int exit_code(majpart::SolveStatus s) {
    switch (s) {
        case majpart::SolveStatus::Sat: return 0;
        case majpart::SolveStatus::Unsat: return 1;
        case majpart::SolveStatus::Timeout: return 2;
    }
    return 2;
}

majpart::ReductionArtifact generated_artifact(const std::string& which, int k) {
    majpart::ReductionArtifact art;
    art.reduction_id = "gen:" + which;
    if (which == "triangle") {
        art.graph = majpart::triangle_nonmono();
    } else if (which == "figure2") {
        art.graph = majpart::figure2_k5();
    } else if (which == "counterexample147") {
        art.graph = majpart::counterexample_147();
        art.roles = majpart::counterexample_147_roles();
    } else if (which == "nogoodtrees") {
        art.graph = majpart::no_good_trees(k);
        art.roles = majpart::no_good_trees_roles(k);
    }
    if (art.roles.empty()) {
        for (int v = 1; v <= art.graph.vertex_count(); ++v) {
            art.roles.push_back("x:" + std::to_string(v));
        }
    }
    return art;
}

int run_gen(const std::string& which, int k, const std::string& out) {
    const majpart::ReductionArtifact art = generated_artifact(which, k);
    majpart::save_graph(art.graph, out);
    majpart::save_roles(art, out + ".roles.json");
    std::cout << "status=Ok command=gen kind=" << which << " n=" << art.graph.vertex_count()
              << " m=" << art.graph.edges().size() << " out=" << out << " roles=" << out
              << ".roles.json\n";
    return 0;
}

int run_reduce(const std::string& kind, const std::string& in, const std::string& out) {
    majpart::ReductionArtifact art;
    if (kind == "h3c-majority3") {
        art = majpart::reduce_h3c_majority3(majpart::load_hypergraph(in));
    } else {
        const majpart::CnfFormula f = majpart::load_dimacs(in);
        if (kind == "sat-bicolor") art = majpart::reduce_sat_bicolor(f);
        if (kind == "sat-majority2") art = majpart::reduce_sat_majority2(f);
        if (kind == "nae-connected") art = majpart::reduce_nae_connected(f);
    }
    majpart::save_graph(art.graph, out);
    majpart::save_roles(art, out + ".roles.json");
    std::cout << "status=Ok command=reduce kind=" << kind << " n=" << art.graph.vertex_count()
              << " m=" << art.graph.edges().size() << " out=" << out << " roles=" << out
              << ".roles.json\n";
    return 0;
}

int run_solve(const std::string& kind, int k, long budget_ms, const std::string& in,
              std::string out) {
    const majpart::EdgeColoredGraph g = majpart::load_graph(in);
    if (out.empty()) out = replace_extension(in, ".part");
    const std::chrono::milliseconds budget(budget_ms);
    majpart::SolveOutcome res;
    if (kind == "majority") {
        if (k >= 4) {
            // Constructive route: the overlay of the two local-search
            // bipartitions always satisfies the majority condition.
            log_note("using constructive 4-partition route");
            majpart::KPartition p = majpart::majority_4_partition(g);
            p.k = k;  // parts beyond 4 stay empty
            res.status = majpart::SolveStatus::Sat;
            res.witness = std::move(p);
        } else {
            res = majpart::exact_majority(g, k, budget);
        }
    } else if (kind == "bicolor-cut") {
        if (k != 2) throw majpart::BadArgs("bicolor-cut is a 2-partition condition");
        res = majpart::exact_bicolor_cut(g, budget);
    } else {
        if (k != 2) throw majpart::BadArgs("connected-cut is a 2-partition condition");
        res = majpart::exact_connected_cut(g, budget);
    }
    std::cout << "status=" << majpart::to_string(res.status) << " command=solve kind=" << kind
              << " k=" << k << " n=" << g.vertex_count() << " nodes=" << res.nodes_explored;
    if (res.status == majpart::SolveStatus::Sat) {
        majpart::save_partition(*res.witness, out);
        std::cout << " out=" << out;
    }
    std::cout << "\n";
    return exit_code(res.status);
}

int run_verify(const std::string& kind, const std::string& graph_path,
               const std::string& witness_path) {
    const majpart::EdgeColoredGraph g = majpart::load_graph(graph_path);
    if (kind == "refutation") {
        const majpart::RefutationCertificate cert = majpart::load_refutation(witness_path);
        const majpart::RefutationCheck chk = majpart::check_refutation(g, cert);
        std::cout << "status=" << (chk.ok ? "Verified" : "Invalid")
                  << " command=verify kind=refutation n=" << g.vertex_count() << "\n";
        if (!chk.ok) std::cout << chk.message << "\n";
        return chk.ok ? 0 : 1;
    }
    const majpart::KPartition p = majpart::load_partition(witness_path);
    bool ok = false;
    std::size_t violations = 0;
    std::string detail;
    if (kind == "majority") {
        const majpart::MajorityReport rep = majpart::verify_majority(g, p);
        ok = rep.ok;
        violations = rep.violations.size();
        for (const auto& v : rep.violations) {
            detail += "vertex " + std::to_string(v.v + 1) + " color " +
                      std::to_string(v.color) + ": " + std::to_string(v.inside) + " of " +
                      std::to_string(v.color_deg) + " edges inside its part\n";
        }
    } else if (kind == "bicolor-cut") {
        const majpart::BicolorCutReport rep = majpart::verify_bicolor_cut(g, p);
        ok = rep.ok;
        violations = rep.violations.size();
        for (const auto& v : rep.violations) {
            detail += "vertex " + std::to_string(v.v + 1) + " has no crossing edge of color " +
                      std::to_string(v.color) + "\n";
        }
    } else {
        const majpart::ConnectedCutReport rep = majpart::verify_connected_cut(g, p);
        ok = rep.ok();
        if (!rep.red_connected) {
            ++violations;
            detail += "red cut subgraph is not spanning connected\n";
        }
        if (!rep.blue_connected) {
            ++violations;
            detail += "blue cut subgraph is not spanning connected\n";
        }
    }
    std::cout << "status=" << (ok ? "Verified" : "Invalid") << " command=verify kind=" << kind
              << " k=" << p.k << " n=" << g.vertex_count() << " violations=" << violations
              << "\n";
    std::cout << detail;
    return ok ? 0 : 1;
}

int run_refute(const std::string& in, std::string out) {
    const majpart::EdgeColoredGraph g = majpart::load_graph(in);
    if (out.empty()) out = replace_extension(in, ".refutation.json");
    const majpart::RefutationCertificate cert = majpart::refute_counterexample(g);
    const majpart::RefutationCheck chk = majpart::check_refutation(g, cert);
    if (!chk.ok) {
        std::cout << "status=Inconclusive command=refute n=" << g.vertex_count() << "\n";
        std::cout << chk.message << "\n";
        return 2;
    }
    majpart::save_refutation(cert, out);
    std::cout << "status=Refuted command=refute k=3 n=" << g.vertex_count() << " out=" << out
              << "\n";
    std::cout << "no majority 3-partition exists; certificate checked independently\n";
    return 1;
}

int run_resample(std::uint64_t seed, int max_rounds, const std::string& in, std::string out) {
    majpart::EdgeColoredGraph g = majpart::load_graph(in);
    if (out.empty()) out = replace_extension(in, ".part");
    std::string padded_path;
    std::size_t added = 0;
    if (g.vertex_count() % 3 != 0) {
        const majpart::PaddedGraph padded = majpart::pad_to_multiple_of_3(g);
        added = padded.added.size();
        g = padded.graph;
        padded_path = replace_extension(out, ".padded.ecg");
        majpart::save_graph(g, padded_path);
        log_note("padded input with " + std::to_string(added) + " duplicate vertices");
    }
    const majpart::SolveOutcome res = majpart::resample_majority3(g, seed, max_rounds);
    const bool sat = res.status == majpart::SolveStatus::Sat;
    std::cout << "status=" << (sat ? "Sat" : "GaveUp") << " command=resample seed=" << seed
              << " rounds=" << res.nodes_explored << " n=" << g.vertex_count()
              << " padded=" << added;
    if (sat) {
        majpart::save_partition(*res.witness, out);
        std::cout << " out=" << out;
        if (!padded_path.empty()) std::cout << " padded_graph=" << padded_path;
    }
    std::cout << "\n";
    if (!padded_path.empty() && sat) {
        std::cout << "partition labels refer to the padded graph\n";
    }
    return sat ? 0 : 2;
}

int run_tailstudy(int trials, std::uint64_t seed, const std::string& out) {
    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw majpart::SyntaxError("cannot write " + out);
    csv << "n,threshold,empirical,bound\n";
    int cell = 0;
    for (const int n : {10, 20, 50, 100}) {
        const double sqn = std::sqrt(static_cast<double>(n));
        for (const double sigma : {0.0, sqn, 2.0 * sqn}) {
            const double threshold = n / 2.0 - sigma;
            const double empirical = majpart::empirical_tail(
                n, 0.5, threshold, trials, majpart::substream_seed(seed, cell));
            const double bound = majpart::hoeffding_bound(n, sigma);
            char line[128];
            std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f\n", n, threshold, empirical,
                          bound);
            csv << line;
            ++cell;
        }
    }
    std::cout << "status=Ok command=tailstudy trials=" << trials << " cells=" << cell
              << " out=" << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majority/bicolor/connected partition toolkit for 2-edge-colored graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string gen_kind;
    int gen_k = 1;
    std::string gen_out;
    gen->add_option("family", gen_kind, "triangle | figure2 | counterexample147 | nogoodtrees")
        ->required()
        ->check(CLI::IsMember({"triangle", "figure2", "counterexample147", "nogoodtrees"}));
    gen->add_option("--k", gen_k, "parameter k for nogoodtrees")->check(CLI::PositiveNumber);
    gen->add_option("-o,--out", gen_out, "output graph file")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce a formula or hypergraph to a graph");
    std::string reduce_kind, reduce_in, reduce_out;
    reduce
        ->add_option("kind", reduce_kind,
                     "sat-bicolor | sat-majority2 | h3c-majority3 | nae-connected")
        ->required()
        ->check(CLI::IsMember({"sat-bicolor", "sat-majority2", "h3c-majority3",
                               "nae-connected"}));
    reduce->add_option("in", reduce_in, "input file (DIMACS cnf or h3)")->required();
    reduce->add_option("out", reduce_out, "output graph file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "decide a partition problem");
    std::string solve_kind = "majority";
    int solve_k = 2;
    long solve_budget = 10000;
    std::string solve_in, solve_out;
    solve->add_option("--kind", solve_kind, "majority | bicolor-cut | connected-cut")
        ->check(CLI::IsMember({"majority", "bicolor-cut", "connected-cut"}));
    solve->add_option("--k", solve_k, "part count (majority only; default 2)")
        ->check(CLI::PositiveNumber);
    solve->add_option("--budget", solve_budget, "time budget in milliseconds (default 10000)")
        ->check(CLI::PositiveNumber);
    solve->add_option("in", solve_in, "input graph")->required();
    solve->add_option("-o,--out", solve_out, "partition output (default: input with .part)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a partition or certificate");
    std::string verify_kind = "majority";
    std::string verify_graph, verify_witness;
    verify
        ->add_option("--kind", verify_kind,
                     "majority | bicolor-cut | connected-cut | refutation")
        ->check(CLI::IsMember({"majority", "bicolor-cut", "connected-cut", "refutation"}));
    verify->add_option("graph", verify_graph, "graph file")->required();
    verify->add_option("witness", verify_witness, "partition file (or certificate for refutation)")
        ->required();

    // refute
    auto* refute = app.add_subcommand("refute", "build and check the 3-partition refutation");
    std::string refute_in, refute_out;
    refute->add_option("in", refute_in, "graph file (must be the 147-vertex construction)")
        ->required();
    refute->add_option("-o,--out", refute_out,
                       "certificate output (default: input with .refutation.json)");

    // resample
    auto* resample = app.add_subcommand("resample", "randomized balanced 3-partition search");
    std::uint64_t resample_seed = 0;
    int resample_rounds = 1000;
    std::string resample_in, resample_out;
    resample->add_option("--seed", resample_seed, "RNG seed (default 0)");
    resample->add_option("--max-rounds", resample_rounds, "resampling round budget")
        ->check(CLI::PositiveNumber);
    resample->add_option("in", resample_in, "input graph")->required();
    resample->add_option("-o,--out", resample_out, "partition output (default: input with .part)");

    // tailstudy
    auto* tailstudy = app.add_subcommand("tailstudy", "empirical vs Hoeffding tail comparison");
    int tail_trials = 10000;
    std::uint64_t tail_seed = 0;
    std::string tail_out = "tailstudy.csv";
    tailstudy->add_option("--trials", tail_trials, "Monte-Carlo trials per cell")
        ->check(CLI::PositiveNumber);
    tailstudy->add_option("--seed", tail_seed, "RNG seed (default 0)");
    tailstudy->add_option("-o,--out", tail_out, "CSV output (default tailstudy.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_k, gen_out);
        if (reduce->parsed()) return run_reduce(reduce_kind, reduce_in, reduce_out);
        if (solve->parsed()) {
            return run_solve(solve_kind, solve_k, solve_budget, solve_in, solve_out);
        }
        if (verify->parsed()) return run_verify(verify_kind, verify_graph, verify_witness);
        if (refute->parsed()) return run_refute(refute_in, refute_out);
        if (resample->parsed()) {
            return run_resample(resample_seed, resample_rounds, resample_in, resample_out);
        }
        if (tailstudy->parsed()) return run_tailstudy(tail_trials, tail_seed, tail_out);
    } catch (const majpart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}
