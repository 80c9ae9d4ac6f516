#include "majpart/partition.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <sstream>

#include "majpart/connectivity.hpp"
#include "majpart/rng.hpp"

namespace majpart {

namespace {

void check_partition_shape(const EdgeColoredGraph& g, const KPartition& p) {
    if (p.size() != g.vertex_count()) {
        throw SizeMismatch("partition labels " + std::to_string(p.size()) +
                           " vs graph vertices " + std::to_string(g.vertex_count()));
    }
    if (p.k < 1) throw SizeMismatch("partition needs k >= 1, got " + std::to_string(p.k));
    for (int v = 0; v < p.size(); ++v) {
        const int label = p.part[static_cast<std::size_t>(v)];
        if (label < 1 || label > p.k) {
            throw SizeMismatch("vertex " + std::to_string(v) + " has label " +
                               std::to_string(label) + " outside 1.." + std::to_string(p.k));
        }
    }
}

}  // namespace

MajorityReport verify_majority(const EdgeColoredGraph& g, const KPartition& p) {
    check_partition_shape(g, p);
    MajorityReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (Color c : kColors) {
            int inside = 0;
            for (int u : g.neighbors(v, c)) {
                if (p.part[static_cast<std::size_t>(u)] == p.part[static_cast<std::size_t>(v)]) {
                    ++inside;
                }
            }
            const int deg = g.color_degree(v, c);
            if (2 * inside > deg) report.violations.push_back({v, c, inside, deg});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

BicolorCutReport verify_bicolor_cut(const EdgeColoredGraph& g, const KPartition& p) {
    check_partition_shape(g, p);
    if (p.k != 2) throw WrongK("bicolor-cut condition is for 2-partitions, got k=" +
                               std::to_string(p.k));
    BicolorCutReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (Color c : kColors) {
            bool crossing = false;
            for (int u : g.neighbors(v, c)) {
                if (p.part[static_cast<std::size_t>(u)] != p.part[static_cast<std::size_t>(v)]) {
                    crossing = true;
                    break;
                }
            }
            if (!crossing) report.violations.push_back({v, c});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

bool is_balanced(const KPartition& p) {
    if (p.k < 1) throw SizeMismatch("partition needs k >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(p.k), 0);
    for (int label : p.part) {
        if (label < 1 || label > p.k) {
            throw SizeMismatch("label " + std::to_string(label) + " outside 1.." +
                               std::to_string(p.k));
        }
        ++sizes[static_cast<std::size_t>(label - 1)];
    }
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo <= 1;
}

EdgeColoredGraph cut_color_subgraph(const EdgeColoredGraph& g, const KPartition& p, Color c) {
    check_partition_shape(g, p);
    if (p.k != 2) throw WrongK("cut subgraph needs a 2-partition, got k=" + std::to_string(p.k));
    EdgeColoredGraph cut(g.vertex_count());
    for (const ColoredEdge& e : g.edges()) {
        if (e.color == c &&
            p.part[static_cast<std::size_t>(e.u)] != p.part[static_cast<std::size_t>(e.v)]) {
            cut.add_edge(e.u, e.v, c);
        }
    }
    return cut;
}

ConnectedCutReport verify_connected_cut(const EdgeColoredGraph& g, const KPartition& p) {
    check_partition_shape(g, p);
    if (p.k != 2) throw WrongK("connected-cut condition is for 2-partitions, got k=" +
                               std::to_string(p.k));
    ConnectedCutReport report;
    for (Color c : kColors) {
        std::vector<std::pair<int, int>> crossing;
        for (const ColoredEdge& e : g.edges()) {
            if (e.color == c &&
                p.part[static_cast<std::size_t>(e.u)] != p.part[static_cast<std::size_t>(e.v)]) {
                crossing.emplace_back(e.u, e.v);
            }
        }
        const bool connected = spanning_connected(g.vertex_count(), crossing);
        if (c == kRed) {
            report.red_connected = connected;
        } else {
            report.blue_connected = connected;
        }
    }
    return report;
}

bool verify_good_subset(const EdgeColoredGraph& g, const std::vector<int>& s) {
    if (s.empty() || static_cast<int>(s.size()) >= g.vertex_count()) {
        throw NotProperSubset("good subsets are nonempty proper subsets; got " +
                              std::to_string(s.size()) + " of " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    std::vector<char> mask(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            throw VertexOutOfRange("subset vertex " + std::to_string(v) + " outside graph");
        }
        if (mask[static_cast<std::size_t>(v)]) {
            throw NotProperSubset("subset repeats vertex " + std::to_string(v));
        }
        mask[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : s) {
        for (Color c : kColors) {
            const int inside = color_degree_into(g, v, c, mask);
            if (2 * inside > g.color_degree(v, c)) return false;
        }
    }
    return true;
}

namespace {

bool good_under_mask(const EdgeColoredGraph& g, const std::vector<char>& mask) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!mask[static_cast<std::size_t>(v)]) continue;
        for (Color c : kColors) {
            if (2 * color_degree_into(g, v, c, mask) > g.color_degree(v, c)) return false;
        }
    }
    return true;
}

std::vector<int> mask_to_subset(const std::vector<char>& mask) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v) {
        if (mask[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

}  // namespace

GoodSubsetResult search_good_subset(const EdgeColoredGraph& g, int min_size) {
    if (min_size < 1) throw BadArgs("good subset min_size must be >= 1");
    const int n = g.vertex_count();
    GoodSubsetResult result;
    if (min_size > n - 1) return result;  // proper subsets are too small

    if (n <= 25) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        for (std::uint64_t bits = 1; bits + 1 < limit; ++bits) {
            if (std::popcount(bits) < min_size) continue;
            for (int v = 0; v < n; ++v) mask[static_cast<std::size_t>(v)] = (bits >> v) & 1;
            if (good_under_mask(g, mask)) {
                result.subset = mask_to_subset(mask);
                return result;
            }
        }
        return result;  // definitive: none exists
    }

    // Budgeted local search: seed with a random half, greedily drop violated
    // vertices, restart on dead ends. Failure is inconclusive, not a proof.
    SplitMix64 rng(0x600D5E7ULL);
    constexpr int kRestarts = 64;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        const int half = n / 2;
        for (int picked = 0; picked < half;) {
            const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (!mask[static_cast<std::size_t>(v)]) {
                mask[static_cast<std::size_t>(v)] = 1;
                ++picked;
            }
        }
        for (int round = 0; round < 4 * n; ++round) {
            int bad = -1;
            for (int v = 0; v < n && bad < 0; ++v) {
                if (!mask[static_cast<std::size_t>(v)]) continue;
                for (Color c : kColors) {
                    if (2 * color_degree_into(g, v, c, mask) > g.color_degree(v, c)) {
                        bad = v;
                        break;
                    }
                }
            }
            if (bad < 0) break;
            mask[static_cast<std::size_t>(bad)] = 0;
        }
        const auto subset = mask_to_subset(mask);
        if (static_cast<int>(subset.size()) >= min_size &&
            static_cast<int>(subset.size()) < n && good_under_mask(g, mask)) {
            result.subset = subset;
            return result;
        }
    }
    result.inconclusive = true;
    return result;
}

KPartition parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    KPartition p;
    std::vector<int> labels;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            if (have_header) {
                throw SyntaxError("line " + std::to_string(lineno) + ": repeated header");
            }
            std::string kind;
            if (!(ls >> kind >> n >> p.k) || kind != "partition" || n < 0 || p.k < 1) {
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 's partition <n> <k>'");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw SyntaxError("line " + std::to_string(lineno) + ": labels before header");
        }
        std::istringstream rest(line);
        int label = 0;
        while (rest >> label) {
            if (label < 1 || label > p.k) {
                throw InvariantViolation("line " + std::to_string(lineno) + ": label " +
                                         std::to_string(label) + " outside 1.." +
                                         std::to_string(p.k));
            }
            labels.push_back(label);
        }
        if (!rest.eof()) {
            throw SyntaxError("line " + std::to_string(lineno) + ": expected integer labels");
        }
    }
    if (!have_header) throw SyntaxError("line " + std::to_string(lineno) + ": missing header");
    if (static_cast<int>(labels.size()) != n) {
        throw InvariantViolation("header announces " + std::to_string(n) + " labels but " +
                                 std::to_string(labels.size()) + " present");
    }
    p.part = std::move(labels);
    return p;
}

std::string serialize_partition(const KPartition& p) {
    std::ostringstream out;
    out << "s partition " << p.size() << ' ' << p.k << '\n';
    for (int label : p.part) out << label << '\n';
    return out.str();
}

KPartition load_partition(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open partition file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_partition(buf.str());
}

void save_partition(const KPartition& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write partition file " + path);
    out << serialize_partition(p);
}

}  // namespace majpart
