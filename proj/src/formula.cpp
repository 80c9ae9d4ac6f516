#include "majpart/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace majpart {

void check_3sat(const CnfFormula& f) {
    if (f.num_vars < 0) throw MalformedFormula("negative variable count");
    for (int j = 0; j < f.num_clauses(); ++j) {
        const auto& clause = f.clauses[static_cast<std::size_t>(j)];
        std::array<int, 3> vars{};
        for (int t = 0; t < 3; ++t) {
            const int lit = clause[static_cast<std::size_t>(t)];
            const int var = std::abs(lit);
            if (lit == 0 || var > f.num_vars) {
                throw MalformedFormula("clause " + std::to_string(j + 1) + ": literal " +
                                       std::to_string(lit) + " out of range");
            }
            vars[static_cast<std::size_t>(t)] = var;
        }
        if (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2]) {
            throw MalformedFormula("clause " + std::to_string(j + 1) +
                                   " repeats a variable; clauses must use 3 distinct variables");
        }
    }
}

int occurrence_count(const CnfFormula& f, int literal) {
    int count = 0;
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            if (lit == literal) {
                ++count;
                break;
            }
        }
    }
    return count;
}

namespace {

bool literal_true(int lit, const std::vector<bool>& assignment) {
    const int var = std::abs(lit);
    assert(var >= 1 && var <= static_cast<int>(assignment.size()));
    const bool value = assignment[static_cast<std::size_t>(var - 1)];
    return lit > 0 ? value : !value;
}

}  // namespace

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars) {
        throw SizeMismatch("assignment has " + std::to_string(assignment.size()) +
                           " values for " + std::to_string(f.num_vars) + " variables");
    }
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) sat = sat || literal_true(lit, assignment);
        if (!sat) return false;
    }
    return true;
}

bool nae_satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars) {
        throw SizeMismatch("assignment has " + std::to_string(assignment.size()) +
                           " values for " + std::to_string(f.num_vars) + " variables");
    }
    for (const auto& clause : f.clauses) {
        bool some_true = false;
        bool some_false = false;
        for (int lit : clause) {
            if (literal_true(lit, assignment)) {
                some_true = true;
            } else {
                some_false = true;
            }
        }
        if (!(some_true && some_false)) return false;
    }
    return true;
}

NaeNormalization normalize_nae(const CnfFormula& f) {
    check_3sat(f);
    NaeNormalization norm;
    norm.original_vars = f.num_vars;
    norm.formula.num_vars = f.num_vars;

    // check_3sat already rules out a variable appearing twice in a clause,
    // complementary or not, so no drop pass is needed here; clauses carry
    // three distinct variables by construction.
    norm.formula.clauses = f.clauses;

    for (int v = 1; v <= f.num_vars; ++v) {
        const bool pos = occurrence_count(norm.formula, v) > 0;
        const bool neg = occurrence_count(norm.formula, -v) > 0;
        if (pos && neg) continue;
        const int a = ++norm.formula.num_vars;
        const int b = ++norm.formula.num_vars;
        norm.formula.clauses.push_back({v, a, b});
        norm.formula.clauses.push_back({-v, -a, -b});
        norm.padded.push_back({v, a, b});
    }
    return norm;
}

std::vector<bool> extend_nae_assignment(const NaeNormalization& norm,
                                        const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != norm.original_vars) {
        throw SizeMismatch("assignment has " + std::to_string(assignment.size()) +
                           " values for " + std::to_string(norm.original_vars) +
                           " original variables");
    }
    std::vector<bool> full = assignment;
    full.resize(static_cast<std::size_t>(norm.formula.num_vars), false);
    for (const auto& [v, a, b] : norm.padded) {
        // (v, a, b) and (-v, -a, -b) are both not-all-equal when a carries
        // the opposite of v's value and b stays false.
        full[static_cast<std::size_t>(a - 1)] = !full[static_cast<std::size_t>(v - 1)];
        full[static_cast<std::size_t>(b - 1)] = false;
    }
    return full;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int announced_clauses = 0;
    CnfFormula f;
    std::vector<int> pending;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) {
                throw SyntaxError("line " + std::to_string(lineno) + ": repeated header");
            }
            std::string kind;
            if (!(ls >> kind >> f.num_vars >> announced_clauses) || kind != "cnf" ||
                f.num_vars < 0 || announced_clauses < 0) {
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 'p cnf <vars> <clauses>'");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw SyntaxError("line " + std::to_string(lineno) + ": clause before header");
        }
        std::istringstream rest(line);
        int lit = 0;
        while (rest >> lit) {
            if (lit == 0) {
                if (pending.size() != 3) {
                    throw MalformedFormula("line " + std::to_string(lineno) + ": clause with " +
                                           std::to_string(pending.size()) +
                                           " literals; exactly 3 required");
                }
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (!rest.eof()) {
            throw SyntaxError("line " + std::to_string(lineno) + ": expected integer literals");
        }
    }
    if (!have_header) throw SyntaxError("line " + std::to_string(lineno) + ": missing header");
    if (!pending.empty()) {
        throw SyntaxError("unterminated clause at end of input");
    }
    if (f.num_clauses() != announced_clauses) {
        throw InvariantViolation("header announces " + std::to_string(announced_clauses) +
                                 " clauses but " + std::to_string(f.num_clauses()) + " present");
    }
    check_3sat(f);
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
    for (const auto& clause : f.clauses) {
        out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
    }
    return out.str();
}

CnfFormula load_dimacs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open formula file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

void save_dimacs(const CnfFormula& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write formula file " + path);
    out << serialize_dimacs(f);
}

bool proper_3_coloring(const Hypergraph3& h, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != h.num_vertices) {
        throw SizeMismatch("coloring has " + std::to_string(coloring.size()) +
                           " values for " + std::to_string(h.num_vertices) + " vertices");
    }
    for (int value : coloring) {
        if (value < 1 || value > 3) {
            throw SizeMismatch("color " + std::to_string(value) + " outside 1..3");
        }
    }
    for (const auto& [i, j, k] : h.triples) {
        const int ci = coloring[static_cast<std::size_t>(i)];
        const int cj = coloring[static_cast<std::size_t>(j)];
        const int ck = coloring[static_cast<std::size_t>(k)];
        if (ci == cj && cj == ck) return false;
    }
    return true;
}

Hypergraph3 parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int announced = 0;
    Hypergraph3 h;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (have_header) {
                throw SyntaxError("line " + std::to_string(lineno) + ": repeated header");
            }
            std::string kind;
            if (!(ls >> kind >> h.num_vertices >> announced) || kind != "h3" ||
                h.num_vertices < 0 || announced < 0) {
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 'p h3 <n> <m>'");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw SyntaxError("line " + std::to_string(lineno) + ": triple before header");
        }
        int a = 0, b = 0, c = 0;
        std::istringstream triple(line);
        if (!(triple >> a >> b >> c)) {
            throw SyntaxError("line " + std::to_string(lineno) +
                              ": expected 3 vertex ids");
        }
        std::array<int, 3> t = {a - 1, b - 1, c - 1};
        std::sort(t.begin(), t.end());
        if (t[0] < 0 || t[2] >= h.num_vertices) {
            throw InvariantViolation("line " + std::to_string(lineno) +
                                     ": vertex id outside 1.." +
                                     std::to_string(h.num_vertices));
        }
        if (t[0] == t[1] || t[1] == t[2]) {
            throw InvariantViolation("line " + std::to_string(lineno) +
                                     ": triple repeats a vertex");
        }
        h.triples.push_back(t);
    }
    if (!have_header) throw SyntaxError("line " + std::to_string(lineno) + ": missing header");
    if (h.num_triples() != announced) {
        throw InvariantViolation("header announces " + std::to_string(announced) +
                                 " triples but " + std::to_string(h.num_triples()) +
                                 " present");
    }
    std::sort(h.triples.begin(), h.triples.end());
    if (std::adjacent_find(h.triples.begin(), h.triples.end()) != h.triples.end()) {
        throw InvariantViolation("duplicate triple in hypergraph");
    }
    return h;
}

std::string serialize_hypergraph(const Hypergraph3& h) {
    std::ostringstream out;
    out << "p h3 " << h.num_vertices << ' ' << h.num_triples() << '\n';
    for (const auto& [i, j, k] : h.triples) {
        out << i + 1 << ' ' << j + 1 << ' ' << k + 1 << '\n';
    }
    return out.str();
}

Hypergraph3 load_hypergraph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open hypergraph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

void save_hypergraph(const Hypergraph3& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write hypergraph file " + path);
    out << serialize_hypergraph(h);
}

}  // namespace majpart
