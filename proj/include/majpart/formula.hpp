#pragma once

#include <array>
#include <string>
#include <vector>

#include "majpart/errors.hpp"

namespace majpart {

// A 3-SAT / NAE-3-SAT formula. Literals are signed 1-based variable indexes
// (DIMACS convention): +v is the variable, -v its negation.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    auto operator<=>(const CnfFormula&) const = default;
};

// Throws MalformedFormula unless every clause has 3 literals over distinct
// in-range variables. Shared by the 3-SAT and NAE reductions; clauses with a
// repeated variable are rejected, not rewritten.
void check_3sat(const CnfFormula& f);

// Number of clauses containing the literal (signed, DIMACS convention).
int occurrence_count(const CnfFormula& f, int literal);

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);
// Not-all-equal satisfaction: every clause sees a true and a false literal.
bool nae_satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

struct NaeNormalization {
    CnfFormula formula;   // clauses the reduction actually transcribes
    int original_vars;    // variables 1..original_vars come from the input
    // For each padded variable pair, the original variable that triggered it:
    // padding for v adds fresh variables a, b and clauses (v, a, b) and
    // (-v, -a, -b), making the missing polarity of v (and of a, b) occur.
    std::vector<std::array<int, 3>> padded;  // {v, a, b}
};

// NAE preprocessing per the reduction's requirements: every variable with a
// missing polarity gets a padding clause pair. Clauses repeating a variable
// (complementary literals included) are rejected by the 3-SAT check, not
// rewritten. The result has every literal occurring in some clause, and is
// NAE-satisfiable exactly when the input is.
NaeNormalization normalize_nae(const CnfFormula& f);

// Extends an assignment of the original variables to the padded ones such
// that NAE satisfaction carries over (a := not v's value, b := false).
std::vector<bool> extend_nae_assignment(const NaeNormalization& norm,
                                        const std::vector<bool>& assignment);

// DIMACS cnf text: `c` comments, `p cnf <vars> <clauses>`, then
// zero-terminated clauses (clauses may span lines). Every clause must have
// exactly 3 literals.
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);
CnfFormula load_dimacs(const std::string& path);
void save_dimacs(const CnfFormula& f, const std::string& path);

// A 3-uniform hypergraph on dense vertex ids 0..n-1; triples stored strictly
// increasing, listed in lexicographic order without duplicates.
struct Hypergraph3 {
    int num_vertices = 0;
    std::vector<std::array<int, 3>> triples;

    int num_triples() const { return static_cast<int>(triples.size()); }
    auto operator<=>(const Hypergraph3&) const = default;
};

// No triple monochromatic under the coloring (labels 1..3 per vertex).
bool proper_3_coloring(const Hypergraph3& h, const std::vector<int>& coloring);

// Hypergraph text: `c` comments, `p h3 <n> <m>`, then m lines of 3 distinct
// 1-based vertex ids each.
Hypergraph3 parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph3& h);
Hypergraph3 load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph3& h, const std::string& path);

}  // namespace majpart
