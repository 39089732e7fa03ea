#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexent/algebraic.hpp"
#include "lexent/real.hpp"
#include "lexent/symbolic_strings.hpp"

namespace lexent {

enum class GraphMode { truncate, collapse };

struct FollowerVertex {
    int p = 0, q = 0;   // longest-suffix lengths of the word read so far
    int class_id = 0;
};

// Labeled graph over [p,q] vertices tracking, for each word read, the length
// of its longest suffix prefixing u (p) and prefixing v (q). In collapse mode
// vertices are identified exactly by the tail pair (sigma^p u, sigma^q v),
// which is finite for eventually periodic bounds; in truncate mode the graph
// is cut at level max(p,q) <= K.
struct FollowerGraph {
    std::vector<FollowerVertex> vertices;
    // edges[i] = list of (label, target vertex index)
    std::vector<std::vector<std::pair<Symbol, int>>> edges;
    int root = 0;
    GraphMode mode = GraphMode::collapse;
    int truncation_level = 0;  // K in truncate mode
    int alphabet = 0;
    // Collapse keys (tail pair) per vertex; only filled in collapse mode.
    std::vector<std::pair<EPString, EPString>> keys;

    bool right_resolving() const;
    std::string to_dot() const;
    std::string to_json() const;
};

// Longest suffix of w that is a prefix of x.
Word longest_prefix_suffix(const Word& w, const EPString& x);

// Greedy maximal factorization of w into blocks that are prefixes of u or
// single-letter deviations from one (the parsing underlying the graph).
struct Parsing {
    std::vector<Word> factors;
};
Parsing u_parsing(const Word& w, const EPString& u);
Parsing v_parsing(const Word& w, const EPString& v);

// Builds the graph for an admissible pair. Throws ConditionViolation when the
// weak admissibility inequalities fail.
FollowerGraph build_graph(const EPString& u, const EPString& v, GraphMode mode, int K = 0);

// log2 of the spectral radius of the root-reachable adjacency matrix, within
// tol, via per-component power iteration with two-sided eigenvalue bounds.
// Cycle-free graphs give 0.
Real graph_entropy(const FollowerGraph& g, double tol = 1e-9);

// log2 of the largest root of lambda^{-p} + lambda^{-q} = 1 (the growth rate
// of two cycles of lengths p and q through a common vertex), by bisection.
Real two_cycle_entropy(int p, int q, double tol = 1e-12);

// Exact number of length-n labeled paths starting at the root.
BigInt word_count(const FollowerGraph& g, int n);

// Entropy of the part of the collapsed graph of (u_star, v_star) that is
// unreachable by words admissible for (u, v) themselves. Requires both sides
// of the star construction to apply.
Real star_difference_entropy(const EPString& u, const EPString& v, double tol = 1e-9);

}  // namespace lexent
