#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enhcube/cycle.hpp"
#include "enhcube/topology.hpp"

// Brute-force ground truth, kept independent of the constructive embedder:
// cycle validation, parity-labeled BFS bounds, exact shortest-odd-cycle
// search, exhaustive per-edge cycle-length spectra, and odd girth.

namespace enhcube {

// Size guards keep the brute-force sweeps desk-scale. Callers may widen
// them at their own risk.
struct OracleLimits {
    int max_n_bfs = 8;        // parity BFS / 2-coloring phases
    int max_n_exact = 5;      // exact shortest-odd-cycle DFS
    int max_n_exhaustive = 4; // full simple-cycle enumeration
};

// Total validation; violations are data, not errors. Empty result = valid.
std::vector<std::string> validate_cycle(const Params& p, const Cycle& c,
                                        const std::optional<Edge>& require_edge = std::nullopt,
                                        std::optional<int> require_length = std::nullopt);

inline bool is_valid_cycle(const Params& p, const Cycle& c,
                           const std::optional<Edge>& require_edge = std::nullopt,
                           std::optional<int> require_length = std::nullopt) {
    return validate_cycle(p, c, require_edge, require_length).empty();
}

// Shortest walk lengths by parity: dist[par][v] is the length of a shortest
// src->v walk of parity par, or -1 when no such walk exists. `omit` removes
// one edge from the graph.
std::array<std::vector<int>, 2> parity_bfs(const Params& p, Vertex src,
                                           const std::optional<Edge>& omit = std::nullopt);

// Exact length of a shortest odd cycle through e, or nullopt when none
// exists (the bipartite case). Two phases: a parity-BFS lower bound, then a
// bounded DFS for a witness, stepping the target length by 2.
std::optional<int> min_odd_cycle_through_edge(const Params& p, const Edge& e,
                                              const OracleLimits& limits = {});

// Exact set of lengths l such that some simple cycle of length l passes
// through `edge`, by exhaustive DFS (n <= max_n_exhaustive).
struct SpectrumResult {
    Edge edge;
    std::set<int> achievable;
    bool exhaustive = false;
};
SpectrumResult cycle_length_spectrum_through_edge(const Params& p, const Edge& e,
                                                  const OracleLimits& limits = {});

// Length of a shortest odd cycle anywhere, or nullopt when bipartite.
std::optional<int> odd_girth(const Params& p, const OracleLimits& limits = {});

// BFS 2-coloring over the full vertex set; must agree with is_bipartite.
bool check_bipartite_bfs(const Params& p, const OracleLimits& limits = {});

} // namespace enhcube
