#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enhcube/error.hpp"

// Implicit model of the enhanced hypercube Q_{n,k}: the n-dimensional
// hypercube plus one "skip" edge per vertex joining u to u with bits 1..k
// complemented (k = 1 collapses onto dimension 1, k = n gives the folded
// hypercube). No adjacency is ever materialized; neighbors are generated
// from the label.
//
// Bit convention: bit 1 is the least significant bit of the label, bit n
// the most significant. Labels render as zero-padded binary strings, most
// significant bit first.

namespace enhcube {

using Vertex = std::uint32_t;

// Hard cap so labels fit a machine word; ENHCUBE_MAX_N may lower it.
int max_supported_n();

struct Params {
    int n = 0; // number of bits
    int k = 0; // complemented-suffix width, 1 <= k <= n

    Params() = default;
    Params(int n_, int k_); // validates, throws invalid_params

    bool operator==(const Params&) const = default;

    std::uint32_t vertex_count() const { return 1u << n; }
    Vertex max_vertex() const { return (1u << n) - 1; }
    Vertex skip_mask() const { return (1u << k) - 1; }
    Vertex top_bit() const { return 1u << (n - 1); } // bit n

    void require_vertex(Vertex u) const; // throws invalid_params if out of range
};

// Dimension(i) for i in [1, n], or the skip class (dim == 0).
struct EdgeClass {
    int dim = 0;

    static EdgeClass dimension(int i) { return EdgeClass{i}; }
    static EdgeClass skip() { return EdgeClass{0}; }

    bool is_skip() const { return dim == 0; }
    bool operator==(const EdgeClass&) const = default;

    std::string name() const; // "dim3" / "skip"
};

// Canonical edge: u < v always, cls consistent with classify_edge(u, v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    EdgeClass cls;

    bool operator==(const Edge&) const = default;
};

// Classification of the pair; throws not_an_edge when u XOR v is neither a
// single bit nor the skip mask (with k >= 2).
EdgeClass classify_edge(const Params& p, Vertex u, Vertex v);

// Canonicalizing constructor (validates and orders endpoints).
Edge make_edge(const Params& p, Vertex a, Vertex b);

// All neighbors of u, ascending by label. Degree is n+1 for k >= 2, n for k = 1.
std::vector<Vertex> neighbors(const Params& p, Vertex u);

// The skip partner u XOR (2^k - 1).
Vertex skip_of(const Params& p, Vertex u);

// Closed form: Q_{n,k} is bipartite iff k is odd.
bool is_bipartite(const Params& p);

// Product decomposition Q_{n,k} = K_2 x Q_{n-1,k} (requires k <= n-1).
struct Decomposition {
    int side = 0;      // bit n of the vertex
    Vertex projection; // vertex with bit n cleared, valid in Q_{n-1,k}
};
Decomposition decompose(const Params& p, Vertex u);

// Helpers for the same decomposition.
inline int side_of(const Params& p, Vertex u) { return (u >> (p.n - 1)) & 1; }
inline Vertex project(const Params& p, Vertex u) { return u & ~p.top_bit(); }
inline Vertex lift(const Params& p, int side, Vertex u) {
    return u | (static_cast<Vertex>(side) << (p.n - 1));
}
inline Vertex mirror(const Params& p, Vertex u) { return u ^ p.top_bit(); }

// Label I/O: zero-padded n-character binary, most significant bit first.
std::string to_label(const Params& p, Vertex u);
Vertex parse_label(const Params& p, const std::string& s); // throws invalid_params

// Deterministic edge enumeration, ascending by (u, v).
std::vector<Edge> all_edges(const Params& p);

} // namespace enhcube
