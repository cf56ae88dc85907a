#pragma once

#include <vector>

#include "enhcube/topology.hpp"

namespace enhcube {

// Closed simple vertex sequence; the edge from back() to front() is
// implicit. Length equals the number of vertices.
struct Cycle {
    Params params;
    std::vector<Vertex> verts;

    int length() const { return static_cast<int>(verts.size()); }
    bool operator==(const Cycle&) const = default;
};

// Simple open path; consecutive pairs are edges.
struct OpenPath {
    Params params;
    std::vector<Vertex> verts;

    int length() const { return static_cast<int>(verts.size()) - 1; }
};

// True when {a, b} appears as a cyclically-consecutive pair of c.
bool cycle_contains_edge(const Cycle& c, Vertex a, Vertex b);

// Number of edges of c (including the closing edge) whose class matches
// dimension `dim`; used to observe crossing-edge counts.
int count_dimension_edges(const Cycle& c, int dim);

} // namespace enhcube
