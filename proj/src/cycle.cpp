#include "enhcube/cycle.hpp"

namespace enhcube {

bool cycle_contains_edge(const Cycle& c, Vertex a, Vertex b) {
    const auto& vs = c.verts;
    const std::size_t l = vs.size();
    for (std::size_t i = 0; i < l; ++i) {
        Vertex x = vs[i];
        Vertex y = vs[(i + 1) % l];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

int count_dimension_edges(const Cycle& c, int dim) {
    const auto& vs = c.verts;
    const std::size_t l = vs.size();
    const Vertex bit = 1u << (dim - 1);
    int count = 0;
    for (std::size_t i = 0; i < l; ++i)
        if ((vs[i] ^ vs[(i + 1) % l]) == bit) ++count;
    return count;
}

} // namespace enhcube
