#include "enhcube/oracle.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace enhcube {

namespace {

std::string label_pair(const Params& p, Vertex a, Vertex b) {
    return "(" + to_label(p, a) + ", " + to_label(p, b) + ")";
}

void require_guard(const Params& p, int guard, const char* what) {
    if (p.n > guard) {
        std::ostringstream os;
        os << what << " is guarded to n <= " << guard << " (got n=" << p.n << ")";
        throw Error(ErrorKind::resource_limit, os.str());
    }
}

// Materialized adjacency for the brute-force phases (desk scale only).
std::vector<std::vector<Vertex>> build_adjacency(const Params& p,
                                                 const std::optional<Edge>& omit) {
    std::vector<std::vector<Vertex>> adj(p.vertex_count());
    for (Vertex u = 0; u < p.vertex_count(); ++u) {
        for (Vertex v : neighbors(p, u)) {
            if (omit && ((u == omit->u && v == omit->v) || (u == omit->v && v == omit->u)))
                continue;
            adj[u].push_back(v);
        }
    }
    return adj;
}

// DFS for a simple path cur -> target of exactly `rem` more edges, pruned by
// parity-labeled distances to the target.
bool exact_path_dfs(const std::vector<std::vector<Vertex>>& adj,
                    const std::array<std::vector<int>, 2>& dist_to_target,
                    std::vector<char>& visited, Vertex cur, Vertex target, int rem) {
    if (rem == 0) return cur == target;
    for (Vertex nb : adj[cur]) {
        if (nb == target) {
            if (rem == 1) return true;
            continue; // target may only appear as the final vertex
        }
        if (visited[nb]) continue;
        int d = dist_to_target[(rem - 1) & 1][nb];
        if (d < 0 || d > rem - 1) continue;
        visited[nb] = 1;
        if (exact_path_dfs(adj, dist_to_target, visited, nb, target, rem - 1)) return true;
        visited[nb] = 0;
    }
    return false;
}

} // namespace

std::vector<std::string> validate_cycle(const Params& p, const Cycle& c,
                                        const std::optional<Edge>& require_edge,
                                        std::optional<int> require_length) {
    std::vector<std::string> violations;
    if (c.params != p)
        violations.push_back("ambient parameters mismatch: cycle carries Q(" +
                             std::to_string(c.params.n) + "," + std::to_string(c.params.k) +
                             "), validated against Q(" + std::to_string(p.n) + "," +
                             std::to_string(p.k) + ")");

    const auto& vs = c.verts;
    const std::size_t l = vs.size();

    if (l < 3) {
        violations.push_back("length " + std::to_string(l) + " < 3");
    } else if (vs.front() == vs.back()) {
        // Written with an explicit closing vertex; the walk has l-1 edges.
        violations.push_back("length " + std::to_string(l - 1) +
                             " < 3 once the explicit closing vertex is dropped");
    }

    bool in_range = true;
    for (Vertex u : vs) {
        if (u > p.max_vertex()) {
            violations.push_back("vertex " + std::to_string(u) + " out of range for n=" +
                                 std::to_string(p.n));
            in_range = false;
        }
    }

    std::unordered_set<Vertex> seen;
    for (Vertex u : vs) {
        if (!seen.insert(u).second && u <= p.max_vertex())
            violations.push_back("repeated vertex " + to_label(p, u));
    }

    if (in_range) {
        for (std::size_t i = 0; i < l; ++i) {
            Vertex a = vs[i];
            Vertex b = vs[(i + 1) % l];
            try {
                classify_edge(p, a, b);
            } catch (const Error&) {
                violations.push_back(label_pair(p, a, b) + " is not an edge");
            }
        }
    }

    if (require_edge && !cycle_contains_edge(c, require_edge->u, require_edge->v))
        violations.push_back("required edge " + label_pair(p, require_edge->u, require_edge->v) +
                             " does not lie on the cycle");

    if (require_length && static_cast<int>(l) != *require_length)
        violations.push_back("length " + std::to_string(l) + " != required " +
                             std::to_string(*require_length));

    return violations;
}

std::array<std::vector<int>, 2> parity_bfs(const Params& p, Vertex src,
                                           const std::optional<Edge>& omit) {
    p.require_vertex(src);
    std::array<std::vector<int>, 2> dist;
    dist[0].assign(p.vertex_count(), -1);
    dist[1].assign(p.vertex_count(), -1);
    dist[0][src] = 0;
    std::queue<std::pair<Vertex, int>> q;
    q.push({src, 0});
    while (!q.empty()) {
        auto [u, par] = q.front();
        q.pop();
        int d = dist[par][u];
        for (Vertex v : neighbors(p, u)) {
            if (omit && ((u == omit->u && v == omit->v) || (u == omit->v && v == omit->u)))
                continue;
            int npar = par ^ 1;
            if (dist[npar][v] < 0) {
                dist[npar][v] = d + 1;
                q.push({v, npar});
            }
        }
    }
    return dist;
}

std::optional<int> min_odd_cycle_through_edge(const Params& p, const Edge& e,
                                              const OracleLimits& limits) {
    require_guard(p, limits.max_n_bfs, "min_odd_cycle_through_edge (bound phase)");
    classify_edge(p, e.u, e.v); // validates the edge

    // Lower bound: an odd cycle through e is e plus an even u->v path in G - e.
    auto dist_from_u = parity_bfs(p, e.u, e);
    int shortest_even_walk = dist_from_u[0][e.v];
    if (shortest_even_walk < 0) return std::nullopt; // bipartite: no odd cycle at all

    require_guard(p, limits.max_n_exact, "min_odd_cycle_through_edge (exact phase)");

    auto adj = build_adjacency(p, e);
    const int max_len = static_cast<int>(p.vertex_count()) - 1;
    std::vector<char> visited(p.vertex_count(), 0);
    for (int len = shortest_even_walk + 1; len <= max_len; len += 2) {
        std::fill(visited.begin(), visited.end(), 0);
        visited[e.v] = 1;
        if (exact_path_dfs(adj, dist_from_u, visited, e.v, e.u, len - 1))
            return len;
    }
    return std::nullopt;
}

namespace {

void spectrum_dfs(const std::vector<std::vector<Vertex>>& adj, std::vector<char>& visited,
                  Vertex cur, Vertex start, int len, std::set<int>& achievable) {
    for (Vertex nb : adj[cur]) {
        if (nb == start) {
            if (len >= 3) achievable.insert(len);
            continue;
        }
        if (visited[nb]) continue;
        visited[nb] = 1;
        spectrum_dfs(adj, visited, nb, start, len + 1, achievable);
        visited[nb] = 0;
    }
}

} // namespace

SpectrumResult cycle_length_spectrum_through_edge(const Params& p, const Edge& e,
                                                  const OracleLimits& limits) {
    require_guard(p, limits.max_n_exhaustive, "cycle_length_spectrum_through_edge");
    classify_edge(p, e.u, e.v);

    // Every cycle through e is counted exactly once: traversal starts at the
    // smaller endpoint and its first step is the larger one.
    auto adj = build_adjacency(p, std::nullopt);
    std::vector<char> visited(p.vertex_count(), 0);
    visited[e.u] = 1;
    visited[e.v] = 1;
    SpectrumResult result;
    result.edge = e;
    result.exhaustive = true;
    spectrum_dfs(adj, visited, e.v, e.u, 2, result.achievable);
    return result;
}

std::optional<int> odd_girth(const Params& p, const OracleLimits& limits) {
    require_guard(p, limits.max_n_bfs, "odd_girth");
    int best = -1;
    for (Vertex s = 0; s < p.vertex_count(); ++s) {
        auto dist = parity_bfs(p, s, std::nullopt);
        int closed_odd = dist[1][s];
        if (closed_odd > 0 && (best < 0 || closed_odd < best)) best = closed_odd;
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool check_bipartite_bfs(const Params& p, const OracleLimits& limits) {
    require_guard(p, limits.max_n_bfs, "check_bipartite_bfs");
    std::vector<int> color(p.vertex_count(), -1);
    for (Vertex s = 0; s < p.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : neighbors(p, u)) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace enhcube
