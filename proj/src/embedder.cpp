#include "enhcube/embedder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <tuple>

namespace enhcube {

namespace {

std::string edge_text(const Params& p, const Edge& e) {
    return "(" + to_label(p, e.u) + ", " + to_label(p, e.v) + ")";
}

Cycle lift_cycle(const Params& parent, const Cycle& sub, int side) {
    Cycle out{parent, {}};
    out.verts.reserve(sub.verts.size());
    for (Vertex w : sub.verts) out.verts.push_back(lift(parent, side, w));
    return out;
}

// First cyclic position i such that {verts[i], verts[i+1]} = {a, b}; -1 if absent.
int find_cycle_edge_pos(const Cycle& c, Vertex a, Vertex b) {
    const auto& vs = c.verts;
    const int l = static_cast<int>(vs.size());
    for (int i = 0; i < l; ++i) {
        Vertex x = vs[i];
        Vertex y = vs[(i + 1) % l];
        if ((x == a && y == b) || (x == b && y == a)) return i;
    }
    return -1;
}

// The full cycle traversed from x to y without using the edge (x, y);
// x and y must be cyclically adjacent on the cycle.
std::vector<Vertex> path_without_edge(const std::vector<Vertex>& vs, Vertex x, Vertex y) {
    const std::size_t l = vs.size();
    std::size_t ix = 0;
    while (vs[ix] != x) ++ix;
    std::vector<Vertex> out;
    out.reserve(l);
    if (vs[(ix + 1) % l] == y) {
        for (std::size_t t = 0; t < l; ++t) out.push_back(vs[(ix + l - t) % l]);
    } else {
        for (std::size_t t = 0; t < l; ++t) out.push_back(vs[(ix + t) % l]);
    }
    return out;
}

// -1 when the base is not confined to a single side.
int confined_side(const Params& p, const Cycle& base) {
    int s = side_of(p, base.verts.front());
    for (Vertex w : base.verts)
        if (side_of(p, w) != s) return -1;
    return s;
}

// ---- folded-cube base solver -------------------------------------------

[[noreturn]] void base_search_exhausted(const Params& fq, Vertex d, int l) {
    std::ostringstream os;
    os << "base-case search exhausted for k=" << fq.k << ", edge class "
       << classify_edge(fq, 0, d).name() << ", length " << l
       << "; the folded cube guarantees such a cycle exists";
    throw Error(ErrorKind::internal, os.str());
}

// Exact-length path search toward vertex 0 in the plain hypercube Q_k
// (skips excluded). The hypercube is bipartite, so distance-to-target is
// popcount and the parity prune is exact; restricting the search to it is
// what keeps long-cycle searches fast. Neighbor order ascending.
struct HypercubePathSearch {
    int k;
    std::vector<char> visited;
    std::vector<Vertex> path;
    std::vector<Vertex> bfs_queue;
    std::vector<char> bfs_seen;

    // Necessary conditions on the region still free: the target must stay
    // reachable within the remaining budget, and each popcount-parity class
    // must still hold enough vertices to supply the rest of the path.
    // Catches searches that box themselves in, which the local popcount
    // prune cannot see.
    bool region_feasible(Vertex cur, int rem) {
        bfs_seen.assign(visited.size(), 0);
        bfs_queue.clear();
        bfs_queue.push_back(cur);
        bfs_seen[cur] = 1;
        int avail[2] = {0, 0};
        for (std::size_t head = 0; head < bfs_queue.size(); ++head) {
            Vertex u = bfs_queue[head];
            for (int i = 0; i < k; ++i) {
                Vertex nb = u ^ (1u << i);
                if (bfs_seen[nb] || visited[nb]) continue;
                bfs_seen[nb] = 1;
                ++avail[std::popcount(nb) & 1];
                bfs_queue.push_back(nb);
            }
        }
        if (!bfs_seen[0]) return false;
        // The rest of the path alternates parity away from cur's class and
        // ends at 0; integer division makes both counts exact.
        int a = std::popcount(cur) & 1;
        return avail[a ^ 1] >= (rem + 1) / 2 && avail[a] >= rem / 2;
    }

    bool step(Vertex nb, int rem) {
        if (visited[nb]) return false;
        if (nb == 0 && rem != 1) return false;
        int d = std::popcount(nb);
        if (d > rem - 1 || ((rem - 1 - d) & 1)) return false;
        visited[nb] = 1;
        path.push_back(nb);
        if (run(nb, rem - 1)) return true;
        path.pop_back();
        visited[nb] = 0;
        return false;
    }

    bool run(Vertex cur, int rem) {
        if (rem == 0) return cur == 0;
        if (rem > std::popcount(cur) + 2 && !region_feasible(cur, rem)) return false;
        // Neighbors in ascending label order: clearing a high set bit
        // first, then setting low clear bits.
        for (int i = k - 1; i >= 0; --i)
            if (cur & (1u << i) && step(cur ^ (1u << i), rem)) return true;
        for (int i = 0; i < k; ++i)
            if (!(cur & (1u << i)) && step(cur ^ (1u << i), rem)) return true;
        return false;
    }
};



// Path of exactly `len` edges from `start` to 0 in the plain hypercube,
// returned including both endpoints.
std::vector<Vertex> hypercube_exact_path(const Params& fq, Vertex start, int len) {
    HypercubePathSearch search{fq.k, std::vector<char>(fq.vertex_count(), 0), {}};
    search.visited[start] = 1;
    search.path.push_back(start);
    if (!search.run(start, len)) base_search_exhausted(fq, start, len + 1);
    return search.path;
}

// Even lengths anchor on the dimension-1 edge (0, 1): the cycle is that
// edge plus an odd-length hypercube path from 1 back to 0.
std::vector<Vertex> folded_even_search_dim1(const Params& fq, int l) {
    auto path = hypercube_exact_path(fq, 1u, l - 1);
    std::vector<Vertex> cycle;
    cycle.reserve(l);
    cycle.push_back(0);
    cycle.insert(cycle.end(), path.begin(), path.end() - 1);
    return cycle;
}

// Odd lengths anchor on the skip edge (0, mask): the cycle is that skip
// plus an even-length hypercube path from mask back to 0.
std::vector<Vertex> folded_odd_search_skip(const Params& fq, int l) {
    auto path = hypercube_exact_path(fq, fq.skip_mask(), l - 1);
    std::vector<Vertex> cycle;
    cycle.reserve(l);
    cycle.push_back(0);
    cycle.insert(cycle.end(), path.begin(), path.end() - 1);
    return cycle;
}

// Automorphism of Q_{k,k} exchanging the skip class with dimension i while
// fixing vertex 0 and every other dimension class (coordinate i trades
// places with the folded cube's implicit complement coordinate).
Vertex swap_skip_dimension(const Params& fq, int i, Vertex x) {
    const Vertex bit = 1u << (i - 1);
    if ((x & bit) == 0) return x;
    return x ^ (fq.skip_mask() ^ bit);
}

// Relabels dimension i onto dimension 1 (and vice versa).
Vertex swap_dimensions(int i, Vertex x) {
    const Vertex lo = 1u;
    const Vertex hi = 1u << (i - 1);
    bool bl = x & lo, bh = x & hi;
    if (bl != bh) x ^= lo | hi;
    return x;
}

std::mutex g_base_mutex;
std::map<std::tuple<int, Vertex, int>, std::vector<Vertex>> g_base_memo;

// Canonical cycle [0, d, ...] of length l through the edge (0, d) in
// Q_{k,k}. Searches run against a single anchor edge per parity; the
// requested class is reached through the relabeling automorphisms, and
// every other request translates onto (0, d) by XOR.
std::vector<Vertex> folded_base_canonical(const Params& fq, Vertex d, int l) {
    const auto key = std::make_tuple(fq.k, d, l);
    {
        std::lock_guard<std::mutex> lock(g_base_mutex);
        auto it = g_base_memo.find(key);
        if (it != g_base_memo.end()) return it->second;
    }

    std::vector<Vertex> cycle;
    const bool is_skip = (d == fq.skip_mask() && fq.k >= 2);
    if (l % 2 == 0) {
        cycle = folded_even_search_dim1(fq, l);
        if (is_skip) {
            for (Vertex& w : cycle) w = swap_skip_dimension(fq, 1, w);
        } else if (d != 1u) {
            int dim = classify_edge(fq, 0, d).dim;
            for (Vertex& w : cycle) w = swap_dimensions(dim, w);
        }
    } else {
        cycle = folded_odd_search_skip(fq, l);
        if (!is_skip) {
            int dim = classify_edge(fq, 0, d).dim;
            for (Vertex& w : cycle) w = swap_skip_dimension(fq, dim, w);
        }
    }

    std::lock_guard<std::mutex> lock(g_base_mutex);
    return g_base_memo.emplace(key, std::move(cycle)).first->second;
}

Cycle embed_impl(const Params& p, const Edge& e, int l);

// Case 2 of the product construction: a cycle of length l-2 through
// (0u, 0v) in side 0, with the edge (0u, 0v) replaced by the detour
// 0u, 1u, 1v, 0v. Emits the cycle starting at 0u and closing with e.
Cycle splice_crossing(const Params& p, const Cycle& c0, Vertex u0, Vertex v0) {
    auto out = path_without_edge(c0.verts, u0, v0);
    out.push_back(mirror(p, v0));
    out.push_back(mirror(p, u0));
    return Cycle{p, std::move(out)};
}

Cycle embed_impl(const Params& p, const Edge& e, int l) {
    if (p.k == p.n) return base_cycle_folded(p, e, l);

    if (p.n == 2) {
        // Q_{2,1} is the 4-cycle; l = 4 is the only admissible length.
        Vertex d = e.u ^ e.v;
        Vertex d2 = d ^ 3u;
        return Cycle{p, {e.u, e.v, e.v ^ d2, e.u ^ d2}};
    }

    const Params sub(p.n - 1, p.k);
    const int sub_even_max = 1 << (p.n - 1);

    if (e.cls == EdgeClass::dimension(p.n)) {
        // Crossing edge (0u, 1u); constructions pass through the
        // dimension-1 edge at 0u, exactly as in the product argument.
        Vertex u0 = e.u;
        Vertex v0 = u0 ^ 1u;
        if (l == 4)
            return Cycle{p, {e.u, e.v, mirror(p, v0), v0}};
        Edge e1 = make_edge(sub, project(p, u0), project(p, v0));
        bool splice = (l % 2 == 0) ? (l - 2 <= sub_even_max) : (l == p.k + 3);
        if (splice) {
            Cycle c0 = lift_cycle(p, embed_impl(sub, e1, l - 2), 0);
            return splice_crossing(p, c0, u0, v0);
        }
        int l1, l2;
        if (l % 2 == 0) {
            l2 = sub_even_max;
            l1 = l - l2;
        } else {
            std::tie(l1, l2) = split_odd_length(p, l, p.k + 1);
        }
        Cycle base = lift_cycle(p, embed_impl(sub, e1, l1), 0);
        return product_join(p, base, e, l2);
    }

    // e lies inside one side; solve there when the length fits, otherwise
    // extend or join across the product.
    int s = side_of(p, e.u);
    Edge esub = make_edge(sub, project(p, e.u), project(p, e.v));
    LengthSpec sub_spec = admissible_lengths(sub, esub);
    if (sub_spec.contains(l))
        return lift_cycle(p, embed_impl(sub, esub, l), s);
    if (sub_spec.contains(l - 2)) {
        Cycle base = lift_cycle(p, embed_impl(sub, esub, l - 2), s);
        return product_extend_two(p, base, e);
    }
    int l1, l2;
    if (l % 2 == 0) {
        l2 = sub_even_max;
        l1 = l - l2;
    } else {
        std::tie(l1, l2) = split_odd_length(p, l, *sub_spec.odd_floor);
    }
    Cycle base = lift_cycle(p, embed_impl(sub, esub, l1), s);
    return product_join(p, base, e, l2);
}

} // namespace

bool LengthSpec::contains(int l) const {
    if (l % 2 == 0) return l >= even_min && l <= even_max;
    return odd_floor && l >= *odd_floor && l <= odd_max;
}

std::vector<int> LengthSpec::all() const {
    std::vector<int> out;
    if (odd_floor)
        for (int l = *odd_floor; l <= odd_max; l += 2) out.push_back(l);
    for (int l = even_min; l <= even_max; l += 2) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::string LengthSpec::describe() const {
    std::ostringstream os;
    os << "even " << even_min << ".." << even_max;
    if (odd_floor)
        os << ", odd " << *odd_floor << ".." << odd_max;
    else
        os << ", no odd lengths (bipartite)";
    return os.str();
}

LengthSpec admissible_lengths(const Params& p, const Edge& e) {
    EdgeClass cls = classify_edge(p, e.u, e.v);
    LengthSpec spec;
    spec.even_max = 1 << p.n;
    spec.odd_max = (1 << p.n) - 1;
    if (p.k % 2 == 0) {
        bool high_dimension = !cls.is_skip() && cls.dim >= p.k + 1;
        spec.odd_floor = p.k + (high_dimension ? 3 : 1);
    }
    return spec;
}

std::pair<int, int> split_odd_length(const Params& p, int l, int floor1) {
    if (p.k % 2 != 0)
        throw Error(ErrorKind::range, "odd-length splits require even k");
    if (floor1 != p.k + 1 && floor1 != p.k + 3)
        throw Error(ErrorKind::range,
                    "floor1 must be k+1 or k+3, got " + std::to_string(floor1));
    if (l % 2 == 0)
        throw Error(ErrorKind::range, "split_odd_length needs an odd l");
    const int half = 1 << (p.n - 1);
    if (l < floor1 + 4 || l > (1 << p.n) - 1) {
        std::ostringstream os;
        os << "no valid split of l=" << l << " with odd part floor " << floor1
           << " in Q(" << p.n << "," << p.k << ")";
        throw Error(ErrorKind::range, os.str());
    }
    int l2 = std::min(half, l - floor1);
    int l1 = l - l2;
    if (l1 < floor1 || l1 > half - 1 || l2 < 4 || l2 % 2 != 0)
        throw Error(ErrorKind::internal, "split arithmetic out of range");
    return {l1, l2};
}

Cycle base_cycle_folded(const Params& p, const Edge& e, int l) {
    if (p.k != p.n)
        throw Error(ErrorKind::precondition, "folded base case requires k = n");
    if (p.k < 2)
        throw Error(ErrorKind::precondition, "Q(1,1) has no cycles");
    if (p.k > 20)
        throw Error(ErrorKind::resource_limit,
                    "folded base search is guarded to k <= 20");
    Edge canon = make_edge(p, e.u, e.v);
    LengthSpec spec = admissible_lengths(p, canon);
    if (!spec.contains(l))
        throw InadmissibleLengthError(
            spec, "length " + std::to_string(l) + " is inadmissible through " +
                      edge_text(p, canon) + " in Q(" + std::to_string(p.n) + "," +
                      std::to_string(p.k) + "); admissible: " + spec.describe());

    auto canonical = folded_base_canonical(p, canon.u ^ canon.v, l);
    Cycle c{p, {}};
    c.verts.reserve(canonical.size());
    for (Vertex w : canonical) c.verts.push_back(w ^ canon.u);
    return c;
}

Cycle product_extend_two(const Params& p, const Cycle& base, const Edge& e) {
    if (p.k == p.n)
        throw Error(ErrorKind::precondition, "Q(n,n) has no product structure");
    if (base.params != p)
        throw Error(ErrorKind::precondition, "base cycle has mismatched parameters");
    if (base.length() < 3)
        throw Error(ErrorKind::precondition, "base is not a cycle");
    if (confined_side(p, base) < 0)
        throw Error(ErrorKind::precondition, "base cycle is not confined to one side");
    int pos = find_cycle_edge_pos(base, e.u, e.v);
    if (pos < 0)
        throw Error(ErrorKind::precondition,
                    "edge " + edge_text(p, e) + " does not lie on the base cycle");

    const auto& vs = base.verts;
    const int l = base.length();
    Vertex a = vs[(pos + 1) % l];
    Vertex b = vs[(pos + 2) % l];

    Cycle out{p, {}};
    out.verts.reserve(l + 2);
    for (int j = 0; j < l; ++j) {
        out.verts.push_back(vs[j]);
        if (vs[j] == a && j == (pos + 1) % l) {
            out.verts.push_back(mirror(p, a));
            out.verts.push_back(mirror(p, b));
        }
    }
    return out;
}

Cycle product_join(const Params& p, const Cycle& base, const Edge& e, int l2) {
    if (p.k == p.n)
        throw Error(ErrorKind::precondition, "Q(n,n) has no product structure");
    if (base.params != p)
        throw Error(ErrorKind::precondition, "base cycle has mismatched parameters");
    const int half = 1 << (p.n - 1);
    if (l2 % 2 != 0 || l2 < 4 || l2 > half)
        throw Error(ErrorKind::range,
                    "l2=" + std::to_string(l2) + " must be even in [4, " +
                        std::to_string(half) + "]");
    int s = confined_side(p, base);
    if (s < 0)
        throw Error(ErrorKind::precondition, "base cycle is not confined to one side");

    const Params sub(p.n - 1, p.k);

    if (e.cls == EdgeClass::dimension(p.n)) {
        // Crossing edge: the base must run through (0u, 0v) with v the
        // dimension-1 neighbor of u.
        if (s != 0)
            throw Error(ErrorKind::precondition,
                        "crossing-edge join expects the base in side 0");
        Vertex u0 = e.u;
        Vertex v0 = u0 ^ 1u;
        if (find_cycle_edge_pos(base, u0, v0) < 0)
            throw Error(ErrorKind::precondition,
                        "base cycle misses the dimension-1 edge at " + to_label(p, u0));
        Cycle c1 = lift_cycle(
            p, embed_cycle(sub, make_edge(sub, project(p, u0), project(p, v0)), l2), 1);
        auto out = path_without_edge(base.verts, u0, v0);
        auto p1 = path_without_edge(c1.verts, mirror(p, v0), mirror(p, u0));
        out.insert(out.end(), p1.begin(), p1.end());
        return Cycle{p, std::move(out)};
    }

    int pos = find_cycle_edge_pos(base, e.u, e.v);
    if (pos < 0)
        throw Error(ErrorKind::precondition,
                    "edge " + edge_text(p, e) + " does not lie on the base cycle");
    const auto& vs = base.verts;
    const int l1 = base.length();
    Vertex a = vs[(pos + 1) % l1];
    Vertex b = vs[(pos + 2) % l1];

    Cycle c1 = lift_cycle(
        p, embed_cycle(sub, make_edge(sub, project(p, a), project(p, b)), l2), 1 - s);
    auto out = path_without_edge(base.verts, b, a);
    auto p1 = path_without_edge(c1.verts, mirror(p, a), mirror(p, b));
    out.insert(out.end(), p1.begin(), p1.end());
    return Cycle{p, std::move(out)};
}

Cycle embed_cycle(const Params& p, const Edge& e, int l) {
    Edge canon = make_edge(p, e.u, e.v);
    LengthSpec spec = admissible_lengths(p, canon);
    if (!spec.contains(l)) {
        std::ostringstream os;
        os << "length " << l << " is inadmissible through edge " << edge_text(p, canon)
           << " in Q(" << p.n << "," << p.k << "): ";
        if (l % 2 != 0 && !spec.odd_floor)
            os << "the graph is bipartite (k odd), so no odd cycles exist; ";
        os << "admissible lengths are " << spec.describe();
        throw InadmissibleLengthError(spec, os.str());
    }
    return embed_impl(p, canon, l);
}

} // namespace enhcube
