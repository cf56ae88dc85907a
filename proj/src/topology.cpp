#include "enhcube/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace enhcube {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::not_an_edge: return "not-an-edge";
    case ErrorKind::decomposition_unavailable: return "decomposition-unavailable";
    case ErrorKind::inadmissible_length: return "inadmissible-length";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::range: return "range";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

int max_supported_n() {
    constexpr int hard_cap = 30;
    if (const char* env = std::getenv("ENHCUBE_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < hard_cap)
            return static_cast<int>(v);
    }
    return hard_cap;
}

Params::Params(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 1 || k > n) {
        std::ostringstream os;
        os << "invalid parameters (n=" << n << ", k=" << k << "): need 1 <= k <= n";
        throw Error(ErrorKind::invalid_params, os.str());
    }
    if (n > max_supported_n()) {
        std::ostringstream os;
        os << "n=" << n << " exceeds the size cap " << max_supported_n();
        throw Error(ErrorKind::invalid_params, os.str());
    }
}

void Params::require_vertex(Vertex u) const {
    if (u > max_vertex()) {
        std::ostringstream os;
        os << "vertex " << u << " out of range for n=" << n;
        throw Error(ErrorKind::invalid_params, os.str());
    }
}

std::string EdgeClass::name() const {
    if (is_skip()) return "skip";
    return "dim" + std::to_string(dim);
}

EdgeClass classify_edge(const Params& p, Vertex u, Vertex v) {
    p.require_vertex(u);
    p.require_vertex(v);
    Vertex x = u ^ v;
    if (x == 0)
        throw Error(ErrorKind::not_an_edge, "identical vertices form no edge");
    if ((x & (x - 1)) == 0) {
        // Single differing bit; when k = 1 this also covers the skip pattern.
        int i = 1;
        while (!(x & 1u)) { x >>= 1; ++i; }
        return EdgeClass::dimension(i);
    }
    if (x == p.skip_mask())
        return EdgeClass::skip();
    std::ostringstream os;
    os << "(" << to_label(p, u) << ", " << to_label(p, v)
       << ") is not an edge of Q(" << p.n << "," << p.k << ")";
    throw Error(ErrorKind::not_an_edge, os.str());
}

Edge make_edge(const Params& p, Vertex a, Vertex b) {
    EdgeClass cls = classify_edge(p, a, b);
    Edge e;
    e.u = std::min(a, b);
    e.v = std::max(a, b);
    e.cls = cls;
    return e;
}

std::vector<Vertex> neighbors(const Params& p, Vertex u) {
    p.require_vertex(u);
    std::vector<Vertex> out;
    out.reserve(p.n + 1);
    for (int i = 0; i < p.n; ++i)
        out.push_back(u ^ (1u << i));
    out.push_back(u ^ p.skip_mask());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Vertex skip_of(const Params& p, Vertex u) {
    p.require_vertex(u);
    return u ^ p.skip_mask();
}

bool is_bipartite(const Params& p) { return p.k % 2 == 1; }

Decomposition decompose(const Params& p, Vertex u) {
    if (p.k == p.n)
        throw Error(ErrorKind::decomposition_unavailable,
                    "Q(n,n) is the folded base case; no product decomposition");
    p.require_vertex(u);
    return Decomposition{side_of(p, u), project(p, u)};
}

std::string to_label(const Params& p, Vertex u) {
    p.require_vertex(u);
    std::string s(p.n, '0');
    for (int i = 0; i < p.n; ++i)
        if (u & (1u << i)) s[p.n - 1 - i] = '1';
    return s;
}

Vertex parse_label(const Params& p, const std::string& s) {
    if (static_cast<int>(s.size()) != p.n)
        throw Error(ErrorKind::invalid_params,
                    "label '" + s + "' must have exactly " + std::to_string(p.n) + " binary digits");
    Vertex u = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw Error(ErrorKind::invalid_params, "label '" + s + "' contains non-binary characters");
        u = (u << 1) | static_cast<Vertex>(c - '0');
    }
    return u;
}

std::vector<Edge> all_edges(const Params& p) {
    std::vector<Edge> out;
    for (Vertex u = 0; u <= p.max_vertex(); ++u)
        for (Vertex v : neighbors(p, u))
            if (v > u) out.push_back(make_edge(p, u, v));
    return out;
}

} // namespace enhcube
