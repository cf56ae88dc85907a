#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enhcube/cycle.hpp"
#include "enhcube/topology.hpp"

// Constructive cycle embedding. Every edge of Q_{n,k} lies on a cycle of
// every even length from 4 to 2^n; for even k it also lies on a cycle of
// every odd length from k+3 (from k+1 unless the edge's dimension exceeds
// k) up to 2^n - 1. embed_cycle builds an explicit witness for any
// admissible length by recursing along Q_{n,k} = K_2 x Q_{n-1,k} down to
// the folded-cube base case Q_{k,k}.

namespace enhcube {

// The admissible lengths through one edge. Evens always run 4..2^n;
// odd_floor is empty exactly when the graph is bipartite (k odd).
struct LengthSpec {
    int even_min = 4;
    int even_max = 0;             // 2^n
    std::optional<int> odd_floor; // k+1 or k+3
    int odd_max = 0;              // 2^n - 1

    bool contains(int l) const;
    std::vector<int> all() const; // ascending
    std::string describe() const;
};

class InadmissibleLengthError : public Error {
public:
    InadmissibleLengthError(const LengthSpec& spec, const std::string& msg)
        : Error(ErrorKind::inadmissible_length, msg), spec_(spec) {}

    const LengthSpec& spec() const { return spec_; }

private:
    LengthSpec spec_;
};

// Pure classification, no search.
LengthSpec admissible_lengths(const Params& p, const Edge& e);

// Splits an odd l into l1 + l2 with l1 odd in [floor1, 2^(n-1)-1] and l2
// even in [4, 2^(n-1)], taking l1 as small as possible. floor1 must be the
// odd floor of the sub-problem (k+1 or k+3).
std::pair<int, int> split_odd_length(const Params& p, int l, int floor1);

// Base case: a cycle of length l through e in the folded cube Q_{k,k},
// found by pruned depth-first search and memoized per (k, edge class, l).
Cycle base_cycle_folded(const Params& p, const Edge& e, int l);

// Replaces the edge following e on `base` (a cycle confined to one side of
// the K_2 product) with a two-edge detour through the other side: length
// l+2, still through e.
Cycle product_extend_two(const Params& p, const Cycle& base, const Edge& e);

// Joins `base` (length l1, confined to one side) with a recursively built
// cycle of length l2 in the other side into a cycle of length l1+l2 through
// e. Accepts e on the base, or e crossing with the base passing through
// e's side-0 endpoint and its dimension-1 neighbor.
Cycle product_join(const Params& p, const Cycle& base, const Edge& e, int l2);

// Deterministic witness cycle of length l through e; throws
// InadmissibleLengthError (carrying the LengthSpec) when no such cycle
// exists.
Cycle embed_cycle(const Params& p, const Edge& e, int l);

} // namespace enhcube
