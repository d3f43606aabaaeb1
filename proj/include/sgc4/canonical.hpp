// Canonical labeling of small unsigned graphs by individualization-refinement,
// returning the canonical adjacency code, one canonical labeling, and the full
// automorphism group.  Intended for n <= 64; the census and isomorphism
// routines sit on top of it.

#pragma once

#include <cstdint>
#include <vector>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

struct Canon {
    std::vector<int> labeling;           // old id -> canonical position
    std::vector<std::uint64_t> code;     // canonical adjacency rows, row i = neighbor bits
    std::vector<std::vector<int>> automorphisms;  // every adjacency-preserving perm, old -> old
};

Canon canonical_form(int n, const std::vector<std::pair<int, int>>& edges);

inline Canon canonical_form(const SignedGraph& g) {
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (const Edge& ed : g.edges) e.push_back({ed.u, ed.v});
    return canonical_form(g.n, e);
}

}  // namespace sgc4
