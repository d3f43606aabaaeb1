#pragma once

#include <optional>
#include <vector>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

// proper k-coloring of the underlying graph (signs ignored), colors 0..k-1
std::optional<std::vector<int>> k_coloring(const SignedGraph& g, int k);

// coloring by nonzero values in {-k..-1, 1..k} with c(x) != sign(xy) * c(y) on
// every edge; the first vertex of each component gets a positive value, which
// fixes the global negation symmetry per component
std::optional<std::vector<int>> x2k_coloring(const SignedMultiGraph& g, int k);
inline std::optional<std::vector<int>> x2k_coloring(const SignedGraph& g, int k) {
    return x2k_coloring(to_multigraph(g), k);
}

// 4-coloring of the underlying graph obtained by double-subdividing every edge
// of the all-positive copy and reading a homomorphism to C-4 back off the
// branch vertices; returns nullopt when no such homomorphism exists
std::optional<std::vector<int>> four_color_via_C4(const SignedGraph& g);

}  // namespace sgc4
