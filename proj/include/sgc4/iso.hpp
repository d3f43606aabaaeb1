// Switching isomorphism and switching-subgraph containment.

#pragma once

#include <optional>
#include <vector>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

// A bijection f with f(edges of a) = edges of b and the pulled-back signature
// switching-equivalent to a's, if one exists.
std::optional<std::vector<int>> switching_isomorphic(const SignedGraph& a, const SignedGraph& b);

// Injective map of pattern into host sending pattern edges to host edges such
// that the host signs pulled back to the pattern are switching-equivalent to
// the pattern's own signature.  Host edges outside the image are ignored.
std::optional<std::vector<int>> find_switching_subgraph(const SignedGraph& host,
                                                        const SignedGraph& pattern);

}  // namespace sgc4
