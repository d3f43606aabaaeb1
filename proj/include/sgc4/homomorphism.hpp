// Switching homomorphisms.  A homomorphism of signed graphs G -> H is a pair
// (switch set X, vertex map f): after switching G at X, every edge must land
// on an H-edge of the same sign.  Complementing X inside a connected
// component leaves the hom intact, which the solvers use to halve the search.

#pragma once

#include <array>
#include <optional>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

struct Homomorphism {
    SwitchSet switch_set;
    std::vector<int> map;  // V(G) -> V(H)
};

// a path w-u-v-z with signs (-,+,-): the dual obstruction to edge-sign
// preserving maps into C-4
struct SpWitness {
    std::array<int, 4> path;
};

struct HomVerdict {
    enum class Kind { mapped, nohom_witness, nohom_girth, nohom_exhausted };
    Kind kind = Kind::nohom_exhausted;
    std::optional<Homomorphism> hom;     // mapped
    std::optional<SpWitness> witness;    // nohom_witness
    int girth_i = -1, girth_j = -1;      // nohom_girth: index of the violated entry
    bool mapped() const { return kind == Kind::mapped; }
};

// the standard target: 4-cycle 0-1-2-3 with the single negative edge 03
SignedGraph c_minus_4();

// girth vector of C-l (l >= 3): the necessary condition table for hom targets
GirthVector girth_vector_c_minus(int l);

bool verify_hom(const SignedGraph& g, const SignedGraph& h, const Homomorphism& phi);

// Edge-sign preserving maps to C-4 via the duality: either the 4-class
// bipartition map (no witness present) or an explicit (-,+,-) witness path.
// Linear time; requires G bipartite.
HomVerdict sp_hom_C4(const SignedGraph& g);

// Switching hom to C-4: girth fast path, then DPLL over switch bits with the
// forbidden-pattern propagation, sp_hom_C4 at clean leaves.  Always exhaustive.
HomVerdict hom_C4(const SignedGraph& g);

inline constexpr long long default_node_budget = 50'000'000;

// Complete CSP over per-vertex (switch bit, target vertex) states, MRV +
// forward checking.  Throws BudgetExceeded when the node budget trips, so a
// NoHom answer always means a finished exhaustive search.
HomVerdict hom_to_target(const SignedGraph& g, const SignedGraph& h,
                         long long node_budget = default_node_budget);

}  // namespace sgc4
