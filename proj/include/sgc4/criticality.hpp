// C-4 criticality certification and the structural necessary conditions.

#pragma once

#include <optional>
#include <string>

#include "sgc4/homomorphism.hpp"
#include "sgc4/signed_graph.hpp"

namespace sgc4 {

struct CriticalVerdict {
    enum class Kind { critical, maps_to_c4, fails_girth, non_critical_edge };
    Kind kind = Kind::critical;
    std::optional<Homomorphism> hom;  // maps_to_c4
    int girth_i = -1, girth_j = -1;   // fails_girth
    std::optional<Edge> edge;         // non_critical_edge: G-e still has no hom
    bool critical() const { return kind == Kind::critical; }
};

// Checks, in order: girth_vector(G) >= girth_vector(C-4) componentwise;
// hom_C4(G) = NoHom; hom_C4(G-e) = Mapped for every edge e.  Deleting edges
// covers all proper subgraphs: any proper subgraph sits inside some G-e, and
// vertices isolated by the deletion can always be mapped (C-4 is nonempty),
// so a hom of G-e restricts/extends to one of the subgraph.
CriticalVerdict is_critical_C4(const SignedGraph& g);

enum class StructuralViolationKind { not_two_connected, three_thread, degree2_on_positive_c4 };

struct StructuralViolation {
    StructuralViolationKind kind;
    std::vector<int> witness;  // cut vertex / thread path / the 4-cycle
    std::string describe() const;
};

// The proven necessary conditions for critical graphs: 2-connected, no
// 3-thread, no degree-2 vertex on a positive 4-cycle.  Empty = all pass.
std::vector<StructuralViolation> structural_check(const SignedGraph& g);

// Informational only: degree-3 vertices with two degree-2 neighbors.  This
// configuration is excluded only for minimum counterexamples, and genuinely
// occurs in critical graphs, so it is never treated as a violation.
std::vector<int> degree3_with_two_degree2_neighbors(const SignedGraph& g);

}  // namespace sgc4
