// The named graphs and the constructions that combine them.

#pragma once

#include <string>
#include <utility>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

struct GalleryId {
    enum class Tag {
        c_minus,   // param l: even cycle, one negative edge
        c_plus,    // param l: even cycle, all positive
        gamma,     // subdivided K4, 6 vertices 8 edges
        what,      // the 7-vertex, 9-edge exception
        omega1,    // 9-vertex subdivision relative of what
        omega2,    //   "
        theta1,    // all-positive theta, 5 vertices
        theta2,    // all-positive theta, 6 vertices
        dual_path, // the (-,+,-) path on 4 vertices
        g2k1,      // param k: doubled odd cycle, 2-subdivided; 6k+3 vertices
        gprime2k1, // param k: g2k1 with one degree-2 identification; 6k+2 vertices
    };
    Tag tag;
    int param = 0;
};

GalleryId parse_gallery_id(const std::string& text);  // "gamma", "cminus:6", "g2k1:2", ...
std::string gallery_id_string(const GalleryId& id);

SignedGraph gallery(const GalleryId& id);
inline SignedGraph gallery(GalleryId::Tag tag, int param = 0) { return gallery({tag, param}); }

// Replace each edge uv by a path of l fresh-vertex edges whose total sign is
// -sign(uv): exactly the first path edge (at min(u,v)) carries -sign(uv).
SignedGraph t_subdivide(const SignedGraph& g, int l);
SignedGraph t_subdivide(const SignedMultiGraph& g, int l);

// Double every edge into a {+,-} parallel pair (input signs ignored: the
// operation is defined on the underlying graph).
SignedMultiGraph tilde(const SignedGraph& g);

// One fresh vertex joined to a (sign s1) and b (sign s2); potential drops by 2.
SignedGraph p2_extend(const SignedGraph& g, int a, int b, Sign s1, Sign s2);

// Merge two nonadjacent vertices; same-sign parallel pairs collapse to one
// edge, opposite-sign pairs are an error.
SignedGraph identify(const SignedGraph& g, int a, int b);

// Splice two critical graphs at degree-2 vertices u, v: switch each input so
// the 2-path through the deleted vertex is negative, then join the neighbor
// pairs by one positive and one negative edge.
SignedGraph splice_F(const SignedGraph& g1, int u, const SignedGraph& g2, int v,
                     bool check_critical = true);

// Hajos-style sum: delete a positive edge of g1 and a negative edge of g2,
// identify the endpoints pairwise.  Edges are given by their endpoints.
SignedGraph hajos_H(const SignedGraph& g1, std::pair<int, int> e1, const SignedGraph& g2,
                    std::pair<int, int> e2, bool check_critical = true);

// A critical signed graph on n >= 9 vertices with |E| in
// {ceil(4n/3), ceil(4n/3)+1}.
SignedGraph build_critical(int n);

}  // namespace sgc4
