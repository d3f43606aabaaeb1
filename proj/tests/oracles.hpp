// Reference implementations for cross-checking, deliberately written with the
// dumbest algorithms that could possibly work, sharing no logic with the
// library: walk enumeration instead of parity-cover BFS, plain assignment
// search instead of duality or propagation, subset scans instead of flows.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "sgc4/mad.hpp"
#include "sgc4/signed_graph.hpp"

namespace sgc4::test {

GirthVector oracle_girth(const SignedGraph& g);

// edge-sign-preserving maps into C-4, no switching involved
bool oracle_sp_hom_C4(const SignedGraph& g);

// switching homomorphism to C-4 by trying every switching (n <= 16)
bool oracle_hom_C4(const SignedGraph& g);

bool oracle_chromatic_leq(const SignedGraph& g, int k);
bool oracle_x2k(const SignedMultiGraph& g, int k);

Rational oracle_mad(const SignedGraph& g);  // recounts every vertex subset

// same underlying graph, some switching makes the signs equal (n <= 16)
bool oracle_switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// sorted edge-index sets of all negative simple cycles
std::vector<std::vector<int>> negative_cycle_edge_sets(const SignedGraph& g);

// permutation search with a cycle-balance check on the pulled-back signs
std::optional<std::vector<int>> oracle_switching_isomorphic(const SignedGraph& a,
                                                            const SignedGraph& b);

// deterministic corpora
SignedGraph random_bipartite(std::mt19937& rng, int n_lo, int n_hi, double d_lo, double d_hi);
SignedGraph random_signed(std::mt19937& rng, int n, double p);
SignedMultiGraph random_multigraph(std::mt19937& rng, int n, double p);
SignedGraph complete_graph(int n);
SignedGraph wheel(int rim);

}  // namespace sgc4::test
