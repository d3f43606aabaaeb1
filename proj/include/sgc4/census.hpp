#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

struct CensusOptions {
    bool apply_filters = true;  // structural pre-filters before the solver
    int jobs = 1;
    bool allow_big = false;  // lifts the default order cap of 8 up to 9
};

struct CensusEntry {
    SignedGraph graph;  // canonical representative of the switching-iso class
    int edge_count = 0;
    int potential_value = 0;  // 4n - 3m
};

struct CensusReport {
    int n = 0;
    long long classes_examined = 0;  // candidates handed to the criticality test
    std::vector<CensusEntry> critical_found;
    std::vector<CensusEntry> exceptions;  // critical with 3m < 4n
};

// unlabeled simple graphs of order n (connected ones only), one all-positive
// representative per isomorphism class, built by vertex augmentation with
// canonical-form deduplication
std::vector<SignedGraph> connected_graph_classes(int n, bool bipartite_only);

// every (connected bipartite underlying graph) x (signature class up to
// switching and automorphisms); with apply_filters set, candidates that are
// not 2-connected, have a vertex of degree < 2, contain a 3-thread, or have a
// degree-2 vertex on a positive 4-cycle are dropped before being reported
void for_each_candidate(int n, const CensusOptions& opt,
                        const std::function<void(const SignedGraph&)>& fn);
std::vector<SignedGraph> enumerate_candidates(int n, const CensusOptions& opt = {});

// run the criticality test over all candidates of order n and collect the
// critical classes, canonically labeled and sorted; deterministic for any jobs
CensusReport run_census(int n, const CensusOptions& opt = {});

// canonical representative of the switching-isomorphism class: canonical
// underlying labeling, then the signature minimized over automorphisms and
// switchings
SignedGraph canonical_signed_form(const SignedGraph& g);

}  // namespace sgc4
