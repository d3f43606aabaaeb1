// Exact maximum average degree: mad(G) = max over nonempty S of 2|E(S)|/|S|
// with E(S) the edges induced by S.  Small graphs go through plain subset
// enumeration; larger ones through Dinkelbach iteration on Goldberg's
// densest-subgraph flow network, so the result is an exact rational either way.

#pragma once

#include <boost/rational.hpp>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

using Rational = boost::rational<long long>;

Rational max_average_degree(const SignedGraph& g);

// the two routes, exposed so tests can cross-check them against each other
Rational mad_by_subsets(const SignedGraph& g);  // n <= 24 enforced
Rational mad_by_flow(const SignedGraph& g);

}  // namespace sgc4
