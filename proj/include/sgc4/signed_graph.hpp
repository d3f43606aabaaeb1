// Core signed-graph types and operations.
//
// Vertices are dense ids 0..n-1.  Edges carry a sign in {+,-} and are stored
// canonically (u < v, list sorted), so structural equality of graphs is plain
// == on the struct.  SignedGraph is simple (no loops, no parallel edges);
// SignedMultiGraph additionally allows one parallel pair of opposite signs
// per vertex pair, which is the only multiplicity the constructions need.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgc4 {

enum class Sign : std::int8_t { pos = 1, neg = -1 };

constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::pos : Sign::neg; }
constexpr Sign flipped(Sign s) { return s == Sign::pos ? Sign::neg : Sign::pos; }
constexpr char sign_char(Sign s) { return s == Sign::pos ? '+' : '-'; }
constexpr bool is_neg(Sign s) { return s == Sign::neg; }

struct Edge {
    int u = 0, v = 0;
    Sign s = Sign::pos;
    bool operator==(const Edge&) const = default;
};

// canonical edge order: by endpoints, positive before negative on a parallel pair
constexpr bool edge_less(const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return static_cast<int>(a.s) > static_cast<int>(b.s);
}

enum class Err {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    empty_graph,
    bad_parameter,
    simplicity_violated,
    creates_negative_digon,
    precondition_failed,
    internal_assertion,
    not_bipartite,
    cap_exceeded,
    budget_exceeded,
    parse_error,
};

const char* err_name(Err e);

class GraphError : public std::runtime_error {
  public:
    GraphError(Err code, const std::string& what) : std::runtime_error(what), code(code) {}
    Err code;
};

struct SignedGraph {
    int n = 0;
    std::vector<Edge> edges;  // u < v, sorted
    bool operator==(const SignedGraph&) const = default;
};

struct SignedMultiGraph {
    int n = 0;
    std::vector<Edge> edges;  // u < v, sorted, at most two per pair (opposite signs)
    bool operator==(const SignedMultiGraph&) const = default;
};

// sorted set of vertex ids to switch at
using SwitchSet = std::vector<int>;

// Validate and canonicalize an edge list.  Throws GraphError on loops,
// out-of-range endpoints or (for the simple version) repeated vertex pairs.
SignedGraph make_signed_graph(int n, std::vector<Edge> edges);
SignedMultiGraph make_signed_multigraph(int n, std::vector<Edge> edges);
SignedMultiGraph to_multigraph(const SignedGraph& g);

// neighbor lists with signs; parallel edges appear as repeated neighbors
struct Adjacency {
    std::vector<std::vector<std::pair<int, Sign>>> at;
};
Adjacency adjacency(int n, const std::vector<Edge>& edges);
inline Adjacency adjacency(const SignedGraph& g) { return adjacency(g.n, g.edges); }
inline Adjacency adjacency(const SignedMultiGraph& g) { return adjacency(g.n, g.edges); }

std::vector<int> degrees(int n, const std::vector<Edge>& edges);
std::vector<std::vector<int>> connected_components(int n, const std::vector<Edge>& edges);
bool is_connected(int n, const std::vector<Edge>& edges);

// Negate the sign of every edge with exactly one endpoint in X.
SignedGraph switch_graph(const SignedGraph& g, const SwitchSet& x);

// A switching set that makes every edge positive, if one exists.  The
// representative returned never contains the smallest vertex of any
// connected component, which makes it deterministic.
std::optional<SwitchSet> is_balanced(const SignedGraph& g);

// Same underlying graph required (including labels); true iff some switching
// of a turns it into b, i.e. the edgewise product signature is balanced.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Two-coloring of the underlying graph, sides listed sorted; vertex of lowest
// id in each component goes to the first side.  nullopt if an odd cycle exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const SignedGraph& g);

constexpr int girth_inf = std::numeric_limits<int>::max();

// g_ij = length of a shortest closed walk with sign parity i (1 = negative)
// and length parity j (1 = odd) that is "essential": walks that backtrack an
// edge immediately are allowed, so g_00 = 2 for any graph with an edge.
struct GirthVector {
    int g00 = girth_inf, g01 = girth_inf, g10 = girth_inf, g11 = girth_inf;
    bool operator==(const GirthVector&) const = default;
    int at(int i, int j) const {
        if (i == 0) return j == 0 ? g00 : g01;
        return j == 0 ? g10 : g11;
    }
    int& at(int i, int j) {
        if (i == 0) return j == 0 ? g00 : g01;
        return j == 0 ? g10 : g11;
    }
    // every finite entry of target is matched or beaten in target's favor:
    // g_ij(this) >= g_ij(target) for all ij, the hom-existence necessary condition
    bool dominates(const GirthVector& target) const;
};

std::string girth_string(int g);  // decimal or "inf"
std::string girth_line(const GirthVector& gv);  // "g00=2 g01=inf g10=4 g11=inf"

GirthVector girth_vector(const SignedGraph& g);
int negative_girth(const SignedGraph& g);  // min over negative closed walks, girth_inf if balanced

// 4|V| - 3|E|
int potential(const SignedGraph& g);

SignedGraph remove_edge(const SignedGraph& g, int edge_index);
// delete v, compress ids above it down by one
SignedGraph remove_vertex(const SignedGraph& g, int v);

// simple cycle of length l >= 3 on vertices 0..l-1 in order; exactly the edge
// closing the cycle (0, l-1) is negative when negative=true
SignedGraph cycle_graph(int l, bool negative);

void check_vertex(const SignedGraph& g, int v, const char* what);

}  // namespace sgc4
