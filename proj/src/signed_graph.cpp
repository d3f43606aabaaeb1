#include "sgc4/signed_graph.hpp"

#include <algorithm>
#include <queue>

namespace sgc4 {

const char* err_name(Err e) {
    switch (e) {
        case Err::loop_edge: return "LoopEdge";
        case Err::duplicate_edge: return "DuplicateEdge";
        case Err::vertex_out_of_range: return "VertexOutOfRange";
        case Err::empty_graph: return "EmptyGraph";
        case Err::bad_parameter: return "BadParameter";
        case Err::simplicity_violated: return "SimplicityViolated";
        case Err::creates_negative_digon: return "CreatesNegativeDigon";
        case Err::precondition_failed: return "PreconditionFailed";
        case Err::internal_assertion: return "InternalAssertion";
        case Err::not_bipartite: return "NotBipartite";
        case Err::cap_exceeded: return "CapExceeded";
        case Err::budget_exceeded: return "BudgetExceeded";
        case Err::parse_error: return "ParseError";
    }
    return "?";
}

void check_vertex(const SignedGraph& g, int v, const char* what) {
    if (v < 0 || v >= g.n)
        throw GraphError(Err::vertex_out_of_range,
                         std::string(what) + ": vertex " + std::to_string(v) +
                             " not in 0.." + std::to_string(g.n - 1));
}

namespace {

std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges, bool allow_parallel_pair) {
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError(Err::vertex_out_of_range,
                             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") out of range for n=" + std::to_string(n));
        if (e.u == e.v)
            throw GraphError(Err::loop_edge, "loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), edge_less);
    for (size_t i = 1; i < edges.size(); i++) {
        const Edge &a = edges[i - 1], &b = edges[i];
        if (a.u != b.u || a.v != b.v) continue;
        std::string pair = "(" + std::to_string(a.u) + "," + std::to_string(a.v) + ")";
        if (!allow_parallel_pair)
            throw GraphError(Err::duplicate_edge, "repeated edge " + pair);
        if (a.s == b.s)
            throw GraphError(Err::duplicate_edge, "repeated same-sign parallel edge " + pair);
        if (i >= 2 && edges[i - 2].u == a.u && edges[i - 2].v == a.v)
            throw GraphError(Err::duplicate_edge, "more than two parallel edges " + pair);
    }
    return edges;
}

}  // namespace

SignedGraph make_signed_graph(int n, std::vector<Edge> edges) {
    if (n < 0) throw GraphError(Err::bad_parameter, "negative vertex count");
    return SignedGraph{n, normalize_edges(n, std::move(edges), false)};
}

SignedMultiGraph make_signed_multigraph(int n, std::vector<Edge> edges) {
    if (n < 0) throw GraphError(Err::bad_parameter, "negative vertex count");
    return SignedMultiGraph{n, normalize_edges(n, std::move(edges), true)};
}

SignedMultiGraph to_multigraph(const SignedGraph& g) { return SignedMultiGraph{g.n, g.edges}; }

Adjacency adjacency(int n, const std::vector<Edge>& edges) {
    Adjacency a;
    a.at.resize(n);
    for (const Edge& e : edges) {
        a.at[e.u].push_back({e.v, e.s});
        a.at[e.v].push_back({e.u, e.s});
    }
    return a;
}

std::vector<int> degrees(int n, const std::vector<Edge>& edges) {
    std::vector<int> d(n, 0);
    for (const Edge& e : edges) d[e.u]++, d[e.v]++;
    return d;
}

std::vector<std::vector<int>> connected_components(int n, const std::vector<Edge>& edges) {
    Adjacency adj = adjacency(n, edges);
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; s++) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (auto [w, s2] : adj.at[v]) {
                (void)s2;
                if (comp[w] < 0) comp[w] = id, q.push(w);
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(int n, const std::vector<Edge>& edges) {
    return connected_components(n, edges).size() <= 1;
}

SignedGraph switch_graph(const SignedGraph& g, const SwitchSet& x) {
    std::vector<char> in(g.n, 0);
    for (int v : x) {
        check_vertex(g, v, "switch");
        in[v] = 1;
    }
    SignedGraph h = g;
    for (Edge& e : h.edges)
        if (in[e.u] != in[e.v]) e.s = flipped(e.s);
    return h;
}

std::optional<SwitchSet> is_balanced(const SignedGraph& g) {
    // spanning-forest labeling: fix the root of each component outside the
    // switching set, propagate "side" across edges (negative edge = sides
    // differ), then verify every non-tree edge agrees
    Adjacency adj = adjacency(g);
    std::vector<int> side(g.n, -1);
    for (int root = 0; root < g.n; root++) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : adj.at[v]) {
                int want = side[v] ^ (is_neg(s) ? 1 : 0);
                if (side[w] < 0) {
                    side[w] = want;
                    q.push(w);
                }
            }
        }
    }
    for (const Edge& e : g.edges) {
        int same = side[e.u] == side[e.v];
        if (same != (e.s == Sign::pos ? 1 : 0)) return std::nullopt;
    }
    SwitchSet x;
    for (int v = 0; v < g.n; v++)
        if (side[v] == 1) x.push_back(v);
    return x;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size())
        throw GraphError(Err::precondition_failed,
                         "switching_equivalent needs the same underlying graph");
    SignedGraph prod;
    prod.n = a.n;
    prod.edges = a.edges;
    for (size_t i = 0; i < prod.edges.size(); i++) {
        const Edge& other = b.edges[i];
        if (prod.edges[i].u != other.u || prod.edges[i].v != other.v)
            throw GraphError(Err::precondition_failed,
                             "switching_equivalent needs the same underlying graph");
        prod.edges[i].s = prod.edges[i].s * other.s;
    }
    return is_balanced(prod).has_value();
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const SignedGraph& g) {
    Adjacency adj = adjacency(g);
    std::vector<int> color(g.n, -1);
    for (int root = 0; root < g.n; root++) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : adj.at[v]) {
                (void)s;
                if (color[w] < 0) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n; v++) (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

bool GirthVector::dominates(const GirthVector& target) const {
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            if (at(i, j) < target.at(i, j)) return false;
    return true;
}

std::string girth_string(int g) { return g == girth_inf ? "inf" : std::to_string(g); }

std::string girth_line(const GirthVector& gv) {
    return "g00=" + girth_string(gv.g00) + " g01=" + girth_string(gv.g01) +
           " g10=" + girth_string(gv.g10) + " g11=" + girth_string(gv.g11);
}

GirthVector girth_vector(const SignedGraph& g) {
    // BFS in the 4-fold cover with states (vertex, sign parity, length parity).
    // A closed walk from s of type (i,j) decomposes as a walk to some state
    // (v, i', j') plus one final edge back to s, which avoids counting the
    // empty walk; minimizing over all start vertices gives the girth vector.
    GirthVector out;
    Adjacency adj = adjacency(g);
    int states = g.n * 4;
    std::vector<int> dist(states);
    for (int s = 0; s < g.n; s++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        int start = s * 4;  // (s, +, even)
        dist[start] = 0;
        q.push(start);
        while (!q.empty()) {
            int st = q.front();
            q.pop();
            int v = st / 4, par = st % 4;
            for (auto [w, sg] : adj.at[v]) {
                int npar = (par ^ 1) ^ (is_neg(sg) ? 2 : 0);
                int nst = w * 4 + npar;
                if (dist[nst] < 0) {
                    dist[nst] = dist[st] + 1;
                    q.push(nst);
                }
                if (w == s) {
                    int len = dist[st] + 1;
                    int i = npar >> 1, j = npar & 1;
                    if (len < out.at(i, j)) out.at(i, j) = len;
                }
            }
        }
    }
    return out;
}

int negative_girth(const SignedGraph& g) {
    GirthVector gv = girth_vector(g);
    return std::min(gv.g10, gv.g11);
}

int potential(const SignedGraph& g) { return 4 * g.n - 3 * static_cast<int>(g.edges.size()); }

SignedGraph remove_edge(const SignedGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges.size()))
        throw GraphError(Err::bad_parameter, "edge index out of range");
    SignedGraph h = g;
    h.edges.erase(h.edges.begin() + edge_index);
    return h;
}

SignedGraph remove_vertex(const SignedGraph& g, int v) {
    check_vertex(g, v, "remove_vertex");
    SignedGraph h;
    h.n = g.n - 1;
    for (const Edge& e : g.edges) {
        if (e.u == v || e.v == v) continue;
        h.edges.push_back({e.u - (e.u > v), e.v - (e.v > v), e.s});
    }
    return h;
}

SignedGraph cycle_graph(int l, bool negative) {
    if (l < 3) throw GraphError(Err::bad_parameter, "cycle needs length >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < l; i++) edges.push_back({i, i + 1, Sign::pos});
    edges.push_back({0, l - 1, negative ? Sign::neg : Sign::pos});
    return make_signed_graph(l, std::move(edges));
}

}  // namespace sgc4
