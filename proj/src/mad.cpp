#include "sgc4/mad.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace sgc4 {

Rational mad_by_subsets(const SignedGraph& g) {
    if (g.n == 0) throw GraphError(Err::empty_graph, "mad of the empty graph");
    if (g.n > 24) throw GraphError(Err::cap_exceeded, "subset enumeration capped at n=24");
    std::vector<std::uint32_t> nbr(g.n, 0);
    for (const Edge& e : g.edges) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    // edges(S) = edges(S minus lowest vertex) + degree of that vertex into S
    std::vector<std::int32_t> ecount(std::size_t(1) << g.n, 0);
    Rational best(0);
    for (std::uint32_t s = 1; s < (1u << g.n); s++) {
        int low = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        ecount[s] = ecount[rest] + std::popcount(nbr[low] & rest);
        Rational d(2LL * ecount[s], std::popcount(s));
        best = std::max(best, d);
    }
    return best;
}

namespace {

// plain Dinic on small integer-capacity networks
struct Dinic {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit Dinic(int nodes) : adj(nodes), level(nodes), iter(nodes) {}

    void add(int a, int b, long long cap) {
        adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
        adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{s};
        level[s] = 0;
        for (size_t h = 0; h < q.size(); h++) {
            int v = q[h];
            for (const Arc& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); i++) {
            Arc& a = adj[v][i];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    adj[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    // source side of the min cut after max_flow
    std::vector<char> cut_side(int s) {
        std::vector<char> side(adj.size(), 0);
        std::vector<int> q{s};
        side[s] = 1;
        for (size_t h = 0; h < q.size(); h++)
            for (const Arc& a : adj[q[h]])
                if (a.cap > 0 && !side[a.to]) {
                    side[a.to] = 1;
                    q.push_back(a.to);
                }
        return side;
    }
};

}  // namespace

Rational mad_by_flow(const SignedGraph& g) {
    if (g.n == 0) throw GraphError(Err::empty_graph, "mad of the empty graph");
    long long m = static_cast<long long>(g.edges.size());
    if (m == 0) return Rational(0);
    // Dinkelbach: candidate density p/q; a subgraph beats it iff the cut
    // of Goldberg's network (capacities scaled by q) is below m*q
    Rational best(2 * m, g.n);  // density of the whole graph, doubled
    while (true) {
        long long p = best.numerator(), q = best.denominator();  // best/2 = p/2q per edge count
        // test edge-density > p/(2q): source->edge cap 2q, vertex->sink cap p
        int s = g.n + static_cast<int>(m), t = s + 1;
        Dinic net(t + 1);
        for (int i = 0; i < static_cast<int>(m); i++) {
            net.add(s, g.n + i, 2 * q);
            net.add(g.n + i, g.edges[i].u, std::numeric_limits<long long>::max() / 4);
            net.add(g.n + i, g.edges[i].v, std::numeric_limits<long long>::max() / 4);
        }
        for (int v = 0; v < g.n; v++) net.add(v, t, p);
        long long flow = net.max_flow(s, t);
        if (flow >= 2 * q * m) return best;  // nothing denser than the current best
        std::vector<char> side = net.cut_side(s);
        long long sv = 0, se = 0;
        for (int v = 0; v < g.n; v++) sv += side[v];
        for (const Edge& e : g.edges) se += side[e.u] && side[e.v];
        if (sv == 0) return best;
        Rational cand(2 * se, sv);
        if (cand <= best) return best;
        best = cand;
    }
}

Rational max_average_degree(const SignedGraph& g) {
    return g.n <= 20 ? mad_by_subsets(g) : mad_by_flow(g);
}

}  // namespace sgc4
