#include "sgc4/homomorphism.hpp"

#include <algorithm>
#include <bit>

namespace sgc4 {

SignedGraph c_minus_4() { return cycle_graph(4, true); }

GirthVector girth_vector_c_minus(int l) {
    GirthVector gv;
    gv.g00 = 2;
    if (l % 2 == 0)
        gv.g10 = l;  // going around twice gives a positive even walk, shorter ones close up
    else
        gv.g11 = l;  // odd closed walks in C-l traverse the cycle an odd number of times
    return gv;
}

bool verify_hom(const SignedGraph& g, const SignedGraph& h, const Homomorphism& phi) {
    if (static_cast<int>(phi.map.size()) != g.n)
        throw GraphError(Err::bad_parameter, "map size != vertex count");
    for (int t : phi.map)
        if (t < 0 || t >= h.n)
            throw GraphError(Err::vertex_out_of_range, "map image outside target");
    std::vector<char> in(g.n, 0);
    for (int v : phi.switch_set) {
        check_vertex(g, v, "verify_hom switch set");
        in[v] = 1;
    }
    std::vector<std::int8_t> hmat(static_cast<size_t>(h.n) * h.n, 0);
    for (const Edge& e : h.edges) {
        hmat[static_cast<size_t>(e.u) * h.n + e.v] = static_cast<std::int8_t>(e.s);
        hmat[static_cast<size_t>(e.v) * h.n + e.u] = static_cast<std::int8_t>(e.s);
    }
    for (const Edge& e : g.edges) {
        Sign s = in[e.u] != in[e.v] ? flipped(e.s) : e.s;
        int a = phi.map[e.u], b = phi.map[e.v];
        if (a == b) return false;
        if (hmat[static_cast<size_t>(a) * h.n + b] != static_cast<std::int8_t>(s)) return false;
    }
    return true;
}

HomVerdict sp_hom_C4(const SignedGraph& g) {
    auto parts = bipartition(g);
    if (!parts) throw GraphError(Err::not_bipartite, "sp_hom_C4 needs a bipartite graph");
    std::vector<char> side(g.n, 0);
    for (int v : parts->second) side[v] = 1;
    std::vector<int> neg_nbr(g.n, -1);  // lowest negative neighbor
    for (const Edge& e : g.edges) {
        if (e.s != Sign::neg) continue;
        if (neg_nbr[e.u] < 0 || e.v < neg_nbr[e.u]) neg_nbr[e.u] = e.v;
        if (neg_nbr[e.v] < 0 || e.u < neg_nbr[e.v]) neg_nbr[e.v] = e.u;
    }
    for (const Edge& e : g.edges) {
        if (e.s != Sign::pos || neg_nbr[e.u] < 0 || neg_nbr[e.v] < 0) continue;
        HomVerdict out;
        out.kind = HomVerdict::Kind::nohom_witness;
        out.witness = SpWitness{{neg_nbr[e.u], e.u, e.v, neg_nbr[e.v]}};
        return out;
    }
    // duality map: side A -> {u1=0 with a negative edge, u3=2 without},
    // side B -> {u4=3 with, u2=1 without}
    Homomorphism phi;
    phi.map.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        bool neg = neg_nbr[v] >= 0;
        phi.map[v] = side[v] ? (neg ? 3 : 1) : (neg ? 0 : 2);
    }
    if (!verify_hom(g, c_minus_4(), phi))
        throw GraphError(Err::internal_assertion, "bipartition rule produced a non-hom");
    HomVerdict out;
    out.kind = HomVerdict::Kind::mapped;
    out.hom = std::move(phi);
    return out;
}

namespace {

// forbidden pattern for C-4 maps: a path p0-p1-p2-p3 whose switched signs
// come out (-,+,-); term t is "matched" when x[a] xor x[b] == need
struct Pattern {
    std::array<int, 4> v;
    std::array<std::uint8_t, 3> need;
};

struct C4Search {
    const SignedGraph& g;
    std::vector<Pattern> patterns;
    std::vector<std::vector<int>> patterns_at;  // vertex -> pattern indices
    std::vector<std::int8_t> val;               // -1 unknown, else 0/1
    std::vector<int> trail;
    std::vector<int> order;       // assignment order: degree desc, id asc
    std::vector<char> is_anchor;  // first vertex of its component in order

    explicit C4Search(const SignedGraph& graph) : g(graph) {}

    bool term_endpoints(const Pattern& p, int t, int& a, int& b) const {
        a = p.v[t];
        b = p.v[t + 1];
        return true;
    }

    // returns false on conflict; forced assignments are pushed through assign()
    bool recheck(int pat_idx) {
        const Pattern& p = patterns[pat_idx];
        int unknown_var = -1;
        bool dup_unknown = false;
        for (int t = 0; t < 3 && !dup_unknown; t++) {
            int a = p.v[t], b = p.v[t + 1];
            if (val[a] >= 0 && val[b] >= 0) {
                if ((val[a] ^ val[b]) != p.need[t]) return true;  // term broken, pattern dead
            } else {
                for (int x : {a, b})
                    if (val[x] < 0) {
                        if (unknown_var < 0 || unknown_var == x)
                            unknown_var = x;
                        else
                            dup_unknown = true;
                    }
            }
        }
        if (dup_unknown) return true;  // two unknown vertices: nothing to do yet
        if (unknown_var < 0) return false;  // fully matched: forbidden pattern realized
        // single unknown vertex: see which of its values keep all terms matched
        bool matched[2];
        for (int b = 0; b < 2; b++) {
            val[unknown_var] = static_cast<std::int8_t>(b);
            matched[b] = true;
            for (int t = 0; t < 3; t++) {
                int x = p.v[t], y = p.v[t + 1];
                if ((val[x] ^ val[y]) != p.need[t]) {
                    matched[b] = false;
                    break;
                }
            }
        }
        val[unknown_var] = -1;
        if (matched[0] && matched[1]) return false;  // both values realize the pattern
        if (matched[0]) return assign(unknown_var, 1);
        if (matched[1]) return assign(unknown_var, 0);
        return true;
    }

    bool assign(int v, int b) {
        if (val[v] >= 0) return val[v] == b;
        val[v] = static_cast<std::int8_t>(b);
        trail.push_back(v);
        for (int idx : patterns_at[v])
            if (!recheck(idx)) return false;
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            val[trail.back()] = -1;
            trail.pop_back();
        }
    }

    bool dfs(size_t pos) {
        while (pos < order.size() && val[order[pos]] >= 0) pos++;
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int b = 0; b < 2; b++) {
            if (is_anchor[v] && b == 1) break;  // component sign symmetry
            size_t mark = trail.size();
            if (assign(v, b) && dfs(pos + 1)) return true;
            undo_to(mark);
        }
        return false;
    }
};

}  // namespace

HomVerdict hom_C4(const SignedGraph& g) {
    GirthVector gv = girth_vector(g);
    GirthVector target = girth_vector_c_minus(4);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            if (gv.at(i, j) < target.at(i, j)) {
                HomVerdict out;
                out.kind = HomVerdict::Kind::nohom_girth;
                out.girth_i = i;
                out.girth_j = j;
                return out;
            }
    // bipartite from here on (an odd cycle would have tripped g01 or g11)
    C4Search s(g);
    s.val.assign(g.n, -1);
    Adjacency adj = adjacency(g);
    for (const Edge& e : g.edges) {
        for (auto [w, sw] : adj.at[e.u]) {
            if (w == e.v) continue;
            for (auto [z, sz] : adj.at[e.v]) {
                if (z == e.u) continue;
                Pattern p;
                p.v = {w, e.u, e.v, z};
                p.need = {static_cast<std::uint8_t>(sw == Sign::pos),
                          static_cast<std::uint8_t>(e.s == Sign::neg),
                          static_cast<std::uint8_t>(sz == Sign::pos)};
                s.patterns.push_back(p);
            }
        }
    }
    s.patterns_at.assign(g.n, {});
    for (int i = 0; i < static_cast<int>(s.patterns.size()); i++) {
        const Pattern& p = s.patterns[i];
        for (int t = 0; t < 4; t++) {
            bool seen = false;
            for (int t2 = 0; t2 < t; t2++) seen |= p.v[t2] == p.v[t];
            if (!seen) s.patterns_at[p.v[t]].push_back(i);
        }
    }
    std::vector<int> deg = degrees(g.n, g.edges);
    s.order.resize(g.n);
    for (int v = 0; v < g.n; v++) s.order[v] = v;
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    s.is_anchor.assign(g.n, 0);
    {
        std::vector<int> comp(g.n, -1);
        auto comps = connected_components(g.n, g.edges);
        for (int c = 0; c < static_cast<int>(comps.size()); c++)
            for (int v : comps[c]) comp[v] = c;
        std::vector<char> seen(comps.size(), 0);
        for (int v : s.order)
            if (!seen[comp[v]]) {
                seen[comp[v]] = 1;
                s.is_anchor[v] = 1;
            }
    }
    if (!s.dfs(0)) {
        HomVerdict out;
        out.kind = HomVerdict::Kind::nohom_exhausted;
        return out;
    }
    SwitchSet x;
    for (int v = 0; v < g.n; v++)
        if (s.val[v] == 1) x.push_back(v);
    HomVerdict leaf = sp_hom_C4(switch_graph(g, x));
    if (!leaf.mapped())
        throw GraphError(Err::internal_assertion, "clean leaf rejected by sp_hom_C4");
    HomVerdict out;
    out.kind = HomVerdict::Kind::mapped;
    out.hom = Homomorphism{std::move(x), std::move(leaf.hom->map)};
    if (!verify_hom(g, c_minus_4(), *out.hom))
        throw GraphError(Err::internal_assertion, "hom_C4 certificate failed re-verification");
    return out;
}

namespace {

struct CspSearch {
    int gn, hn;
    long long budget, nodes = 0;
    std::vector<std::vector<std::pair<int, Sign>>> nbrs;
    // mask[sign index][value of u] = allowed values of v across an edge uv
    std::array<std::vector<std::uint64_t>, 2> mask;
    std::vector<std::uint64_t> dom;
    std::vector<char> assigned;
    std::vector<int> deg;

    static int sign_index(Sign s) { return s == Sign::neg ? 1 : 0; }

    // arc-consistency worklist: whenever a domain shrinks, re-check its
    // neighbors.  Long induced paths collapse here instead of in the search.
    // Overwritten domains go on the trail; returns false on a wipeout.
    bool propagate(std::vector<int>& queue, std::vector<std::pair<int, std::uint64_t>>* trail) {
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (auto [w, s] : nbrs[u]) {
                const std::uint64_t* supports = mask[sign_index(s)].data();
                std::uint64_t keep = 0, values = dom[w];
                while (values) {
                    int val = std::countr_zero(values);
                    values &= values - 1;
                    if (supports[val] & dom[u]) keep |= std::uint64_t(1) << val;
                }
                if (keep == dom[w]) continue;
                if (trail) trail->push_back({w, dom[w]});
                dom[w] = keep;
                if (keep == 0) {
                    queue.clear();
                    return false;
                }
                queue.push_back(w);
            }
        }
        return true;
    }

    bool dfs() {
        int best = -1, best_size = 0;
        for (int v = 0; v < gn; v++) {
            if (assigned[v]) continue;
            int size = std::popcount(dom[v]);
            if (best < 0 || size < best_size ||
                (size == best_size && (deg[v] > deg[best] || (deg[v] == deg[best] && v < best)))) {
                best = v;
                best_size = size;
            }
        }
        if (best < 0) return true;
        std::uint64_t values = dom[best];
        assigned[best] = 1;
        std::vector<int> queue;
        std::vector<std::pair<int, std::uint64_t>> trail;
        while (values) {
            int val = std::countr_zero(values);
            values &= values - 1;
            if (++nodes > budget)
                throw GraphError(Err::budget_exceeded, "hom_to_target node budget exhausted");
            trail.push_back({best, dom[best]});
            dom[best] = std::uint64_t(1) << val;
            queue.assign(1, best);
            if (propagate(queue, &trail) && dfs()) return true;
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) dom[it->first] = it->second;
            trail.clear();
        }
        assigned[best] = 0;
        return false;
    }
};

}  // namespace

HomVerdict hom_to_target(const SignedGraph& g, const SignedGraph& h, long long node_budget) {
    if (h.n == 0) throw GraphError(Err::bad_parameter, "empty homomorphism target");
    if (h.n > 32) throw GraphError(Err::cap_exceeded, "hom_to_target handles targets with n <= 32");
    CspSearch s;
    s.gn = g.n;
    s.hn = h.n;
    s.budget = node_budget;
    Adjacency adj = adjacency(g);
    s.nbrs = std::move(adj.at);
    s.deg = degrees(g.n, g.edges);
    // value = target_vertex * 2 + switch_bit
    for (int si = 0; si < 2; si++) s.mask[si].assign(2 * h.n, 0);
    for (const Edge& e : h.edges) {
        for (int su = 0; su < 2; su++) {
            for (int si = 0; si < 2; si++) {
                Sign edge_sign = si == 0 ? Sign::pos : Sign::neg;
                // mapped sign = edge_sign flipped iff su != sv; must equal e.s
                int sv = su ^ (edge_sign == e.s ? 0 : 1);
                s.mask[si][e.u * 2 + su] |= std::uint64_t(1) << (e.v * 2 + sv);
                s.mask[si][e.v * 2 + su] |= std::uint64_t(1) << (e.u * 2 + sv);
            }
        }
    }
    std::uint64_t full = (2 * h.n == 64) ? ~std::uint64_t(0)
                                         : ((std::uint64_t(1) << (2 * h.n)) - 1);
    std::uint64_t even_bits = 0;
    for (int t = 0; t < h.n; t++) even_bits |= std::uint64_t(1) << (t * 2);
    s.dom.assign(g.n, full);
    for (const auto& comp : connected_components(g.n, g.edges))
        s.dom[comp.front()] &= even_bits;  // per-component (phi1,phi2) ~ (-phi1,phi2)
    s.assigned.assign(g.n, 0);
    std::vector<int> seed(g.n);
    for (int v = 0; v < g.n; v++) seed[v] = v;
    bool feasible = s.propagate(seed, nullptr) && s.dfs();
    if (!feasible) {
        HomVerdict out;
        out.kind = HomVerdict::Kind::nohom_exhausted;
        return out;
    }
    Homomorphism phi;
    phi.map.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        int value = std::countr_zero(s.dom[v]);
        phi.map[v] = value >> 1;
        if (value & 1) phi.switch_set.push_back(v);
    }
    if (!verify_hom(g, h, phi))
        throw GraphError(Err::internal_assertion, "hom_to_target certificate failed");
    HomVerdict out;
    out.kind = HomVerdict::Kind::mapped;
    out.hom = std::move(phi);
    return out;
}

}  // namespace sgc4
