#include "sgc4/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "sgc4/constructions.hpp"
#include "sgc4/homomorphism.hpp"

namespace sgc4 {

namespace {

// shared backtracking core: values 0..vals-1 per vertex, pairwise constraint
// given by allowed[s][a][b] for edge sign index s
struct ColorSearch {
    int n, vals;
    std::vector<std::vector<std::pair<int, Sign>>> adj;
    std::vector<char> allowed_pos, allowed_neg;  // vals*vals matrices
    std::vector<char> positive_start;            // restrict component roots
    int positive_below = 0;                      // values < this count as positive
    std::vector<int> order, val;

    bool ok(int v, int a) const {
        for (auto [w, s] : adj[v]) {
            if (val[w] < 0) continue;
            const std::vector<char>& m = s == Sign::pos ? allowed_pos : allowed_neg;
            if (!m[a * vals + val[w]]) return false;
        }
        return true;
    }

    bool dfs(std::size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        int limit = positive_start[v] ? positive_below : vals;
        for (int a = 0; a < limit; a++) {
            if (!ok(v, a)) continue;
            val[v] = a;
            if (dfs(i + 1)) return true;
            val[v] = -1;
        }
        return false;
    }
};

// components ordered so each non-root vertex appears after some neighbor,
// which keeps the backtracking connected
std::vector<int> connected_order(int n, const std::vector<std::vector<std::pair<int, Sign>>>& adj,
                                 std::vector<char>* roots) {
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::vector<int> deg(n);
    for (int v = 0; v < n; v++) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> by_deg(n);
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    for (int r : by_deg) {
        if (seen[r]) continue;
        if (roots) (*roots)[r] = 1;
        seen[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            int v = order[head++];
            for (auto [w, s] : adj[v]) {
                (void)s;
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

}  // namespace

std::optional<std::vector<int>> k_coloring(const SignedGraph& g, int k) {
    if (k < 1) throw GraphError(Err::bad_parameter, "k_coloring needs k >= 1");
    if (g.n == 0) return std::vector<int>{};
    ColorSearch s;
    s.n = g.n;
    s.vals = k;
    s.adj.assign(g.n, {});
    for (const Edge& e : g.edges) {
        s.adj[e.u].push_back({e.v, Sign::pos});
        s.adj[e.v].push_back({e.u, Sign::pos});
    }
    s.allowed_pos.assign(k * k, 1);
    for (int a = 0; a < k; a++) s.allowed_pos[a * k + a] = 0;
    s.allowed_neg = s.allowed_pos;  // signs ignored
    s.positive_start.assign(g.n, 0);
    s.positive_below = k;
    s.order = connected_order(g.n, s.adj, nullptr);
    s.val.assign(g.n, -1);
    if (!s.dfs(0)) return std::nullopt;
    return s.val;
}

namespace {

int decode_x2k(int a, int k) { return a < k ? a + 1 : -(a - k + 1); }

}  // namespace

std::optional<std::vector<int>> x2k_coloring(const SignedMultiGraph& g, int k) {
    if (k < 1) throw GraphError(Err::bad_parameter, "x2k_coloring needs k >= 1");
    if (g.n == 0) return std::vector<int>{};
    ColorSearch s;
    s.n = g.n;
    s.vals = 2 * k;
    s.adj.assign(g.n, {});
    for (const Edge& e : g.edges) {
        s.adj[e.u].push_back({e.v, e.s});
        s.adj[e.v].push_back({e.u, e.s});
    }
    s.allowed_pos.assign(4 * k * k, 0);
    s.allowed_neg.assign(4 * k * k, 0);
    for (int a = 0; a < 2 * k; a++)
        for (int b = 0; b < 2 * k; b++) {
            int ca = decode_x2k(a, k), cb = decode_x2k(b, k);
            s.allowed_pos[a * 2 * k + b] = ca != cb;
            s.allowed_neg[a * 2 * k + b] = ca != -cb;
        }
    s.positive_start.assign(g.n, 0);
    s.positive_below = k;  // values 0..k-1 decode to +1..+k
    s.order = connected_order(g.n, s.adj, &s.positive_start);
    s.val.assign(g.n, -1);
    if (!s.dfs(0)) return std::nullopt;
    std::vector<int> out(g.n);
    for (int v = 0; v < g.n; v++) out[v] = decode_x2k(s.val[v], k);
    return out;
}

std::optional<std::vector<int>> four_color_via_C4(const SignedGraph& g) {
    if (g.n == 0) return std::vector<int>{};
    SignedGraph all_pos = g;
    for (Edge& e : all_pos.edges) e.s = Sign::pos;
    SignedGraph t2 = t_subdivide(all_pos, 2);
    HomVerdict hv = hom_C4(t2);
    if (!hv.mapped()) return std::nullopt;
    // branch vertices keep their ids 0..n-1 inside t2; normalize each
    // component so they land on the side {0, 2} of C-4, using the rotation
    // rho = switch at {3} then relabel 0->1, 1->2, 2->3, 3->0
    static const int rot[4] = {1, 2, 3, 0};
    std::vector<char> in_switch(t2.n, 0);
    for (int v : hv.hom->switch_set) in_switch[v] = 1;
    std::vector<int> img = hv.hom->map;
    for (const std::vector<int>& comp : connected_components(t2.n, t2.edges)) {
        bool odd_side = false;
        for (int v : comp)
            if (v < g.n && img[v] % 2 == 1) odd_side = true;
        if (!odd_side) continue;
        for (int v : comp) {
            in_switch[v] = in_switch[v] ^ (img[v] == 3 ? 1 : 0);
            img[v] = rot[img[v]];
        }
    }
    Homomorphism rotated;
    rotated.map = img;
    for (int v = 0; v < t2.n; v++)
        if (in_switch[v]) rotated.switch_set.push_back(v);
    if (!verify_hom(t2, c_minus_4(), rotated))
        throw GraphError(Err::internal_assertion, "rotated homomorphism broke");
    std::vector<int> colors(g.n);
    for (int v = 0; v < g.n; v++) {
        if (img[v] % 2 != 0)
            throw GraphError(Err::internal_assertion, "branch vertex off the even side");
        colors[v] = (img[v] == 2 ? 2 : 0) + (in_switch[v] ? 1 : 0);
    }
    for (const Edge& e : g.edges)
        if (colors[e.u] == colors[e.v])
            throw GraphError(Err::internal_assertion, "decoded coloring is not proper");
    return colors;
}

}  // namespace sgc4
