#include "sgc4/criticality.hpp"

#include <algorithm>

namespace sgc4 {

CriticalVerdict is_critical_C4(const SignedGraph& g) {
    GirthVector gv = girth_vector(g);
    GirthVector target = girth_vector_c_minus(4);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            if (gv.at(i, j) < target.at(i, j)) {
                CriticalVerdict out;
                out.kind = CriticalVerdict::Kind::fails_girth;
                out.girth_i = i;
                out.girth_j = j;
                return out;
            }
    HomVerdict whole = hom_C4(g);
    if (whole.mapped()) {
        CriticalVerdict out;
        out.kind = CriticalVerdict::Kind::maps_to_c4;
        out.hom = std::move(whole.hom);
        return out;
    }
    for (int i = 0; i < static_cast<int>(g.edges.size()); i++) {
        if (!hom_C4(remove_edge(g, i)).mapped()) {
            CriticalVerdict out;
            out.kind = CriticalVerdict::Kind::non_critical_edge;
            out.edge = g.edges[i];
            return out;
        }
    }
    return CriticalVerdict{};
}

std::string StructuralViolation::describe() const {
    std::string what;
    switch (kind) {
        case StructuralViolationKind::not_two_connected: what = "not 2-connected"; break;
        case StructuralViolationKind::three_thread: what = "3-thread"; break;
        case StructuralViolationKind::degree2_on_positive_c4:
            what = "degree-2 vertex on a positive 4-cycle";
            break;
    }
    what += " (";
    for (size_t i = 0; i < witness.size(); i++) {
        if (i) what += " ";
        what += std::to_string(witness[i]);
    }
    return what + ")";
}

namespace {

// articulation vertices, or a sentinel when the graph is disconnected/small
void two_connectivity(const SignedGraph& g, std::vector<StructuralViolation>& out) {
    if (g.n < 3 || !is_connected(g.n, g.edges)) {
        out.push_back({StructuralViolationKind::not_two_connected, {}});
        return;
    }
    Adjacency adj = adjacency(g);
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<char> cut(g.n, 0);
    int timer = 0;
    // iterative DFS from 0 (graph connected here)
    struct Frame {
        int v, parent;
        size_t next = 0;
        int children = 0;
    };
    std::vector<Frame> stack{{0, -1}};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj.at[f.v].size()) {
            int w = adj.at[f.v][f.next++].first;
            if (w == f.parent) continue;
            if (disc[w] >= 0) {
                low[f.v] = std::min(low[f.v], disc[w]);
                continue;
            }
            disc[w] = low[w] = timer++;
            f.children++;
            stack.push_back({w, f.v});
        } else {
            int v = f.v, parent = f.parent, children = f.children;
            stack.pop_back();
            if (parent < 0) {
                if (children >= 2) cut[v] = 1;
            } else {
                low[parent] = std::min(low[parent], low[v]);
                if (stack.size() > 1 && low[v] >= disc[parent]) cut[parent] = 1;
            }
        }
    }
    for (int v = 0; v < g.n; v++)
        if (cut[v]) out.push_back({StructuralViolationKind::not_two_connected, {v}});
}

}  // namespace

std::vector<StructuralViolation> structural_check(const SignedGraph& g) {
    std::vector<StructuralViolation> out;
    two_connectivity(g, out);
    std::vector<int> deg = degrees(g.n, g.edges);
    Adjacency adj = adjacency(g);
    // 3-thread: path a-b-c-d with deg(b) = deg(c) = 2
    for (const Edge& e : g.edges) {
        if (deg[e.u] != 2 || deg[e.v] != 2) continue;
        for (auto [a, s1] : adj.at[e.u]) {
            if (a == e.v) continue;
            for (auto [d, s2] : adj.at[e.v]) {
                (void)s1, (void)s2;
                if (d == e.u) continue;
                out.push_back({StructuralViolationKind::three_thread, {a, e.u, e.v, d}});
            }
        }
    }
    // degree-2 vertex on a positive 4-cycle a-b-c-d
    std::vector<std::int8_t> mat(static_cast<size_t>(g.n) * g.n, 0);
    for (const Edge& e : g.edges) {
        mat[static_cast<size_t>(e.u) * g.n + e.v] = static_cast<std::int8_t>(e.s);
        mat[static_cast<size_t>(e.v) * g.n + e.u] = static_cast<std::int8_t>(e.s);
    }
    auto at = [&](int x, int y) { return mat[static_cast<size_t>(x) * g.n + y]; };
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++) {
            if (!at(a, b)) continue;
            for (int c = a + 1; c < g.n; c++) {
                if (c == b || !at(b, c)) continue;
                for (int d = b + 1; d < g.n; d++) {
                    if (d == c || !at(c, d) || !at(d, a)) continue;
                    int sign_product = at(a, b) * at(b, c) * at(c, d) * at(d, a);
                    if (sign_product < 0) continue;
                    if (deg[a] == 2 || deg[b] == 2 || deg[c] == 2 || deg[d] == 2)
                        out.push_back(
                            {StructuralViolationKind::degree2_on_positive_c4, {a, b, c, d}});
                }
            }
        }
    return out;
}

std::vector<int> degree3_with_two_degree2_neighbors(const SignedGraph& g) {
    std::vector<int> deg = degrees(g.n, g.edges);
    Adjacency adj = adjacency(g);
    std::vector<int> out;
    for (int v = 0; v < g.n; v++) {
        if (deg[v] != 3) continue;
        int low = 0;
        for (auto [w, s] : adj.at[v]) {
            (void)s;
            if (deg[w] == 2) low++;
        }
        if (low >= 2) out.push_back(v);
    }
    return out;
}

}  // namespace sgc4
