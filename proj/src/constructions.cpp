#include "sgc4/constructions.hpp"

#include <algorithm>

#include "sgc4/criticality.hpp"
#include "sgc4/homomorphism.hpp"

namespace sgc4 {

namespace {

SignedGraph from_lists(int n, const std::vector<std::pair<int, int>>& pos,
                       const std::vector<std::pair<int, int>>& neg) {
    std::vector<Edge> edges;
    for (auto [u, v] : pos) edges.push_back({u, v, Sign::pos});
    for (auto [u, v] : neg) edges.push_back({u, v, Sign::neg});
    return make_signed_graph(n, std::move(edges));
}

SignedGraph gamma_graph() {
    // K4 on a,b,c,d (0..3) with ab subdivided by p=4 and cd by q=5;
    // negative edges pb and qd
    return from_lists(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 5}}, {{1, 4}, {3, 5}});
}

SignedGraph what_graph() {
    // x1..x4 = 0..3, y1..y3 = 4..6
    return from_lists(7, {{0, 4}, {0, 5}, {0, 6}, {1, 5}, {2, 6}, {3, 4}},
                      {{1, 4}, {2, 5}, {3, 6}});
}

SignedGraph omega1_graph() {
    // x0..x4 = 0..4, y0..y3 = 5..8; what with edge x1y3 subdivided twice
    return from_lists(
        9, {{0, 5}, {1, 5}, {1, 6}, {1, 7}, {2, 6}, {3, 7}, {3, 8}, {4, 6}, {4, 8}},
        {{2, 7}, {0, 8}});
}

SignedGraph omega2_graph() {
    // x0..x4 = 0..4, y0..y3 = 5..8; what with edge x4y1 subdivided twice
    return from_lists(
        9, {{0, 5}, {0, 6}, {1, 6}, {1, 8}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}},
        {{4, 5}, {1, 7}});
}

SignedGraph theta1_graph() {
    // all-positive theta of three 2-paths between 2 and 4
    return from_lists(5, {{1, 2}, {1, 4}, {2, 3}, {3, 4}, {0, 2}, {0, 4}}, {});
}

SignedGraph theta2_graph() {
    // all-positive 6-cycle 0..5 plus the chord 2-5
    return from_lists(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {2, 5}}, {});
}

SignedGraph dual_path_graph() {
    return from_lists(4, {{1, 2}}, {{0, 1}, {2, 3}});
}

SignedGraph g2k1_graph(int k) {
    if (k < 1) throw GraphError(Err::bad_parameter, "g2k1 needs k >= 1");
    return t_subdivide(tilde(cycle_graph(2 * k + 1, false)), 2);
}

SignedGraph gprime2k1_graph(int k) {
    SignedGraph g = g2k1_graph(k);
    // identify the smallest pair of degree-2 vertices at distance 2 whose
    // incident edges are all positive (the common neighbor is then adjacent
    // to both with positive edges, matching the intended picture)
    std::vector<int> deg = degrees(g.n, g.edges);
    std::vector<char> all_pos(g.n, 1);
    for (const Edge& e : g.edges)
        if (e.s == Sign::neg) all_pos[e.u] = all_pos[e.v] = 0;
    Adjacency adj = adjacency(g);
    std::vector<std::uint64_t> nbr(g.n, 0);
    for (const Edge& e : g.edges) {
        nbr[e.u] |= std::uint64_t(1) << e.v;
        nbr[e.v] |= std::uint64_t(1) << e.u;
    }
    for (int a = 0; a < g.n; a++) {
        if (deg[a] != 2 || !all_pos[a]) continue;
        for (int b = a + 1; b < g.n; b++) {
            if (deg[b] != 2 || !all_pos[b]) continue;
            if (nbr[a] & (std::uint64_t(1) << b)) continue;
            if (!(nbr[a] & nbr[b])) continue;
            return identify(g, a, b);
        }
    }
    throw GraphError(Err::internal_assertion, "no identifiable degree-2 pair in g2k1");
}

}  // namespace

GalleryId parse_gallery_id(const std::string& text) {
    auto with_param = [&](const std::string& prefix, GalleryId::Tag tag) -> std::optional<GalleryId> {
        if (text.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string rest = text.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw GraphError(Err::bad_parameter, "bad gallery parameter in '" + text + "'");
        return GalleryId{tag, std::stoi(rest)};
    };
    if (text == "gamma") return {GalleryId::Tag::gamma};
    if (text == "what") return {GalleryId::Tag::what};
    if (text == "omega1") return {GalleryId::Tag::omega1};
    if (text == "omega2") return {GalleryId::Tag::omega2};
    if (text == "theta1") return {GalleryId::Tag::theta1};
    if (text == "theta2") return {GalleryId::Tag::theta2};
    if (text == "dualpath") return {GalleryId::Tag::dual_path};
    if (auto id = with_param("cminus:", GalleryId::Tag::c_minus)) return *id;
    if (auto id = with_param("cplus:", GalleryId::Tag::c_plus)) return *id;
    if (auto id = with_param("g2k1:", GalleryId::Tag::g2k1)) return *id;
    if (auto id = with_param("gprime:", GalleryId::Tag::gprime2k1)) return *id;
    throw GraphError(Err::bad_parameter, "unknown gallery id '" + text + "'");
}

std::string gallery_id_string(const GalleryId& id) {
    switch (id.tag) {
        case GalleryId::Tag::c_minus: return "cminus:" + std::to_string(id.param);
        case GalleryId::Tag::c_plus: return "cplus:" + std::to_string(id.param);
        case GalleryId::Tag::gamma: return "gamma";
        case GalleryId::Tag::what: return "what";
        case GalleryId::Tag::omega1: return "omega1";
        case GalleryId::Tag::omega2: return "omega2";
        case GalleryId::Tag::theta1: return "theta1";
        case GalleryId::Tag::theta2: return "theta2";
        case GalleryId::Tag::dual_path: return "dualpath";
        case GalleryId::Tag::g2k1: return "g2k1:" + std::to_string(id.param);
        case GalleryId::Tag::gprime2k1: return "gprime:" + std::to_string(id.param);
    }
    throw GraphError(Err::bad_parameter, "bad gallery tag");
}

SignedGraph gallery(const GalleryId& id) {
    switch (id.tag) {
        case GalleryId::Tag::c_minus:
        case GalleryId::Tag::c_plus:
            // a 2-cycle would be a digon, not a simple graph
            if (id.param < 4 || id.param % 2 != 0)
                throw GraphError(Err::bad_parameter, "C+-l needs even l >= 4");
            return cycle_graph(id.param, id.tag == GalleryId::Tag::c_minus);
        case GalleryId::Tag::gamma: return gamma_graph();
        case GalleryId::Tag::what: return what_graph();
        case GalleryId::Tag::omega1: return omega1_graph();
        case GalleryId::Tag::omega2: return omega2_graph();
        case GalleryId::Tag::theta1: return theta1_graph();
        case GalleryId::Tag::theta2: return theta2_graph();
        case GalleryId::Tag::dual_path: return dual_path_graph();
        case GalleryId::Tag::g2k1: return g2k1_graph(id.param);
        case GalleryId::Tag::gprime2k1: return gprime2k1_graph(id.param);
    }
    throw GraphError(Err::bad_parameter, "bad gallery tag");
}

namespace {

SignedGraph t_subdivide_impl(int n, const std::vector<Edge>& edges, int l, bool multi) {
    if (l < 1) throw GraphError(Err::bad_parameter, "t_subdivide needs l >= 1");
    if (l == 1 && multi)
        throw GraphError(Err::simplicity_violated,
                         "l = 1 on a multigraph keeps parallel edges");
    std::vector<Edge> out;
    int next = n;
    for (const Edge& e : edges) {
        Sign first = flipped(e.s);  // path sign must be -sign(uv)
        if (l == 1) {
            out.push_back({e.u, e.v, first});
            continue;
        }
        int prev = e.u;  // e.u = min(u,v) in canonical storage
        for (int i = 0; i < l - 1; i++) {
            out.push_back({prev, next, i == 0 ? first : Sign::pos});
            prev = next++;
        }
        out.push_back({prev, e.v, Sign::pos});
    }
    return make_signed_graph(next, std::move(out));
}

}  // namespace

SignedGraph t_subdivide(const SignedGraph& g, int l) {
    return t_subdivide_impl(g.n, g.edges, l, false);
}

SignedGraph t_subdivide(const SignedMultiGraph& g, int l) {
    return t_subdivide_impl(g.n, g.edges, l, true);
}

SignedMultiGraph tilde(const SignedGraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges) {
        edges.push_back({e.u, e.v, Sign::pos});
        edges.push_back({e.u, e.v, Sign::neg});
    }
    return make_signed_multigraph(g.n, std::move(edges));
}

SignedGraph p2_extend(const SignedGraph& g, int a, int b, Sign s1, Sign s2) {
    check_vertex(g, a, "p2_extend");
    check_vertex(g, b, "p2_extend");
    if (a == b) throw GraphError(Err::precondition_failed, "p2_extend needs a != b");
    SignedGraph h = g;
    h.n = g.n + 1;
    h.edges.push_back({a, g.n, s1});
    h.edges.push_back({b, g.n, s2});
    return make_signed_graph(h.n, std::move(h.edges));
}

SignedGraph identify(const SignedGraph& g, int a, int b) {
    check_vertex(g, a, "identify");
    check_vertex(g, b, "identify");
    if (a == b) throw GraphError(Err::precondition_failed, "identify needs a != b");
    if (a > b) std::swap(a, b);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges) {
        int u = e.u == b ? a : e.u, v = e.v == b ? a : e.v;
        if (u == v)
            throw GraphError(Err::precondition_failed, "identify needs nonadjacent vertices");
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, e.s});
    }
    std::sort(edges.begin(), edges.end(), edge_less);
    std::vector<Edge> merged;
    for (const Edge& e : edges) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            if (merged.back().s != e.s)
                throw GraphError(Err::creates_negative_digon,
                                 "identification leaves an opposite-sign parallel pair");
            continue;  // same-sign parallel pair collapses
        }
        merged.push_back(e);
    }
    // b is isolated now; drop it and compress ids
    for (Edge& e : merged) {
        if (e.u > b) e.u--;
        if (e.v > b) e.v--;
    }
    return make_signed_graph(g.n - 1, std::move(merged));
}

namespace {

// the degree-2 vertex deleted, its graph switched so the 2-path through it is
// negative, plus the neighbor pair (low, high)
struct SplicedHalf {
    SignedGraph switched;  // still contains w
    int w, low, high;
};

SplicedHalf splice_prepare(const SignedGraph& g, int w, bool check_critical) {
    check_vertex(g, w, "splice_F");
    std::vector<int> nbrs;
    Sign s_low = Sign::pos, s_high = Sign::pos;
    for (const Edge& e : g.edges) {
        if (e.u == w) nbrs.push_back(e.v);
        else if (e.v == w) nbrs.push_back(e.u);
    }
    if (nbrs.size() != 2)
        throw GraphError(Err::precondition_failed, "splice_F needs a degree-2 vertex");
    if (check_critical && !is_critical_C4(g).critical())
        throw GraphError(Err::precondition_failed, "splice_F input is not critical");
    std::sort(nbrs.begin(), nbrs.end());
    SignedGraph gm = remove_vertex(g, w);
    HomVerdict hv = hom_C4(gm);
    if (!hv.mapped())
        throw GraphError(Err::precondition_failed,
                         "splice_F: removing the degree-2 vertex leaves an unmappable graph "
                         "(input cannot be critical)");
    SwitchSet x;
    for (int v : hv.hom->switch_set) x.push_back(v < w ? v : v + 1);
    SignedGraph switched = switch_graph(g, x);
    for (const Edge& e : switched.edges) {
        if (e.u == w || e.v == w) {
            int other = e.u == w ? e.v : e.u;
            (other == nbrs[0] ? s_low : s_high) = e.s;
        }
    }
    if (s_low * s_high != Sign::neg)
        throw GraphError(Err::internal_assertion,
                         "splice_F: 2-path not negative after the hom's switching (either a "
                         "solver bug or a non-critical input with checking disabled)");
    return {std::move(switched), w, nbrs[0], nbrs[1]};
}

}  // namespace

SignedGraph splice_F(const SignedGraph& g1, int u, const SignedGraph& g2, int v,
                     bool check_critical) {
    SplicedHalf h1 = splice_prepare(g1, u, check_critical);
    SplicedHalf h2 = splice_prepare(g2, v, check_critical);
    SignedGraph a = remove_vertex(h1.switched, h1.w);
    SignedGraph b = remove_vertex(h2.switched, h2.w);
    auto shift = [](int x, int w) { return x < w ? x : x - 1; };
    int a_low = shift(h1.low, h1.w), a_high = shift(h1.high, h1.w);
    int b_low = shift(h2.low, h2.w), b_high = shift(h2.high, h2.w);
    std::vector<Edge> edges = a.edges;
    for (const Edge& e : b.edges) edges.push_back({e.u + a.n, e.v + a.n, e.s});
    edges.push_back({a_low, b_low + a.n, Sign::pos});
    edges.push_back({a_high, b_high + a.n, Sign::neg});
    return make_signed_graph(a.n + b.n, std::move(edges));
}

SignedGraph hajos_H(const SignedGraph& g1, std::pair<int, int> e1, const SignedGraph& g2,
                    std::pair<int, int> e2, bool check_critical) {
    auto find_edge = [](const SignedGraph& g, std::pair<int, int> ends, Sign want,
                        const char* which) {
        check_vertex(g, ends.first, "hajos_H");
        check_vertex(g, ends.second, "hajos_H");
        for (const Edge& e : g.edges) {
            if ((e.u == ends.first && e.v == ends.second) ||
                (e.u == ends.second && e.v == ends.first)) {
                if (e.s != want)
                    throw GraphError(Err::precondition_failed,
                                     std::string("hajos_H: ") + which + " has the wrong sign");
                return;
            }
        }
        throw GraphError(Err::precondition_failed,
                         std::string("hajos_H: ") + which + " is not an edge");
    };
    find_edge(g1, e1, Sign::pos, "e1");
    find_edge(g2, e2, Sign::neg, "e2");
    if (check_critical &&
        (!is_critical_C4(g1).critical() || !is_critical_C4(g2).critical()))
        throw GraphError(Err::precondition_failed, "hajos_H inputs must be critical");
    // g2's a2 lands on a1, b2 on b1, the rest get fresh ids after g1's block
    auto [a1, b1] = e1;
    auto [a2, b2] = e2;
    std::vector<int> relabel(g2.n, -1);
    relabel[a2] = a1;
    relabel[b2] = b1;
    int next = g1.n;
    for (int v = 0; v < g2.n; v++)
        if (relabel[v] < 0) relabel[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g1.edges)
        if (!((e.u == std::min(a1, b1) && e.v == std::max(a1, b1)))) edges.push_back(e);
    for (const Edge& e : g2.edges) {
        if ((e.u == std::min(a2, b2) && e.v == std::max(a2, b2))) continue;
        edges.push_back({relabel[e.u], relabel[e.v], e.s});
    }
    return make_signed_graph(next, std::move(edges));
}

namespace {

std::pair<int, int> first_edge_with_sign(const SignedGraph& g, Sign s) {
    for (const Edge& e : g.edges)
        if (e.s == s) return {e.u, e.v};
    throw GraphError(Err::precondition_failed, "no edge of the requested sign");
}

}  // namespace

SignedGraph build_critical(int n) {
    if (n < 9) throw GraphError(Err::bad_parameter, "build_critical needs n >= 9");
    // tight families first: they keep the edge count at the lower end of the
    // window, which a pure Hajos recursion from the 9..12 bases cannot do
    if (n % 6 == 3) return gallery(GalleryId::Tag::g2k1, (n - 3) / 6);
    if (n % 6 == 2 && n >= 14) return gallery(GalleryId::Tag::gprime2k1, (n - 2) / 6);
    SignedGraph gamma = gallery(GalleryId::Tag::gamma);
    std::pair<int, int> gamma_neg = first_edge_with_sign(gamma, Sign::neg);
    if (n == 10)
        return hajos_H(gamma, first_edge_with_sign(gamma, Sign::pos), gamma, gamma_neg, false);
    if (n == 11) {
        SignedGraph what = gallery(GalleryId::Tag::what);
        return hajos_H(gamma, first_edge_with_sign(gamma, Sign::pos), what,
                       first_edge_with_sign(what, Sign::neg), false);
    }
    if (n == 12) {
        SignedGraph what = gallery(GalleryId::Tag::what);
        return splice_F(what, 1, what, 1, false);  // vertex 1 = the degree-2 x2
    }
    SignedGraph smaller = build_critical(n - 4);
    return hajos_H(smaller, first_edge_with_sign(smaller, Sign::pos), gamma, gamma_neg, false);
}

}  // namespace sgc4
