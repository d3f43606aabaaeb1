#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sgc4/canonical.hpp"
#include "sgc4/constructions.hpp"
#include "sgc4/iso.hpp"

using namespace sgc4;
using namespace sgc4::test;

namespace {

SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges) edges.push_back({perm[e.u], perm[e.v], e.s});
    return make_signed_graph(g.n, std::move(edges));
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

SignedGraph random_switch(std::mt19937& rng, const SignedGraph& g) {
    SwitchSet x;
    for (int v = 0; v < g.n; v++)
        if (rng() & 1) x.push_back(v);
    return switch_graph(g, x);
}

}  // namespace

TEST_CASE("canonical code is a relabeling invariant and separates non-isomorphic graphs") {
    std::mt19937 rng(10001);
    for (int it = 0; it < 80; it++) {
        SignedGraph g = random_signed(rng, 1 + static_cast<int>(rng() % 8), 0.4);
        Canon a = canonical_form(g);
        Canon b = canonical_form(relabel(g, random_perm(rng, g.n)));
        CHECK(a.code == b.code);
    }
    // same degree sequence, different graphs
    SignedGraph c6 = cycle_graph(6, false);
    SignedGraph two_triangles = make_signed_graph(
        6, {{0, 1, Sign::pos}, {1, 2, Sign::pos}, {0, 2, Sign::pos},
            {3, 4, Sign::pos}, {4, 5, Sign::pos}, {3, 5, Sign::pos}});
    CHECK(canonical_form(c6).code != canonical_form(two_triangles).code);
}

TEST_CASE("automorphism groups have the textbook orders") {
    auto aut_count = [](const SignedGraph& g) {
        return canonical_form(g).automorphisms.size();
    };
    CHECK(aut_count(cycle_graph(4, false)) == 8);   // dihedral
    CHECK(aut_count(complete_graph(4)) == 24);
    CHECK(aut_count(make_signed_graph(3, {{0, 1, Sign::pos}, {1, 2, Sign::pos}})) == 2);
    SignedGraph k23 = make_signed_graph(
        5, {{0, 2, Sign::pos}, {0, 3, Sign::pos}, {0, 4, Sign::pos},
            {1, 2, Sign::pos}, {1, 3, Sign::pos}, {1, 4, Sign::pos}});
    CHECK(aut_count(k23) == 12);  // 2! x 3!
    std::vector<Edge> k44;
    for (int u = 0; u < 4; u++)
        for (int v = 4; v < 8; v++) k44.push_back({u, v, Sign::pos});
    CHECK(aut_count(make_signed_graph(8, std::move(k44))) == 1152);  // 2 x 4! x 4!

    // every reported automorphism really is one, and they are distinct
    SignedGraph g = cycle_graph(6, false);
    Canon c = canonical_form(g);
    std::set<std::vector<int>> seen;
    for (const std::vector<int>& a : c.automorphisms) {
        seen.insert(a);
        CHECK(relabel(g, a) == g);
    }
    CHECK(seen.size() == c.automorphisms.size());
}

TEST_CASE("switching isomorphism finds relabeled switchings and rejects sign classes") {
    std::mt19937 rng(10002);
    std::vector<SignedGraph> bases = {
        gallery(GalleryId::Tag::gamma), gallery(GalleryId::Tag::what),
        gallery(GalleryId::Tag::omega1), cycle_graph(6, true),
    };
    for (const SignedGraph& g : bases) {
        for (int it = 0; it < 10; it++) {
            SignedGraph h = random_switch(rng, relabel(g, random_perm(rng, g.n)));
            auto f = switching_isomorphic(g, h);
            REQUIRE(f.has_value());
            // pull h's signs back along f and compare as signatures on g
            std::vector<Edge> pulled;
            std::vector<std::vector<int>> hs(h.n, std::vector<int>(h.n, 0));
            for (const Edge& e : h.edges)
                hs[e.u][e.v] = hs[e.v][e.u] = e.s == Sign::neg ? -1 : 1;
            for (const Edge& e : g.edges) {
                REQUIRE(hs[(*f)[e.u]][(*f)[e.v]] != 0);
                pulled.push_back(
                    {e.u, e.v, hs[(*f)[e.u]][(*f)[e.v]] < 0 ? Sign::neg : Sign::pos});
            }
            CHECK(oracle_switching_equivalent(g, make_signed_graph(g.n, std::move(pulled))));
        }
    }
    // same underlying graph, inequivalent signatures
    CHECK_FALSE(switching_isomorphic(cycle_graph(6, true), cycle_graph(6, false)).has_value());
    CHECK_FALSE(switching_isomorphic(gallery(GalleryId::Tag::omega1),
                                     gallery(GalleryId::Tag::omega2))
                    .has_value());
    CHECK_FALSE(switching_isomorphic(cycle_graph(4, true),
                                     make_signed_graph(4, {{0, 1, Sign::pos},
                                                           {1, 2, Sign::pos},
                                                           {2, 3, Sign::pos},
                                                           {0, 3, Sign::pos}}))
                    .has_value());
}

TEST_CASE("switching isomorphism agrees with the permutation oracle") {
    std::mt19937 rng(10003);
    for (int it = 0; it < 120; it++) {
        int n = 2 + static_cast<int>(rng() % 5);
        SignedGraph a = random_signed(rng, n, 0.5);
        SignedGraph b;
        switch (it % 3) {
            case 0: b = random_switch(rng, relabel(a, random_perm(rng, n))); break;
            case 1: b = random_signed(rng, n, 0.5); break;
            default: {
                b = relabel(a, random_perm(rng, n));
                if (!b.edges.empty()) {
                    Edge& e = b.edges[rng() % b.edges.size()];
                    e.s = flipped(e.s);
                }
            }
        }
        CAPTURE(it);
        CHECK(switching_isomorphic(a, b).has_value() ==
              oracle_switching_isomorphic(a, b).has_value());
    }
}

TEST_CASE("switching subgraph search") {
    SignedGraph what = gallery(GalleryId::Tag::what);
    // a negative 4-cycle sits inside (the girth vector says so)
    auto found = find_switching_subgraph(what, cycle_graph(4, true));
    REQUIRE(found.has_value());
    // a positive 4-cycle does not: all three 4-cycles of this graph are negative
    CHECK_FALSE(find_switching_subgraph(what, cycle_graph(4, false)).has_value());

    // pattern larger than host
    CHECK_FALSE(find_switching_subgraph(cycle_graph(4, true), what).has_value());

    // random planted patterns
    std::mt19937 rng(10004);
    for (int it = 0; it < 40; it++) {
        SignedGraph host = random_signed(rng, 7, 0.5);
        if (host.edges.size() < 4) continue;
        // take a sub-edge-set as the pattern, relabel and switch it
        std::vector<Edge> sub;
        for (const Edge& e : host.edges)
            if (rng() & 1) sub.push_back(e);
        if (sub.empty()) continue;
        SignedGraph pattern = make_signed_graph(host.n, std::move(sub));
        pattern = random_switch(rng, relabel(pattern, random_perm(rng, pattern.n)));
        CHECK(find_switching_subgraph(host, pattern).has_value());
    }
}
