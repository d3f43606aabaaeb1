#include "sgc4/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "sgc4/canonical.hpp"
#include "sgc4/criticality.hpp"
#include "sgc4/io.hpp"

namespace sgc4 {

namespace {

using Code = std::vector<std::uint64_t>;
using PairList = std::vector<std::pair<int, int>>;

bool pairs_bipartite(int n, const PairList& edges) {
    std::vector<Edge> tmp;
    tmp.reserve(edges.size());
    for (auto [u, v] : edges) tmp.push_back({u, v, Sign::pos});
    SignedGraph g;
    g.n = n;
    g.edges = std::move(tmp);
    return bipartition(g).has_value();
}

bool pairs_connected(int n, const PairList& edges) {
    std::vector<Edge> tmp;
    for (auto [u, v] : edges) tmp.push_back({u, v, Sign::pos});
    return connected_components(n, tmp).size() <= 1;
}

// all isomorphism classes of simple graphs of order n, grown one vertex at a
// time; every n-graph contains an (n-1)-graph as an induced subgraph, so
// augmenting every class with every attachment set reaches everything
std::map<Code, PairList> graph_classes_all(int n, bool bipartite_only) {
    std::map<Code, PairList> level;
    level[canonical_form(1, {}).code] = {};
    for (int k = 1; k < n; k++) {
        std::map<Code, PairList> next;
        for (const auto& [code, edges] : level) {
            (void)code;
            for (unsigned mask = 0; mask < (1u << k); mask++) {
                PairList grown = edges;
                for (int v = 0; v < k; v++)
                    if (mask & (1u << v)) grown.push_back({v, k});
                if (bipartite_only && !pairs_bipartite(k + 1, grown)) continue;
                Canon c = canonical_form(k + 1, grown);
                next.emplace(std::move(c.code), std::move(grown));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::vector<SignedGraph> connected_graph_classes(int n, bool bipartite_only) {
    if (n < 1) throw GraphError(Err::bad_parameter, "graph classes need n >= 1");
    std::vector<SignedGraph> out;
    for (const auto& [code, edges] : graph_classes_all(n, bipartite_only)) {
        (void)code;
        if (!pairs_connected(n, edges)) continue;
        std::vector<Edge> signed_edges;
        for (auto [u, v] : edges) signed_edges.push_back({u, v, Sign::pos});
        out.push_back(make_signed_graph(n, std::move(signed_edges)));
    }
    return out;
}

namespace {

// star[v] = bitmask of edge indices incident to v
std::vector<std::uint32_t> star_masks(const SignedGraph& g) {
    std::vector<std::uint32_t> star(g.n, 0);
    for (std::size_t i = 0; i < g.edges.size(); i++) {
        star[g.edges[i].u] |= std::uint32_t(1) << i;
        star[g.edges[i].v] |= std::uint32_t(1) << i;
    }
    return star;
}

// signature masks of all switchings: xor of stars over subsets avoiding vertex 0
std::vector<std::uint32_t> cut_masks(const SignedGraph& g) {
    const std::vector<std::uint32_t> star = star_masks(g);
    std::vector<std::uint32_t> cuts(std::size_t(1) << (g.n - 1), 0);
    for (std::size_t s = 1; s < cuts.size(); s++) {
        int low = std::countr_zero(s);
        cuts[s] = cuts[s & (s - 1)] ^ star[low + 1];
    }
    return cuts;
}

// how each automorphism permutes edge indices
std::vector<std::vector<int>> edge_perms(const SignedGraph& g,
                                         const std::vector<std::vector<int>>& auts) {
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < g.edges.size(); i++)
        index[{g.edges[i].u, g.edges[i].v}] = static_cast<int>(i);
    std::vector<std::vector<int>> perms;
    for (const std::vector<int>& a : auts) {
        std::vector<int> p(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); i++) {
            int u = a[g.edges[i].u], v = a[g.edges[i].v];
            if (u > v) std::swap(u, v);
            auto it = index.find({u, v});
            if (it == index.end())
                throw GraphError(Err::internal_assertion, "automorphism is not an automorphism");
            p[i] = it->second;
        }
        perms.push_back(std::move(p));
    }
    return perms;
}

std::uint32_t apply_edge_perm(const std::vector<int>& p, std::uint32_t sig) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < p.size(); i++)
        if (sig & (std::uint32_t(1) << i)) out |= std::uint32_t(1) << p[i];
    return out;
}

SignedGraph with_signature(const SignedGraph& g, std::uint32_t sig) {
    SignedGraph out = g;
    for (std::size_t i = 0; i < out.edges.size(); i++)
        out.edges[i].s = (sig & (std::uint32_t(1) << i)) ? Sign::neg : Sign::pos;
    return out;
}

bool passes_underlying_filters(const SignedGraph& g) {
    for (int d : degrees(g.n, g.edges))
        if (d < 2) return false;
    for (const StructuralViolation& v : structural_check(g))
        if (v.kind == StructuralViolationKind::not_two_connected ||
            v.kind == StructuralViolationKind::three_thread)
            return false;
    return true;
}

int order_cap(const CensusOptions& opt) { return opt.allow_big ? 9 : 8; }

}  // namespace

void for_each_candidate(int n, const CensusOptions& opt,
                        const std::function<void(const SignedGraph&)>& fn) {
    if (n < 1) throw GraphError(Err::bad_parameter, "census needs n >= 1");
    if (n > order_cap(opt))
        throw GraphError(Err::cap_exceeded,
                         "census capped at order " + std::to_string(order_cap(opt)));
    for (const SignedGraph& base : connected_graph_classes(n, true)) {
        if (opt.apply_filters && !passes_underlying_filters(base)) continue;
        if (base.edges.size() > 30)
            throw GraphError(Err::cap_exceeded, "too many edges for signature masks");
        const std::vector<std::uint32_t> cuts = n > 1 ? cut_masks(base)
                                                      : std::vector<std::uint32_t>{0};
        const std::vector<std::vector<int>> perms =
            edge_perms(base, canonical_form(base).automorphisms);
        const std::uint32_t sig_count = std::uint32_t(1) << base.edges.size();
        std::vector<char> seen(sig_count, 0);
        for (std::uint32_t sig = 0; sig < sig_count; sig++) {
            if (seen[sig]) continue;
            // ascending scan makes the seed the minimum of its orbit
            for (const std::vector<int>& p : perms) {
                std::uint32_t moved = apply_edge_perm(p, sig);
                for (std::uint32_t cut : cuts) seen[moved ^ cut] = 1;
            }
            SignedGraph candidate = with_signature(base, sig);
            if (opt.apply_filters && !structural_check(candidate).empty()) continue;
            fn(candidate);
        }
    }
}

std::vector<SignedGraph> enumerate_candidates(int n, const CensusOptions& opt) {
    std::vector<SignedGraph> out;
    for_each_candidate(n, opt, [&](const SignedGraph& g) { out.push_back(g); });
    return out;
}

SignedGraph canonical_signed_form(const SignedGraph& g) {
    Canon c = canonical_form(g);
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges) {
        int u = c.labeling[e.u], v = c.labeling[e.v];
        if (u > v) std::swap(u, v);
        relabeled.push_back({u, v, e.s});
    }
    std::sort(relabeled.begin(), relabeled.end(), edge_less);
    SignedGraph h = make_signed_graph(g.n, std::move(relabeled));
    if (h.n <= 1 || h.edges.empty()) return h;
    std::uint32_t sig = 0;
    for (std::size_t i = 0; i < h.edges.size(); i++)
        if (h.edges[i].s == Sign::neg) sig |= std::uint32_t(1) << i;
    if (h.edges.size() > 30)
        throw GraphError(Err::cap_exceeded, "too many edges for signature masks");
    const std::vector<std::uint32_t> cuts = cut_masks(h);
    const std::vector<std::vector<int>> perms = edge_perms(h, canonical_form(h).automorphisms);
    std::uint32_t best = ~std::uint32_t(0);
    for (const std::vector<int>& p : perms) {
        std::uint32_t moved = apply_edge_perm(p, sig);
        for (std::uint32_t cut : cuts) best = std::min(best, moved ^ cut);
    }
    return with_signature(h, best);
}

CensusReport run_census(int n, const CensusOptions& opt) {
    CensusReport report;
    report.n = n;
    std::vector<SignedGraph> candidates = enumerate_candidates(n, opt);
    report.classes_examined = static_cast<long long>(candidates.size());
    std::vector<char> critical(candidates.size(), 0);
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < candidates.size(); i++)
            critical[i] = is_critical_C4(candidates[i]).critical();
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= candidates.size()) return;
                    critical[i] = is_critical_C4(candidates[i]).critical();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    for (std::size_t i = 0; i < candidates.size(); i++) {
        if (!critical[i]) continue;
        CensusEntry entry;
        entry.graph = canonical_signed_form(candidates[i]);
        entry.edge_count = static_cast<int>(entry.graph.edges.size());
        entry.potential_value = potential(entry.graph);
        if (3 * entry.edge_count < 4 * n) report.exceptions.push_back(entry);
        report.critical_found.push_back(std::move(entry));
    }
    auto key = [](const CensusEntry& e) { return std::pair(e.edge_count, serialize(e.graph)); };
    std::sort(report.critical_found.begin(), report.critical_found.end(),
              [&](const CensusEntry& a, const CensusEntry& b) { return key(a) < key(b); });
    std::sort(report.exceptions.begin(), report.exceptions.end(),
              [&](const CensusEntry& a, const CensusEntry& b) { return key(a) < key(b); });
    return report;
}

}  // namespace sgc4
