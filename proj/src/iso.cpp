#include "sgc4/iso.hpp"

#include <algorithm>

#include "sgc4/canonical.hpp"

namespace sgc4 {

namespace {

// dense sign matrix: 0 = non-edge, otherwise the sign
std::vector<std::int8_t> sign_matrix(const SignedGraph& g) {
    std::vector<std::int8_t> m(static_cast<size_t>(g.n) * g.n, 0);
    for (const Edge& e : g.edges) {
        m[static_cast<size_t>(e.u) * g.n + e.v] = static_cast<std::int8_t>(e.s);
        m[static_cast<size_t>(e.v) * g.n + e.u] = static_cast<std::int8_t>(e.s);
    }
    return m;
}

bool pullback_equivalent(const SignedGraph& a, const SignedGraph& b,
                         const std::vector<std::int8_t>& bmat, const std::vector<int>& f) {
    // product of a's signature with the signature induced by f must be balanced
    SignedGraph prod = a;
    for (Edge& e : prod.edges) {
        std::int8_t s = bmat[static_cast<size_t>(f[e.u]) * b.n + f[e.v]];
        if (s == 0) throw GraphError(Err::internal_assertion, "map is not an isomorphism");
        e.s = e.s * static_cast<Sign>(s);
    }
    return is_balanced(prod).has_value();
}

}  // namespace

std::optional<std::vector<int>> switching_isomorphic(const SignedGraph& a, const SignedGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
    if (a.n == 0) return std::vector<int>{};
    Canon ca = canonical_form(a), cb = canonical_form(b);
    if (ca.code != cb.code) return std::nullopt;
    std::vector<int> cb_inv(b.n);
    for (int v = 0; v < b.n; v++) cb_inv[cb.labeling[v]] = v;
    std::vector<std::int8_t> bmat = sign_matrix(b);
    // all isomorphisms a -> b factor as (canonical iso) after an automorphism of a
    for (const std::vector<int>& sigma : ca.automorphisms) {
        std::vector<int> f(a.n);
        for (int v = 0; v < a.n; v++) f[v] = cb_inv[ca.labeling[sigma[v]]];
        if (pullback_equivalent(a, b, bmat, f)) return f;
    }
    return std::nullopt;
}

namespace {

struct SubSearch {
    const SignedGraph& host;
    const SignedGraph& pattern;
    std::vector<std::int8_t> hmat, pmat;
    std::vector<int> hdeg, pdeg;
    std::vector<int> order;  // pattern vertices, connectivity-first
    std::vector<int> image;  // pattern -> host or -1
    std::vector<char> used;  // host vertex taken

    bool dfs(size_t pos) {
        if (pos == order.size())
            return pullback_equivalent(pattern, host, hmat, image);
        int p = order[pos];
        for (int h = 0; h < host.n; h++) {
            if (used[h] || hdeg[h] < pdeg[p]) continue;
            bool ok = true;
            for (size_t i = 0; i < pos && ok; i++) {
                int q = order[i];
                if (pmat[static_cast<size_t>(p) * pattern.n + q] != 0 &&
                    hmat[static_cast<size_t>(h) * host.n + image[q]] == 0)
                    ok = false;
            }
            if (!ok) continue;
            image[p] = h;
            used[h] = 1;
            if (dfs(pos + 1)) return true;
            image[p] = -1;
            used[h] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_switching_subgraph(const SignedGraph& host,
                                                        const SignedGraph& pattern) {
    if (pattern.n > host.n || pattern.edges.size() > host.edges.size()) return std::nullopt;
    if (pattern.n == 0) return std::vector<int>{};
    SubSearch s{host, pattern, sign_matrix(host), sign_matrix(pattern),
                degrees(host.n, host.edges), degrees(pattern.n, pattern.edges),
                {},   {},      {}};
    // highest-degree seed, then always a vertex with a mapped neighbor if any
    s.image.assign(pattern.n, -1);
    s.used.assign(host.n, 0);
    std::vector<char> chosen(pattern.n, 0);
    for (int step = 0; step < pattern.n; step++) {
        int best = -1;
        for (int v = 0; v < pattern.n; v++) {
            if (chosen[v]) continue;
            bool attached = false;
            for (int w : s.order)
                if (s.pmat[static_cast<size_t>(v) * pattern.n + w] != 0) attached = true;
            if (best < 0) {
                best = v;
            } else {
                bool best_attached = false;
                for (int w : s.order)
                    if (s.pmat[static_cast<size_t>(best) * pattern.n + w] != 0)
                        best_attached = true;
                if (attached != best_attached ? attached : s.pdeg[v] > s.pdeg[best]) best = v;
            }
        }
        chosen[best] = 1;
        s.order.push_back(best);
    }
    if (s.dfs(0)) return s.image;
    return std::nullopt;
}

}  // namespace sgc4
