#include "sgc4/canonical.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace sgc4 {

namespace {

struct Search {
    int n;
    std::vector<std::uint64_t> adj;  // neighbor bitmask per old vertex
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_label;      // old -> pos
    std::vector<int> best_inverse;    // pos -> old
    std::vector<std::vector<int>> auts;

    // Equitable refinement: repeatedly re-color by (color, sorted neighbor
    // color counts) until the number of classes stops growing.  Signatures
    // are label-independent, so the result commutes with isomorphism.
    void refine(std::vector<int>& color) const {
        int classes = *std::max_element(color.begin(), color.end()) + 1;
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; v++) {
                std::vector<int> counts(classes, 0);
                std::uint64_t nb = adj[v];
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    counts[color[w]]++;
                }
                counts.push_back(color[v]);  // old color dominates the order
                std::rotate(counts.begin(), counts.end() - 1, counts.end());
                sig[v] = {std::move(counts), v};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            int k = 0;
            std::vector<int> next(n);
            for (int i = 0; i < n; i++) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) k++;
                next[sorted[i].second] = k;
            }
            k++;
            if (k == classes) {
                color = std::move(next);
                return;
            }
            classes = k;
            color = std::move(next);
        }
    }

    std::vector<std::uint64_t> leaf_code(const std::vector<int>& label) const {
        std::vector<std::uint64_t> code(n, 0);
        for (int v = 0; v < n; v++) {
            std::uint64_t nb = adj[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                code[label[v]] |= std::uint64_t(1) << label[w];
            }
        }
        return code;
    }

    void dfs(std::vector<int> color) {
        refine(color);
        // first cell with two or more members
        int cell = -1;
        {
            std::vector<int> size(n, 0);
            for (int v = 0; v < n; v++) size[color[v]]++;
            for (int c = 0; c < n; c++)
                if (size[c] >= 2) {
                    cell = c;
                    break;
                }
        }
        if (cell < 0) {
            // discrete coloring: colors are exactly 0..n-1, a labeling
            std::vector<std::uint64_t> code = leaf_code(color);
            if (best_code.empty() || code < best_code) {
                best_code = code;
                best_label = color;
                best_inverse.assign(n, 0);
                for (int v = 0; v < n; v++) best_inverse[color[v]] = v;
                auts.assign(1, std::vector<int>(n));
                for (int v = 0; v < n; v++) auts[0][v] = v;
            } else if (code == best_code) {
                std::vector<int> sigma(n);
                for (int v = 0; v < n; v++) sigma[v] = best_inverse[color[v]];
                auts.push_back(std::move(sigma));
            }
            return;
        }
        for (int v = 0; v < n; v++) {
            if (color[v] != cell) continue;
            std::vector<int> child = color;
            for (int w = 0; w < n; w++)
                if (child[w] > cell || (child[w] == cell && w != v)) child[w]++;
            dfs(std::move(child));
        }
    }
};

}  // namespace

Canon canonical_form(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > 64) throw GraphError(Err::cap_exceeded, "canonical_form handles n <= 64");
    if (n == 0) return Canon{{}, {}, {{}}};
    Search s;
    s.n = n;
    s.adj.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError(Err::vertex_out_of_range, "canonical_form edge out of range");
        if (u == v) throw GraphError(Err::loop_edge, "canonical_form expects a simple graph");
        s.adj[u] |= std::uint64_t(1) << v;
        s.adj[v] |= std::uint64_t(1) << u;
    }
    s.dfs(std::vector<int>(n, 0));
    return Canon{std::move(s.best_label), std::move(s.best_code), std::move(s.auts)};
}

}  // namespace sgc4
