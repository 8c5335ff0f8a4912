#include "gancc/girth.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace gancc {

namespace {

// Unified node ids: variables 0..n-1, checks n..n+m-1.
struct TannerGraph {
    int n_var, n_chk;
    std::vector<std::vector<int>> adj;

    explicit TannerGraph(const ParityMatrix& h) : n_var(h.cols()), n_chk(h.rows()), adj(n_var + n_chk) {
        for (int r = 0; r < n_chk; ++r) {
            for (int c : h.row(r)) {
                adj[c].push_back(n_var + r);
                adj[n_var + r].push_back(c);
            }
        }
    }
};

// Shortest cycle found over BFS trees rooted at every variable node,
// ignoring anything that could not beat `cap`. Every cycle contains a
// variable node and BFS from a node on a shortest cycle detects its exact
// length (bipartite, so levels alternate), hence the minimum over roots is
// the exact girth whenever it is below cap.
int girth_search(const ParityMatrix& h, int cap) {
    if (h.rows() == 0 || h.cols() == 0) throw std::invalid_argument("girth: empty matrix");
    TannerGraph g(h);
    const int inf = std::numeric_limits<int>::max();
    int best = inf;

    std::vector<int> dist(g.adj.size(), -1);
    std::vector<int> parent(g.adj.size(), -1);
    std::vector<int> touched;
    touched.reserve(g.adj.size());
    std::queue<int> q;

    for (int root = 0; root < g.n_var; ++root) {
        if (best == 4) break; // bipartite graphs cannot do better
        for (int v : touched) dist[v] = -1;
        touched.clear();

        dist[root] = 0;
        parent[root] = -1;
        touched.push_back(root);
        q.push(root);
        // detecting a cycle of length L needs expansion of depth L/2 - 1
        const int depth_cap = (std::min(best, cap) - 1) / 2;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (dist[u] >= depth_cap) continue;
            for (int w : g.adj[u]) {
                if (w == parent[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    q.push(w);
                } else {
                    int len = dist[u] + dist[w] + 1; // non-tree edge closes a cycle
                    if (len < best) best = len;
                }
            }
        }
        while (!q.empty()) q.pop();
    }
    return best;
}

} // namespace

std::optional<int> girth(const ParityMatrix& h) {
    int best = girth_search(h, std::numeric_limits<int>::max());
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

int girth_capped(const ParityMatrix& h, int cap) {
    return std::min(girth_search(h, cap), cap);
}

bool girth_at_least(const ParityMatrix& h, int g) {
    return girth_search(h, g) >= g;
}

bool girth6_condition(const BaseMatrix& base, const OffsetTable& offsets, int n) {
    // gather nonzero columns per row along with their offsets
    std::vector<std::vector<std::pair<int, int>>> rows(base.rows); // (col, offset)
    for (const auto& [r, c] : base.entries) rows[r].push_back({c, offsets.at(base, r, c) % n});
    for (auto& row : rows) std::sort(row.begin(), row.end());

    for (int i1 = 0; i1 < base.rows; ++i1) {
        for (int i2 = i1 + 1; i2 < base.rows; ++i2) {
            const auto& a = rows[i1];
            const auto& b = rows[i2];
            std::vector<std::pair<int, int>> shared; // (p_i1, p_i2) on common columns
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x].first < b[y].first) ++x;
                else if (a[x].first > b[y].first) ++y;
                else {
                    shared.push_back({a[x].second, b[y].second});
                    ++x;
                    ++y;
                }
            }
            for (std::size_t j1 = 0; j1 < shared.size(); ++j1) {
                for (std::size_t j2 = j1 + 1; j2 < shared.size(); ++j2) {
                    int d1 = ((shared[j2].first - shared[j1].first) % n + n) % n;
                    int d2 = ((shared[j2].second - shared[j1].second) % n + n) % n;
                    if (d1 == d2) return false;
                }
            }
        }
    }
    return true;
}

} // namespace gancc
