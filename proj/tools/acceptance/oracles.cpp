#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hdecomp::oracle {

namespace {

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Calls visit(map) for each injection of pattern vertices into host vertices
// that carries edges to edges. Plain recursion, no ordering tricks.
void injections(const Graph& host, const Graph& pattern, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const int p = pattern.order();
    const int n = host.order();
    if (p > n) {
        return;
    }
    std::vector<Vertex> map(p, -1);
    std::vector<bool> used(n, false);
    bool stop = false;
    std::function<void(int)> rec = [&](int k) {
        if (stop) {
            return;
        }
        if (k == p) {
            stop = !visit(map);
            return;
        }
        for (Vertex v = 0; v < n && !stop; ++v) {
            if (used[v]) {
                continue;
            }
            bool ok = true;
            for (Vertex q = 0; q < k && ok; ++q) {
                ok = !pattern.has_edge(q, k) || host.has_edge(map[q], v);
            }
            if (!ok) {
                continue;
            }
            used[v] = true;
            map[k] = v;
            rec(k + 1);
            used[v] = false;
        }
    };
    rec(0);
}

bool proper(const Graph& h, const std::vector<int>& colour) {
    for (Vertex u = 0; u < h.order(); ++u) {
        for (Vertex v = u + 1; v < h.order(); ++v) {
            if (h.has_edge(u, v) && colour[u] == colour[v]) {
                return false;
            }
        }
    }
    return true;
}

// Visits every assignment of k colours to the vertices of h.
void assignments(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> c(n, 0);
    for (;;) {
        visit(c);
        int i = 0;
        while (i < n && ++c[i] == k) {
            c[i++] = 0;
        }
        if (i == n) {
            return;
        }
    }
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    auto perm = identity(a.order());
    do {
        bool same = true;
        for (Vertex u = 0; u < a.order() && same; ++u) {
            for (Vertex v = u + 1; v < a.order() && same; ++v) {
                same = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t unlabeled_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
        index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    }
    std::vector<std::vector<Vertex>> perms;
    auto perm = identity(n);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t best = mask;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1) {
                    image |= std::uint32_t{1} << index[p[pairs[i].first]][p[pairs[i].second]];
                }
            }
            best = std::min(best, image);
        }
        seen.insert(best);
    }
    return seen.size();
}

bool contains(const Graph& host, const Graph& pattern) {
    bool found = false;
    injections(host, pattern, [&](const std::vector<Vertex>&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<std::vector<Edge>> copy_edge_sets(const Graph& g, const Graph& h) {
    std::set<std::vector<Edge>> sets;
    injections(g, h, [&](const std::vector<Vertex>& map) {
        std::vector<Edge> es;
        for (Vertex u = 0; u < h.order(); ++u) {
            for (Vertex v = u + 1; v < h.order(); ++v) {
                if (h.has_edge(u, v)) {
                    es.push_back({std::min(map[u], map[v]), std::max(map[u], map[v])});
                }
            }
        }
        std::sort(es.begin(), es.end());
        sets.insert(std::move(es));
        return true;
    });
    return {sets.begin(), sets.end()};
}

std::size_t phi(const Graph& g, const Graph& h) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) {
                edges.push_back({u, v});
            }
        }
    }
    const auto copies = copy_edge_sets(g, h);
    std::set<Edge> covered;
    std::size_t best = edges.size();
    // Lowest uncovered edge goes either alone or into a copy containing it.
    std::function<void(std::size_t)> rec = [&](std::size_t parts) {
        auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return !covered.contains(e); });
        if (it == edges.end()) {
            best = std::min(best, parts);
            return;
        }
        const Edge e = *it;
        covered.insert(e);
        rec(parts + 1);
        covered.erase(e);
        for (const auto& c : copies) {
            if (!std::binary_search(c.begin(), c.end(), e)) {
                continue;
            }
            if (std::any_of(c.begin(), c.end(), [&](const Edge& f) { return covered.contains(f); })) {
                continue;
            }
            covered.insert(c.begin(), c.end());
            rec(parts + 1);
            for (const auto& f : c) {
                covered.erase(f);
            }
        }
    };
    rec(0);
    return best;
}

int chromatic_number(const Graph& h) {
    const int n = h.order();
    for (int k = 1; k <= std::max(1, n); ++k) {
        bool found = false;
        assignments(n, k, [&](const std::vector<int>& c) { found = found || proper(h, c); });
        if (found) {
            return k;
        }
    }
    return n;
}

int chromatic_excess(const Graph& h) {
    const int n = h.order();
    const int k = chromatic_number(h);
    int best = n;
    assignments(n, k, [&](const std::vector<int>& c) {
        if (!proper(h, c)) {
            return;
        }
        std::vector<int> sizes(k, 0);
        for (int x : c) {
            ++sizes[x];
        }
        if (*std::min_element(sizes.begin(), sizes.end()) == 0) {
            return;
        }
        best = std::min(best, *std::min_element(sizes.begin(), sizes.end()));
    });
    return best;
}

bool edge_critical(const Graph& h) {
    const int k = chromatic_number(h);
    for (Vertex u = 0; u < h.order(); ++u) {
        for (Vertex v = u + 1; v < h.order(); ++v) {
            if (!h.has_edge(u, v)) {
                continue;
            }
            Graph minus = h;
            minus.remove_edge(u, v);
            if (chromatic_number(minus) < k) {
                return true;
            }
        }
    }
    return false;
}

std::size_t ex_c4(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<std::uint32_t> adj(n, 0);
    std::size_t best = 0;
    std::size_t edges = 0;
    // Adding uv closes a C4 iff some w ~ u and x ~ v with w ~ x, w != v, x != u, w != x.
    const auto closes_c4 = [&](int u, int v) {
        for (int w = 0; w < n; ++w) {
            if (w == v || !(adj[u] >> w & 1)) {
                continue;
            }
            for (int x = 0; x < n; ++x) {
                if (x == u || x == w || !(adj[v] >> x & 1)) {
                    continue;
                }
                if (adj[w] >> x & 1) {
                    return true;
                }
            }
        }
        return false;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (edges + (pairs.size() - i) <= best) {
            return;
        }
        if (i == pairs.size()) {
            best = edges;
            return;
        }
        const auto [u, v] = pairs[i];
        if (!closes_c4(u, v)) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
            ++edges;
            rec(i + 1);
            --edges;
            adj[u] &= ~(1u << v);
            adj[v] &= ~(1u << u);
        }
        rec(i + 1);
    };
    rec(0);
    return best;
}

std::size_t ex_labeled(int n, const std::vector<Graph>& patterns) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::size_t best = 0;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const auto e = static_cast<std::size_t>(__builtin_popcount(mask));
        if (e <= best && mask != 0) {
            continue;
        }
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        const bool free = std::none_of(patterns.begin(), patterns.end(), [&](const Graph& p) { return contains(g, p); });
        if (free) {
            best = std::max(best, e);
        }
    }
    return best;
}

std::size_t turan_edges(int n, int k) {
    std::size_t count = 0;
    // vertex v sits in part v mod k; parts then differ by at most one
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            count += (u % k) != (v % k) ? 1 : 0;
        }
    }
    return count;
}

}  // namespace hdecomp::oracle
