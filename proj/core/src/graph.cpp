#include "hdecomp/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "hdecomp/error.hpp"

namespace hdecomp {

Graph::Graph(int n, std::string label)
    : n_(n), words_(words_for(n)), label_(std::move(label)) {
    if (n < 0) {
        throw DomainError("graph order must be non-negative");
    }
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw DomainError("self-loop at vertex " + std::to_string(u));
    }
    auto& a = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (a & bit) {
        return false;
    }
    a |= bit;
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) {
        return false;
    }
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --m_;
    return true;
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) {
        d += std::popcount(w);
    }
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) {
        return 0;
    }
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n_; ++v) {
        best = std::min(best, degree(v));
    }
    return best;
}

int Graph::degree_into(Vertex v, std::span<const std::uint64_t> set) const {
    const auto r = row(v);
    int d = 0;
    for (std::size_t i = 0; i < r.size() && i < set.size(); ++i) {
        d += std::popcount(r[i] & set[i]);
    }
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    const auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
            out.push_back(w * 64 + std::countr_zero(bits));
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (v > u) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) {
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw DomainError("relabeling has wrong length");
    }
    Graph out(n_, label_);
    for (const auto& e : edges()) {
        out.add_edge(perm[e.u], perm[e.v]);
    }
    return out;
}

Graph Graph::without_vertices(std::span<const Vertex> removed) const {
    std::vector<bool> gone(n_, false);
    for (Vertex v : removed) {
        check_vertex(v);
        gone[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n_; ++v) {
        if (!gone[v]) {
            keep.push_back(v);
        }
    }
    return induced(keep);
}

std::vector<std::uint64_t> make_vertex_set(int n, std::span<const Vertex> members) {
    std::vector<std::uint64_t> set(words_for(n), 0);
    for (Vertex v : members) {
        set[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return set;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_edge(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) {
        return true;
    }
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

}  // namespace hdecomp
