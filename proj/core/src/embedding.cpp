#include "hdecomp/embedding.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "hdecomp/error.hpp"

namespace hdecomp {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

class Matcher {
public:
    Matcher(const Graph& pattern, const Graph& host, const AllowedSets& allowed,
            const std::function<bool(std::span<const Vertex>)>& visit, SearchBudget* budget)
        : pattern_(pattern), host_(host), visit_(visit), budget_(budget) {
        const int p = pattern.order();
        const int h = host.order();
        host_rows_.resize(h);
        std::vector<int> host_degree(h);
        for (Vertex v = 0; v < h; ++v) {
            host_rows_[v] = host.row64(v);
            host_degree[v] = std::popcount(host_rows_[v]);
        }

        allowed_.assign(p, low_mask(h));
        if (!allowed.empty()) {
            if (static_cast<int>(allowed.size()) != p) {
                throw DomainError("allowed sets must have one entry per pattern vertex");
            }
            for (Vertex u = 0; u < p; ++u) {
                Mask m = 0;
                for (Vertex v : allowed[u]) {
                    if (v < 0 || v >= h) {
                        throw DomainError("allowed host vertex " + std::to_string(v) + " out of range");
                    }
                    m |= bit(v);
                }
                allowed_[u] = m;
            }
        }
        for (Vertex u = 0; u < p; ++u) {
            const int d = pattern.degree(u);
            for (Vertex v = 0; v < h; ++v) {
                if (host_degree[v] < d) {
                    allowed_[u] &= ~bit(v);
                }
            }
        }

        build_order();
        map_.assign(p, -1);
    }

    SearchStatus run() {
        status_ = SearchStatus::Complete;
        if (pattern_.order() > host_.order()) {
            return status_;
        }
        dfs(0, 0);
        return status_;
    }

private:
    void build_order() {
        const int p = pattern_.order();
        std::vector<bool> placed(p, false);
        std::vector<int> placed_neighbors(p, 0);
        for (int k = 0; k < p; ++k) {
            Vertex best = -1;
            auto key = [&](Vertex u) {
                const bool pinned = std::has_single_bit(allowed_[u]);
                return std::tuple(pinned, pattern_.degree(u), placed_neighbors[u], -u);
            };
            for (Vertex u = 0; u < p; ++u) {
                if (!placed[u] && (best == -1 || key(u) > key(best))) {
                    best = u;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            for (Vertex w : pattern_.neighbors(best)) {
                ++placed_neighbors[w];
            }
        }
        back_.resize(p);
        for (int k = 0; k < p; ++k) {
            for (int j = 0; j < k; ++j) {
                if (pattern_.has_edge(order_[k], order_[j])) {
                    back_[k].push_back(order_[j]);
                }
            }
        }
    }

    // Returns false when the search must unwind.
    bool dfs(int k, Mask used) {
        if (k == static_cast<int>(order_.size())) {
            if (!visit_(map_)) {
                status_ = SearchStatus::Stopped;
                return false;
            }
            return true;
        }
        const Vertex u = order_[k];
        Mask candidates = allowed_[u] & ~used;
        for (Vertex q : back_[k]) {
            candidates &= host_rows_[map_[q]];
        }
        for (; candidates != 0; candidates &= candidates - 1) {
            if (budget_ != nullptr) {
                if (budget_->exhausted()) {
                    status_ = SearchStatus::BudgetExhausted;
                    return false;
                }
                ++budget_->used;
            }
            const Vertex v = std::countr_zero(candidates);
            map_[u] = v;
            if (!dfs(k + 1, used | bit(v))) {
                map_[u] = -1;
                return false;
            }
        }
        map_[u] = -1;
        return true;
    }

    const Graph& pattern_;
    const Graph& host_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    SearchBudget* budget_;
    std::vector<Mask> host_rows_;
    std::vector<Mask> allowed_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> back_;
    std::vector<Vertex> map_;
    SearchStatus status_ = SearchStatus::Complete;
};

void check_caps(const Graph& pattern, const Graph& host, const Limits& limits) {
    const int cap = std::min(limits.embedding_vertices, Limits::kMaxSearchVertices);
    if (host.order() > cap || pattern.order() > cap) {
        throw SizeError("embedding search: order " + std::to_string(std::max(host.order(), pattern.order())) +
                        " exceeds cap " + std::to_string(cap));
    }
}

}  // namespace

SearchStatus for_each_embedding(const Graph& pattern, const Graph& host, const AllowedSets& allowed,
                                const std::function<bool(std::span<const Vertex>)>& visit, SearchBudget* budget,
                                const Limits& limits) {
    check_caps(pattern, host, limits);
    return Matcher(pattern, host, allowed, visit, budget).run();
}

std::vector<Embedding> find_embeddings(const Graph& pattern, const Graph& host, std::size_t limit,
                                       const AllowedSets& allowed, const Limits& limits) {
    std::vector<Embedding> out;
    if (limit == 0) {
        return out;
    }
    for_each_embedding(
        pattern, host, allowed,
        [&](std::span<const Vertex> map) {
            out.push_back({std::vector<Vertex>(map.begin(), map.end())});
            return out.size() < limit;
        },
        nullptr, limits);
    return out;
}

bool contains_subgraph(const Graph& host, const Graph& pattern, const Limits& limits) {
    return !find_embeddings(pattern, host, 1, {}, limits).empty();
}

bool contains_subgraph_through(const Graph& host, const Graph& pattern, Edge through, const Limits& limits) {
    check_caps(pattern, host, limits);
    if (!host.has_edge(through.u, through.v)) {
        return false;
    }
    AllowedSets allowed(pattern.order());
    std::vector<Vertex> all(host.order());
    for (Vertex v = 0; v < host.order(); ++v) {
        all[v] = v;
    }
    for (const auto& e : pattern.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            std::fill(allowed.begin(), allowed.end(), all);
            allowed[e.u] = {flip == 0 ? through.u : through.v};
            allowed[e.v] = {flip == 0 ? through.v : through.u};
            bool found = false;
            for_each_embedding(
                pattern, host, allowed,
                [&](std::span<const Vertex>) {
                    found = true;
                    return false;
                },
                nullptr, limits);
            if (found) {
                return true;
            }
        }
    }
    return false;
}

std::vector<Edge> image_edges(const Graph& pattern, const Embedding& embedding) {
    std::vector<Edge> out;
    for (const auto& e : pattern.edges()) {
        const Vertex a = embedding.map[e.u];
        const Vertex b = embedding.map[e.v];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return out;
}

bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& embedding) {
    if (static_cast<int>(embedding.map.size()) != pattern.order()) {
        return false;
    }
    std::vector<bool> hit(host.order(), false);
    for (Vertex v : embedding.map) {
        if (v < 0 || v >= host.order() || hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    for (const auto& e : pattern.edges()) {
        if (!host.has_edge(embedding.map[e.u], embedding.map[e.v])) {
            return false;
        }
    }
    return true;
}

}  // namespace hdecomp
