#include "hdecomp/packing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "hdecomp/enumerate.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/graph6.hpp"

namespace hdecomp {

namespace {

using EdgeBits = std::vector<std::uint64_t>;

class EdgeIndex {
public:
    explicit EdgeIndex(const Graph& g) : n_(g.order()), index_(static_cast<std::size_t>(g.order()) * g.order(), -1) {
        for (const auto& e : g.edges()) {
            index_[static_cast<std::size_t>(e.u) * n_ + e.v] = count_;
            index_[static_cast<std::size_t>(e.v) * n_ + e.u] = count_;
            ++count_;
        }
    }

    int operator()(Vertex u, Vertex v) const { return index_[static_cast<std::size_t>(u) * n_ + v]; }
    int count() const noexcept { return count_; }

private:
    int n_;
    std::vector<int> index_;
    int count_ = 0;
};

struct Copy {
    Embedding embedding;
    std::vector<int> edge_ids;  // ascending
    EdgeBits bits;
};

std::vector<Copy> collect_copies(const Graph& g, const Graph& h, const Limits& limits) {
    const EdgeIndex index(g);
    const int words = std::max(1, (index.count() + 63) / 64);

    std::uint64_t automorphisms = 0;
    for_each_embedding(
        h, h, {},
        [&](std::span<const Vertex>) {
            ++automorphisms;
            return true;
        },
        nullptr, limits);
    const std::uint64_t embedding_cap = static_cast<std::uint64_t>(limits.copy_cap) * std::max<std::uint64_t>(1, automorphisms);

    std::map<std::vector<int>, Embedding> by_edges;
    std::uint64_t seen = 0;
    const auto h_edges = h.edges();
    for_each_embedding(
        h, g, {},
        [&](std::span<const Vertex> map) {
            if (++seen > embedding_cap) {
                throw SizeError("max_packing: more than " + std::to_string(limits.copy_cap) + " copies of the pattern");
            }
            std::vector<int> ids;
            ids.reserve(h_edges.size());
            for (const auto& e : h_edges) {
                ids.push_back(index(map[e.u], map[e.v]));
            }
            std::sort(ids.begin(), ids.end());
            by_edges.try_emplace(std::move(ids), Embedding{std::vector<Vertex>(map.begin(), map.end())});
            return true;
        },
        nullptr, limits);
    if (by_edges.size() > limits.copy_cap) {
        throw SizeError("max_packing: " + std::to_string(by_edges.size()) + " copies exceed cap " +
                        std::to_string(limits.copy_cap));
    }

    // std::map order is already (smallest edge id, then lexicographic ids).
    std::vector<Copy> copies;
    copies.reserve(by_edges.size());
    for (auto& [ids, emb] : by_edges) {
        Copy c{std::move(emb), ids, EdgeBits(words, 0)};
        for (int id : ids) {
            c.bits[id / 64] |= std::uint64_t{1} << (id % 64);
        }
        copies.push_back(std::move(c));
    }
    return copies;
}

bool disjoint(const EdgeBits& a, const EdgeBits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) {
            return false;
        }
    }
    return true;
}

class PackingSearch {
public:
    PackingSearch(const std::vector<Copy>& copies, int pattern_edges)
        : copies_(copies), pattern_edges_(pattern_edges) {}

    std::vector<int> run() {
        if (copies_.empty()) {
            return {};
        }
        const std::size_t words = copies_.front().bits.size();
        EdgeBits used(words, 0);
        for (std::size_t i = 0; i < copies_.size(); ++i) {
            if (disjoint(used, copies_[i].bits)) {
                best_.push_back(static_cast<int>(i));
                for (std::size_t w = 0; w < words; ++w) {
                    used[w] |= copies_[i].bits[w];
                }
            }
        }
        std::fill(used.begin(), used.end(), 0);
        branch(0, used);
        return best_;
    }

private:
    std::size_t bound(std::size_t from, const EdgeBits& used) const {
        EdgeBits coverable(used.size(), 0);
        std::size_t candidates = 0;
        for (std::size_t i = from; i < copies_.size(); ++i) {
            if (disjoint(used, copies_[i].bits)) {
                ++candidates;
                for (std::size_t w = 0; w < used.size(); ++w) {
                    coverable[w] |= copies_[i].bits[w];
                }
            }
        }
        std::size_t edges = 0;
        for (auto w : coverable) {
            edges += std::popcount(w);
        }
        return current_.size() + std::min(candidates, edges / pattern_edges_);
    }

    void branch(std::size_t i, EdgeBits& used) {
        if (current_.size() > best_.size()) {
            best_ = current_;
        }
        if (i == copies_.size() || bound(i, used) <= best_.size()) {
            return;
        }
        const auto& c = copies_[i];
        if (disjoint(used, c.bits)) {
            for (std::size_t w = 0; w < used.size(); ++w) {
                used[w] |= c.bits[w];
            }
            current_.push_back(static_cast<int>(i));
            branch(i + 1, used);
            current_.pop_back();
            for (std::size_t w = 0; w < used.size(); ++w) {
                used[w] &= ~c.bits[w];
            }
        }
        branch(i + 1, used);
    }

    const std::vector<Copy>& copies_;
    std::size_t pattern_edges_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

std::vector<Embedding> enumerate_copies(const Graph& g, const Graph& h, const Limits& limits) {
    std::vector<Embedding> out;
    for (auto& c : collect_copies(g, h, limits)) {
        out.push_back(std::move(c.embedding));
    }
    return out;
}

Packing max_packing(const Graph& g, const Graph& h, const Limits& limits) {
    if (h.size() < 2) {
        throw DomainError("max_packing needs e(H) >= 2");
    }
    const auto copies = collect_copies(g, h, limits);
    Packing out;
    for (int i : PackingSearch(copies, static_cast<int>(h.size())).run()) {
        out.copies.push_back(copies[i].embedding);
    }
    return out;
}

PhiResult phi_exact(const Graph& g, const Graph& h, const Limits& limits) {
    auto packing = max_packing(g, h, limits);
    PhiResult out;
    out.decomposition.pattern = h;
    Graph rest = g;
    for (const auto& emb : packing.copies) {
        for (const auto& e : image_edges(h, emb)) {
            rest.remove_edge(e.u, e.v);
        }
    }
    out.decomposition.copies = std::move(packing.copies);
    out.decomposition.singles = rest.edges();
    out.t = g.size() - (h.size() - 1) * out.decomposition.copies.size();
    return out;
}

PhiScan phi_max_over_n(int n, const Graph& h, const Limits& limits, int threads) {
    if (n > limits.phi_scan_vertices) {
        throw SizeError("phi_max_over_n: n = " + std::to_string(n) + " exceeds scan cap " +
                        std::to_string(limits.phi_scan_vertices));
    }
    if (h.size() < 2) {
        throw DomainError("phi_max_over_n needs e(H) >= 2");
    }
    const auto graphs = enumerate_graphs(n, limits);
    std::vector<std::size_t> values(graphs.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        try {
            for (std::size_t i = next++; i < graphs.size(); i = next++) {
                values[i] = phi_exact(graphs[i], h, limits).t;
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = graphs.size();
        }
    };
    const int workers = std::max(1, threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    PhiScan scan;
    scan.n = n;
    scan.graphs_scanned = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (values[i] > scan.value || scan.witnesses.empty()) {
            scan.value = values[i];
            scan.witnesses.clear();
        }
        if (values[i] == scan.value) {
            scan.witnesses.push_back(graphs[i]);
        }
    }
    return scan;
}

std::string to_json(const PhiScan& scan, const Graph& h) {
    nlohmann::ordered_json j;
    j["n"] = scan.n;
    j["pattern_graph6"] = emit_graph6(h);
    j["value"] = scan.value;
    auto& w = j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& g : scan.witnesses) {
        w.push_back(emit_graph6(g));
    }
    j["graphs_scanned"] = scan.graphs_scanned;
    return j.dump();
}

}  // namespace hdecomp
