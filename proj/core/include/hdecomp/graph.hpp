#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hdecomp {

using Vertex = int;

/// Undirected edge with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Search caps shared by every exact-search operation. Exceeding a cap raises
/// SizeError; nothing is ever silently truncated.
struct Limits {
    int embedding_vertices = 16;  // host order for find_embeddings, canonical_form
    int enumeration_vertices = 10;  // enumerate_graphs, exact extremal search
    int phi_scan_vertices = 8;  // phi_max_over_n
    std::size_t copy_cap = 100000;  // pre-enumerated H-copies in max_packing

    /// Hard ceiling of the word-parallel search kernels.
    static constexpr int kMaxSearchVertices = 64;
};

/// Labeled simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as fixed-width bit rows, one row per vertex, so degree
/// and common-neighbourhood queries are word-parallel.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string label = {});

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool has_edge(Vertex u, Vertex v) const;
    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    /// Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const;
    int min_degree() const;
    int degree_into(Vertex v, std::span<const std::uint64_t> set) const;

    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    /// Adjacency row as a single word. Requires order() <= 64.
    std::uint64_t row64(Vertex v) const { return words_ == 0 ? 0 : bits_[static_cast<std::size_t>(v) * words_]; }

    std::vector<Vertex> neighbors(Vertex v) const;
    /// All edges in ascending (u, v) order.
    std::vector<Edge> edges() const;

    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;
    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    /// Graph with the given vertices removed, remaining ones renumbered in order.
    Graph without_vertices(std::span<const Vertex> removed) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string label_;
};

/// Words needed for an n-bit vertex set.
constexpr int words_for(int n) { return (n + 63) / 64; }

std::vector<std::uint64_t> make_vertex_set(int n, std::span<const Vertex> members);

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

/// Two-colourability test by BFS.
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

/// Number of unordered pairs: n choose 2.
constexpr std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace hdecomp
