#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdecomp/extremal.hpp"
#include "hdecomp/family.hpp"
#include "hdecomp/graph.hpp"
#include "hdecomp/packing.hpp"

namespace hdecomp {

// ---------------------------------------------------------------------------
// Parameters

/// beta = 1 / (100 e(H)^4), the value the upper-bound argument needs.
double theory_beta(const Graph& h);
/// gamma = beta^12 / (1000 e(H)^4) with beta = theory_beta(h).
double theory_gamma(const Graph& h);

struct PipelineParams {
    /// 0 means chi(H).
    int r = 0;
    double beta = 0.25;
    double gamma = 0.05;
    /// Per-class edge bound for Step 1. Unset means exact biex at the order
    /// of G - X, which needs that order within the enumeration cap unless
    /// F*_H has a one-edge member.
    std::optional<std::size_t> step1_threshold;
    /// Search nodes for Step 2; stands in for the supersaturation constant.
    std::uint64_t step2_budget = 2'000'000;
    /// Search nodes for locating and extending F-copies in Step 1.
    std::uint64_t step1_budget = 2'000'000;
    std::uint64_t seed = 1;
    /// Independent seeded local-search starts for the stability partition;
    /// the largest cut wins.
    int partition_restarts = 8;
    Limits limits;
    ExtremalCache* cache = nullptr;
};

// ---------------------------------------------------------------------------
// Peeling

struct PeelStep {
    Vertex vertex = 0;  // original index
    int degree = 0;
};

struct PeelResult {
    Graph graph;
    /// kept[i] is the original index of vertex i of `graph`.
    std::vector<Vertex> kept;
    std::vector<PeelStep> trace;
};

/// min degree of T_k(n): n - ceil(n / k).
int turan_min_degree(int n, int k);

/// Removes a minimum-degree vertex (lowest index on ties) while
/// delta(G) < delta(T_{r-1}(n)) for the current order n.
PeelResult peel_min_degree(const Graph& g, int r);

// ---------------------------------------------------------------------------
// Partition state

/// V = V_1 u ... u V_k with X_i a subset of V_i and V'_i = V_i \ X_i. Keeps a
/// per-vertex ledger of neighbours in every V'_j and X_j of the current
/// residual graph.
class PartitionState {
public:
    PartitionState() = default;
    PartitionState(const Graph& g, std::vector<int> class_of, int classes);

    int classes() const noexcept { return k_; }
    int order() const noexcept { return static_cast<int>(class_of_.size()); }
    int class_of(Vertex v) const { return class_of_[v]; }
    bool in_x(Vertex v) const { return in_x_[v]; }
    const std::vector<int>& class_assignment() const noexcept { return class_of_; }

    std::vector<Vertex> part(int i) const;        // V_i
    std::vector<Vertex> x_part(int i) const;      // X_i
    std::vector<Vertex> prime_part(int i) const;  // V'_i
    std::vector<Vertex> x_vertices() const;       // X

    /// deg(v, V_j)
    int deg_to_part(Vertex v, int j) const { return ledger(v, j) + ledger(v, k_ + j); }
    /// deg(v, V'_j)
    int deg_to_prime(Vertex v, int j) const { return ledger(v, j); }
    /// deg(v, X_j)
    int deg_to_x(Vertex v, int j) const { return ledger(v, k_ + j); }

    /// e(V_i), e(V'_i) in the current residual graph.
    std::size_t part_edges(int i) const;
    std::size_t prime_edges(int i) const;

    /// Moves v into class j, updating the ledger against `g`.
    void move(const Graph& g, Vertex v, int j);
    void set_x(const Graph& g, const std::vector<bool>& in_x);
    /// Ledger bookkeeping for an edge deleted from the residual graph.
    void on_edge_removed(Vertex u, Vertex v);
    /// Recomputes the ledger from scratch and compares.
    bool ledger_matches(const Graph& g) const;

    /// Property (a): deg(v, V_i) <= deg(v, V_j) for v in V_i.
    bool locally_maximal() const;

private:
    int cell(Vertex v) const { return class_of_[v] + (in_x_[v] ? k_ : 0); }
    int ledger(Vertex v, int c) const { return ledger_[static_cast<std::size_t>(v) * 2 * k_ + c]; }
    int& ledger(Vertex v, int c) { return ledger_[static_cast<std::size_t>(v) * 2 * k_ + c]; }
    void rebuild(const Graph& g);

    int k_ = 0;
    std::vector<int> class_of_;
    std::vector<bool> in_x_;
    std::vector<int> ledger_;
};

struct StabilityReport {
    std::size_t internal_edges = 0;  // sum_i e(V_i)
    std::size_t moves = 0;
    int restart_chosen = 0;
    bool property_a = false;
    bool property_b = false;  // sum_i e(V_i) < gamma n^2
    bool property_c = false;  // n/k - 2 sqrt(gamma) n <= |V_i| <= n/k + 2 r sqrt(gamma) n
};

/// Local-search max k-cut. Each start is a seeded balanced random partition;
/// while some vertex violates property (a) the lowest-index violator moves to
/// the class it has fewest neighbours in (lowest class index on ties). The
/// output satisfies (a) exactly; (b) and (c) are measured for `gamma`.
PartitionState stability_partition(const Graph& g, int classes, double gamma, std::uint64_t seed, int restarts = 1,
                                   StabilityReport* report = nullptr);

/// X_i = {v in V_i : deg(v, V_i) >= beta n / 2} against the current graph.
void identify_x(PartitionState& state, const Graph& g, double beta);

/// Vertices of V \ X whose degree into every other V'_j is at least
/// (1/k - 2 beta) n' with n' = |V \ X|.
std::vector<bool> beta_active(const PartitionState& state, double beta);

// ---------------------------------------------------------------------------
// Deletion processes

struct Step1Copy {
    Embedding copy;  // H -> residual
    int part = 0;    // the V'_i holding the F-part
    std::size_t member = 0;  // index into F*_H
    std::vector<Vertex> f_vertices;  // H vertices forming F
};

struct Step1Result {
    std::vector<Step1Copy> copies;
    std::string stop_reason;
    std::uint64_t nodes = 0;
};

/// While some e(V'_i) exceeds `threshold`, finds the first F in F*_H inside
/// G[V'_i] and extends it to an H-copy whose other colour classes are sets of
/// beta-active common neighbours of everything placed so far, each inside a
/// distinct V'_j (lowest indices first). An F-copy that cannot be extended is
/// skipped for the next one. Deletes each copy from `residual`.
Step1Result step1_deplete(Graph& residual, PartitionState& state, const Graph& h, const GraphFamily& fstar,
                          double beta, std::size_t threshold, std::uint64_t budget);

struct Step2Copy {
    Embedding copy;
    std::vector<Vertex> x_vertices;
};

struct Step2Result {
    std::vector<Step2Copy> copies;
    std::string stop_reason;
    std::uint64_t nodes = 0;
};

/// With X' = {x in X : deg(x, V'_i) > beta^2 n for all i}, repeatedly deletes
/// an H-copy that puts a colour class of size sigma on X' and every other
/// class in a distinct V'_j, until X' is empty, no copy exists, or the budget
/// runs out.
Step2Result step2_deplete(Graph& residual, PartitionState& state, const Graph& h, int sigma, double beta,
                          std::uint64_t budget);

// ---------------------------------------------------------------------------
// Whole pipeline

struct PipelineFlags {
    bool stability_a = false;
    bool stability_b = false;
    bool stability_c = false;
    bool step1_min_degree = false;       // deg(v, V'_j) >= (1/k - beta) n'
    bool step1_sparse_parts = false;     // sum e(V'_i) <= beta^2 n'^2 / e(H)
    bool step1_max_degree = false;       // Delta(V'_i) <= 2 beta n'
    bool step2_dense_pairs = false;      // e(V'_i, V'_j) > |V'_i||V'_j| - beta^6 n^2
    bool step2_small_x = false;          // |X| <= beta^6 n
};

struct PipelineReport {
    int n = 0;  // order of G
    int r = 0;
    std::size_t edges = 0;
    std::size_t pattern_edges = 0;  // e(H)
    int peeled_order = 0;
    std::vector<PeelStep> peel_trace;

    double beta = 0;
    double gamma = 0;
    double beta_theory = 0;
    double gamma_theory = 0;
    double c_per_k = 0;  // C / K = v(H) / beta

    std::size_t m = 0;
    std::size_t m_prime = 0;
    std::size_t m_x = 0;
    std::vector<std::pair<Vertex, int>> m_x_per_vertex;  // (original x, m_x)
    std::vector<int> part_sizes;
    std::vector<int> x_sizes;

    double x_threshold = 0;       // beta n / 2
    double active_threshold = 0;  // (1/k - 2 beta) n'
    double step2_threshold = 0;   // beta^2 n
    std::size_t step1_threshold = 0;
    std::string step1_threshold_source;
    int step1_threshold_order = 0;

    std::size_t step1_copies = 0;
    std::size_t step2_copies = 0;
    std::string step1_stop;
    std::string step2_stop;
    std::uint64_t step1_nodes = 0;
    std::uint64_t step2_nodes = 0;

    std::size_t t = 0;
    std::size_t target = 0;
    bool success = false;
    PipelineFlags flags;

    /// class_of[v] for original v; -1 for peeled vertices.
    std::vector<int> class_of;
    std::vector<bool> in_x;
    /// Copy indices (into the decomposition) found by each step.
    std::vector<std::size_t> step1_copy_ids;
    std::vector<std::size_t> step2_copy_ids;
};

struct DecomposeResult {
    HDecomposition decomposition;
    PipelineReport report;
};

/// peel -> stability partition -> X -> Step 1 -> Step 2, then every copy plus
/// the remaining edges as singles, over the original vertex labels.
DecomposeResult decompose(const Graph& g, const Graph& h, const PipelineParams& params = {});

struct Verification {
    bool ok = true;
    std::string violation;
};

/// Checks that the copies and singles partition E(G) exactly.
Verification verify_decomposition(const Graph& g, const HDecomposition& d);

// ---------------------------------------------------------------------------
// Lower-bound construction

struct LowerBoundCertificate {
    int n = 0;
    int r = 0;
    std::size_t biex_value = 0;
    Graph biex_witness;
    Graph plant;  // F'
    std::vector<Vertex> plant_vertices;  // vertices of the witness kept in F'
    std::string selection;  // "greedy-min-degree" or "exhaustive"
    std::size_t required_plant_edges = 0;  // ceil(biex / (r-1)^2)
    std::size_t turan_edges = 0;
    std::size_t edges = 0;
    bool bound_holds = false;
    /// "verified", or "unverified" above the embedding cap.
    std::string h_freeness;
};

struct LowerBoundResult {
    Graph graph;
    LowerBoundCertificate certificate;
};

/// T_{r-1}(n) with an ceil(n/(r-1))-vertex subgraph F' of an extremal
/// F*_H-free graph planted in its largest part.
LowerBoundResult lower_bound_construction(int n, const Graph& h, const ExtremalOptions& options = {});

// ---------------------------------------------------------------------------
// Serialization

inline constexpr std::string_view kDecompositionHeader = "# hdecomp decomposition v1";
inline constexpr std::string_view kReportFormat = "hdecomp-report/1";

/// Header line, "P <pattern graph6>", then "H v_0 v_1 ..." per copy (host
/// vertices in pattern-vertex order) and "E u v" per single edge.
std::string format_decomposition(const HDecomposition& d);
HDecomposition parse_decomposition(std::string_view text);

std::string to_json(const PipelineReport& report);
std::string to_json(const LowerBoundCertificate& certificate);

}  // namespace hdecomp
