#include "hdecomp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hdecomp/canonical.hpp"
#include "hdecomp/coloring.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/error.hpp"
#include "hdecomp/generators.hpp"

namespace hdecomp {

namespace {

Limits wide_limits(Limits limits) {
    limits.embedding_vertices = Limits::kMaxSearchVertices;
    return limits;
}

void check_search_order(int n, const char* where) {
    if (n > Limits::kMaxSearchVertices) {
        throw SizeError(std::string(where) + ": order " + std::to_string(n) + " exceeds " +
                        std::to_string(Limits::kMaxSearchVertices));
    }
}

void delete_copy(Graph& residual, PartitionState& state, const Graph& h, const Embedding& copy) {
    for (const auto& e : image_edges(h, copy)) {
        if (!residual.remove_edge(e.u, e.v)) {
            throw std::logic_error("deleting an edge that is not present");
        }
        state.on_edge_removed(e.u, e.v);
    }
    if (!state.ledger_matches(residual)) {
        throw std::logic_error("partition ledger out of sync with residual graph");
    }
}

std::vector<Vertex> filter(std::span<const Vertex> vs, const std::vector<bool>& keep) {
    std::vector<Vertex> out;
    for (Vertex v : vs) {
        if (keep[v]) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

double theory_beta(const Graph& h) {
    const double e = static_cast<double>(h.size());
    return 1.0 / (100.0 * std::pow(e, 4));
}

double theory_gamma(const Graph& h) {
    const double e = static_cast<double>(h.size());
    return std::pow(theory_beta(h), 12) / (1000.0 * std::pow(e, 4));
}

int turan_min_degree(int n, int k) {
    if (n <= 0) {
        return 0;
    }
    return n - (n + k - 1) / k;
}

PeelResult peel_min_degree(const Graph& g, int r) {
    if (r < 3) {
        throw DomainError("peel_min_degree needs r >= 3");
    }
    PeelResult out{g, {}, {}};
    out.kept.resize(g.order());
    std::iota(out.kept.begin(), out.kept.end(), 0);
    while (out.graph.order() > 0 && out.graph.min_degree() < turan_min_degree(out.graph.order(), r - 1)) {
        const int delta = out.graph.min_degree();
        Vertex v = 0;
        while (out.graph.degree(v) != delta) {
            ++v;
        }
        out.trace.push_back({out.kept[v], delta});
        const Vertex gone[] = {v};
        out.graph = out.graph.without_vertices(gone);
        out.kept.erase(out.kept.begin() + v);
    }
    return out;
}

// ---------------------------------------------------------------------------

PartitionState::PartitionState(const Graph& g, std::vector<int> class_of, int classes)
    : k_(classes), class_of_(std::move(class_of)), in_x_(class_of_.size(), false) {
    if (static_cast<int>(class_of_.size()) != g.order()) {
        throw DomainError("partition size does not match graph order");
    }
    for (int c : class_of_) {
        if (c < 0 || c >= k_) {
            throw DomainError("class index out of range");
        }
    }
    rebuild(g);
}

void PartitionState::rebuild(const Graph& g) {
    ledger_.assign(class_of_.size() * 2 * k_, 0);
    for (Vertex v = 0; v < order(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            ++ledger(v, cell(u));
        }
    }
}

std::vector<Vertex> PartitionState::part(int i) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
        if (class_of_[v] == i) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> PartitionState::x_part(int i) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
        if (class_of_[v] == i && in_x_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> PartitionState::prime_part(int i) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
        if (class_of_[v] == i && !in_x_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> PartitionState::x_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
        if (in_x_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::size_t PartitionState::part_edges(int i) const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < order(); ++v) {
        if (class_of_[v] == i) {
            twice += deg_to_part(v, i);
        }
    }
    return twice / 2;
}

std::size_t PartitionState::prime_edges(int i) const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < order(); ++v) {
        if (class_of_[v] == i && !in_x_[v]) {
            twice += deg_to_prime(v, i);
        }
    }
    return twice / 2;
}

void PartitionState::move(const Graph& g, Vertex v, int j) {
    const auto nbrs = g.neighbors(v);
    for (Vertex u : nbrs) {
        --ledger(u, cell(v));
    }
    class_of_[v] = j;
    for (Vertex u : nbrs) {
        ++ledger(u, cell(v));
    }
}

void PartitionState::set_x(const Graph& g, const std::vector<bool>& in_x) {
    if (in_x.size() != class_of_.size()) {
        throw DomainError("X flags do not match partition size");
    }
    in_x_ = in_x;
    rebuild(g);
}

void PartitionState::on_edge_removed(Vertex u, Vertex v) {
    --ledger(u, cell(v));
    --ledger(v, cell(u));
}

bool PartitionState::ledger_matches(const Graph& g) const {
    PartitionState fresh = *this;
    fresh.rebuild(g);
    return fresh.ledger_ == ledger_;
}

bool PartitionState::locally_maximal() const {
    for (Vertex v = 0; v < order(); ++v) {
        const int own = deg_to_part(v, class_of_[v]);
        for (int j = 0; j < k_; ++j) {
            if (own > deg_to_part(v, j)) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

PartitionState stability_partition(const Graph& g, int classes, double gamma, std::uint64_t seed, int restarts,
                                   StabilityReport* report) {
    if (classes < 2) {
        throw DomainError("stability_partition needs at least 2 classes");
    }
    const int n = g.order();
    std::mt19937_64 rng(seed);
    PartitionState best;
    StabilityReport best_report;
    for (int attempt = 0; attempt < std::max(1, restarts); ++attempt) {
        std::vector<int> start(n);
        for (int v = 0; v < n; ++v) {
            start[v] = v % classes;
        }
        // Fisher-Yates spelled out so the draw sequence is library independent.
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(start[i], start[j]);
        }
        PartitionState state(g, std::move(start), classes);
        std::size_t moves = 0;
        for (;;) {
            Vertex violator = -1;
            int target = 0;
            for (Vertex v = 0; v < n && violator < 0; ++v) {
                const int own = state.deg_to_part(v, state.class_of(v));
                int low = 0;
                for (int j = 1; j < classes; ++j) {
                    if (state.deg_to_part(v, j) < state.deg_to_part(v, low)) {
                        low = j;
                    }
                }
                if (own > state.deg_to_part(v, low)) {
                    violator = v;
                    target = low;
                }
            }
            if (violator < 0) {
                break;
            }
            state.move(g, violator, target);
            ++moves;
        }
        std::size_t internal = 0;
        for (int i = 0; i < classes; ++i) {
            internal += state.part_edges(i);
        }
        if (attempt == 0 || internal < best_report.internal_edges) {
            best = std::move(state);
            best_report.internal_edges = internal;
            best_report.moves = moves;
            best_report.restart_chosen = attempt;
        }
    }

    if (report != nullptr) {
        const double nn = n;
        const double sg = std::sqrt(gamma);
        const int r = classes + 1;
        best_report.property_a = best.locally_maximal();
        best_report.property_b = static_cast<double>(best_report.internal_edges) < gamma * nn * nn;
        best_report.property_c = true;
        for (int i = 0; i < classes; ++i) {
            const double size = static_cast<double>(best.part(i).size());
            if (size < nn / classes - 2 * sg * nn || size > nn / classes + 2 * r * sg * nn) {
                best_report.property_c = false;
            }
        }
        *report = best_report;
    }
    return best;
}

void identify_x(PartitionState& state, const Graph& g, double beta) {
    const double threshold = 0.5 * beta * state.order();
    std::vector<bool> in_x(state.order(), false);
    for (Vertex v = 0; v < state.order(); ++v) {
        in_x[v] = state.deg_to_part(v, state.class_of(v)) >= threshold;
    }
    state.set_x(g, in_x);
}

std::vector<bool> beta_active(const PartitionState& state, double beta) {
    const int k = state.classes();
    int n_prime = 0;
    for (Vertex v = 0; v < state.order(); ++v) {
        n_prime += state.in_x(v) ? 0 : 1;
    }
    const double threshold = (1.0 / k - 2 * beta) * n_prime;
    std::vector<bool> out(state.order(), false);
    for (Vertex v = 0; v < state.order(); ++v) {
        if (state.in_x(v)) {
            continue;
        }
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            ok = j == state.class_of(v) || state.deg_to_prime(v, j) >= threshold;
        }
        out[v] = ok;
    }
    return out;
}

// ---------------------------------------------------------------------------

Step1Result step1_deplete(Graph& residual, PartitionState& state, const Graph& h, const GraphFamily& fstar,
                          double beta, std::size_t threshold, std::uint64_t budget) {
    check_search_order(residual.order(), "step1_deplete");
    const Limits wide = wide_limits({});
    const int k = state.classes();
    std::vector<std::vector<FamilyRealization>> realizations;
    for (const auto& member : fstar.members()) {
        realizations.push_back(family_realizations(h, member));
    }

    Step1Result out;
    SearchBudget sb{budget, 0};
    for (;;) {
        std::vector<int> over;
        for (int i = 0; i < k; ++i) {
            if (state.prime_edges(i) > threshold) {
                over.push_back(i);
            }
        }
        if (over.empty()) {
            out.stop_reason = "thresholds met";
            break;
        }
        const auto active = beta_active(state, beta);

        std::optional<Step1Copy> found;
        for (int i : over) {
            const auto own = state.prime_part(i);
            std::vector<Vertex> others;
            std::vector<std::vector<Vertex>> active_in(k);
            for (int j = 0; j < k; ++j) {
                active_in[j] = filter(state.prime_part(j), active);
                if (j != i) {
                    others.push_back(j);
                }
            }
            for (std::size_t mi = 0; mi < fstar.size() && !found; ++mi) {
                const Graph& member = fstar.members()[mi];
                const AllowedSets in_own(member.order(), own);
                for_each_embedding(
                    member, residual, in_own,
                    [&](std::span<const Vertex> fmap) {
                        for (const auto& real : realizations[mi]) {
                            std::vector<int> rest;
                            for (int c = 0; c < static_cast<int>(real.colouring.size()); ++c) {
                                if (c != real.kept_first && c != real.kept_second) {
                                    rest.push_back(c);
                                }
                            }
                            auto parts = others;
                            do {
                                AllowedSets allowed(h.order());
                                for (std::size_t f = 0; f < fmap.size(); ++f) {
                                    allowed[real.h_vertex[f]] = {fmap[f]};
                                }
                                for (std::size_t c = 0; c < rest.size(); ++c) {
                                    for (Vertex hv : real.colouring[rest[c]]) {
                                        allowed[hv] = active_in[parts[c]];
                                    }
                                }
                                std::optional<Embedding> copy;
                                for_each_embedding(
                                    h, residual, allowed,
                                    [&](std::span<const Vertex> map) {
                                        copy = Embedding{std::vector<Vertex>(map.begin(), map.end())};
                                        return false;
                                    },
                                    &sb, wide);
                                if (copy) {
                                    found = Step1Copy{std::move(*copy), i, mi, real.h_vertex};
                                    return false;
                                }
                                if (sb.exhausted()) {
                                    return false;
                                }
                            } while (std::next_permutation(parts.begin(), parts.end()));
                        }
                        return true;
                    },
                    &sb, wide);
                if (sb.exhausted()) {
                    break;
                }
            }
            if (found || sb.exhausted()) {
                break;
            }
        }
        if (!found) {
            out.stop_reason = sb.exhausted() ? "budget exhausted" : "step1-stalled";
            break;
        }
        delete_copy(residual, state, h, found->copy);
        out.copies.push_back(std::move(*found));
    }
    out.nodes = sb.used;
    return out;
}

Step2Result step2_deplete(Graph& residual, PartitionState& state, const Graph& h, int sigma, double beta,
                          std::uint64_t budget) {
    check_search_order(residual.order(), "step2_deplete");
    const Limits wide = wide_limits({});
    const int k = state.classes();
    const double threshold = beta * beta * state.order();

    // (colouring, index of a smallest class) for colourings that have a sigma-class
    std::vector<std::pair<ColourPartition, int>> shapes;
    for (auto& col : proper_colorings(h, k + 1)) {
        for (int c = 0; c < static_cast<int>(col.size()); ++c) {
            if (static_cast<int>(col[c].size()) == sigma) {
                shapes.emplace_back(std::move(col), c);
                break;
            }
        }
    }

    Step2Result out;
    SearchBudget sb{budget, 0};
    for (;;) {
        std::vector<Vertex> eligible;
        for (Vertex x : state.x_vertices()) {
            bool all = true;
            for (int i = 0; i < k && all; ++i) {
                all = state.deg_to_prime(x, i) > threshold;
            }
            if (all) {
                eligible.push_back(x);
            }
        }
        if (eligible.empty()) {
            out.stop_reason = "X' empty";
            break;
        }
        if (static_cast<int>(eligible.size()) < sigma) {
            out.stop_reason = "fewer than σ(H) eligible vertices";
            break;
        }
        std::vector<std::vector<Vertex>> primes(k);
        for (int j = 0; j < k; ++j) {
            primes[j] = state.prime_part(j);
        }

        std::optional<Step2Copy> found;
        for (const auto& [col, small] : shapes) {
            std::vector<int> rest;
            for (int c = 0; c < static_cast<int>(col.size()); ++c) {
                if (c != small) {
                    rest.push_back(c);
                }
            }
            std::vector<int> parts(k);
            std::iota(parts.begin(), parts.end(), 0);
            do {
                AllowedSets allowed(h.order());
                for (Vertex hv : col[small]) {
                    allowed[hv] = eligible;
                }
                for (std::size_t c = 0; c < rest.size(); ++c) {
                    for (Vertex hv : col[rest[c]]) {
                        allowed[hv] = primes[parts[c]];
                    }
                }
                for_each_embedding(
                    h, residual, allowed,
                    [&](std::span<const Vertex> map) {
                        Step2Copy copy{Embedding{std::vector<Vertex>(map.begin(), map.end())}, {}};
                        for (Vertex hv : col[small]) {
                            copy.x_vertices.push_back(map[hv]);
                        }
                        std::sort(copy.x_vertices.begin(), copy.x_vertices.end());
                        found = std::move(copy);
                        return false;
                    },
                    &sb, wide);
            } while (!found && !sb.exhausted() && std::next_permutation(parts.begin(), parts.end()));
            if (found || sb.exhausted()) {
                break;
            }
        }
        if (!found) {
            out.stop_reason = sb.exhausted() ? "budget exhausted" : "no copy found";
            break;
        }
        delete_copy(residual, state, h, found->copy);
        out.copies.push_back(std::move(*found));
    }
    out.nodes = sb.used;
    return out;
}

// ---------------------------------------------------------------------------

DecomposeResult decompose(const Graph& g, const Graph& h, const PipelineParams& params) {
    const int chi = chromatic_number(h, params.limits);
    const int r = params.r == 0 ? chi : params.r;
    if (r != chi || r < 3) {
        throw DomainError("decompose needs r = chi(H) >= 3 (chi(H) = " + std::to_string(chi) + ")");
    }
    if (g.order() < h.order()) {
        throw DomainError("decompose needs v(G) >= v(H)");
    }
    if (!(params.beta > 0 && params.beta < 1) || !(params.gamma > 0 && params.gamma < 1)) {
        throw DomainError("beta and gamma must lie in (0, 1)");
    }
    const int k = r - 1;

    DecomposeResult result;
    PipelineReport& rep = result.report;
    rep.n = g.order();
    rep.r = r;
    rep.edges = g.size();
    rep.pattern_edges = h.size();
    rep.beta = params.beta;
    rep.gamma = params.gamma;
    rep.beta_theory = theory_beta(h);
    rep.gamma_theory = theory_gamma(h);
    rep.c_per_k = h.order() / rep.beta_theory;
    rep.target = turan_number(g.order(), r);
    rep.class_of.assign(g.order(), -1);
    rep.in_x.assign(g.order(), false);

    auto peeled = peel_min_degree(g, r);
    rep.peel_trace = peeled.trace;
    Graph residual = std::move(peeled.graph);
    const auto& kept = peeled.kept;
    const int n = residual.order();
    rep.peeled_order = n;
    check_search_order(n, "decompose");

    HDecomposition& d = result.decomposition;
    d.pattern = h;

    if (n > 0) {
        StabilityReport srep;
        PartitionState state = stability_partition(residual, k, params.gamma, params.seed, params.partition_restarts,
                                                   &srep);
        rep.flags.stability_a = srep.property_a;
        rep.flags.stability_b = srep.property_b;
        rep.flags.stability_c = srep.property_c;
        for (int i = 0; i < k; ++i) {
            rep.m += state.part_edges(i);
        }

        identify_x(state, residual, params.beta);
        int n_prime = 0;
        for (int i = 0; i < k; ++i) {
            rep.m_prime += state.prime_edges(i);
            rep.part_sizes.push_back(static_cast<int>(state.part(i).size()));
            rep.x_sizes.push_back(static_cast<int>(state.x_part(i).size()));
            n_prime += static_cast<int>(state.prime_part(i).size());
        }
        rep.m_x = rep.m - rep.m_prime;
        for (Vertex x : state.x_vertices()) {
            rep.m_x_per_vertex.emplace_back(kept[x], state.deg_to_prime(x, state.class_of(x)));
        }
        for (Vertex v = 0; v < n; ++v) {
            rep.class_of[kept[v]] = state.class_of(v);
            rep.in_x[kept[v]] = state.in_x(v);
        }
        rep.x_threshold = 0.5 * params.beta * n;
        rep.active_threshold = (1.0 / k - 2 * params.beta) * n_prime;
        rep.step2_threshold = params.beta * params.beta * n;

        // Step-1 entry conditions, on G - X.
        {
            const double np = n_prime;
            bool min_deg = true;
            bool max_deg = true;
            for (Vertex v = 0; v < n; ++v) {
                if (state.in_x(v)) {
                    continue;
                }
                for (int j = 0; j < k; ++j) {
                    if (j == state.class_of(v)) {
                        max_deg = max_deg && state.deg_to_prime(v, j) <= 2 * params.beta * np;
                    } else {
                        min_deg = min_deg && state.deg_to_prime(v, j) >= (1.0 / k - params.beta) * np;
                    }
                }
            }
            rep.flags.step1_min_degree = min_deg;
            rep.flags.step1_max_degree = max_deg;
            rep.flags.step1_sparse_parts =
                static_cast<double>(rep.m_prime) <= params.beta * params.beta * np * np / static_cast<double>(h.size());
        }

        const auto fstar = minimal_subfamily(decomposition_family(h, params.limits), params.limits);
        rep.step1_threshold_order = n_prime;
        if (params.step1_threshold) {
            rep.step1_threshold = *params.step1_threshold;
            rep.step1_threshold_source = "supplied";
        } else {
            const bool one_edge = std::any_of(fstar.members().begin(), fstar.members().end(),
                                              [](const Graph& f) { return f.size() == 1; });
            if (n_prime > params.limits.enumeration_vertices && !one_edge) {
                throw DomainError("step-1 threshold: n' = " + std::to_string(n_prime) +
                                  " exceeds the enumeration cap; supply a threshold");
            }
            ExtremalOptions eo;
            eo.limits = params.limits;
            eo.cache = params.cache;
            const auto rec = extremal_number(n_prime, fstar, eo);
            rep.step1_threshold = rec.value;
            rep.step1_threshold_source = rec.exact() ? "exact biex(n')" : "lower-bound biex(n')";
        }

        // Only G - X takes part in Step 1; X edges are invisible to it.
        const auto s1 = step1_deplete(residual, state, h, fstar, params.beta, rep.step1_threshold, params.step1_budget);
        rep.step1_copies = s1.copies.size();
        rep.step1_stop = s1.stop_reason;
        rep.step1_nodes = s1.nodes;

        // Step-2 entry conditions, on G_1.
        {
            bool dense = true;
            const double b6n2 = std::pow(params.beta, 6) * n * n;
            for (int i = 0; i < k; ++i) {
                const auto vi = state.prime_part(i);
                for (int j = i + 1; j < k; ++j) {
                    const auto vj_size = state.prime_part(j).size();
                    std::size_t cross = 0;
                    for (Vertex v : vi) {
                        cross += state.deg_to_prime(v, j);
                    }
                    dense = dense && static_cast<double>(cross) >
                                         static_cast<double>(vi.size() * vj_size) - b6n2;
                }
            }
            rep.flags.step2_dense_pairs = dense;
            rep.flags.step2_small_x =
                static_cast<double>(state.x_vertices().size()) <= std::pow(params.beta, 6) * n;
        }

        const int sigma = chromatic_excess(h, params.limits);
        const auto s2 = step2_deplete(residual, state, h, sigma, params.beta, params.step2_budget);
        rep.step2_copies = s2.copies.size();
        rep.step2_stop = s2.stop_reason;
        rep.step2_nodes = s2.nodes;

        const auto lift = [&](const Embedding& e) {
            Embedding out;
            for (Vertex v : e.map) {
                out.map.push_back(kept[v]);
            }
            return out;
        };
        for (const auto& c : s1.copies) {
            rep.step1_copy_ids.push_back(d.copies.size());
            d.copies.push_back(lift(c.copy));
        }
        for (const auto& c : s2.copies) {
            rep.step2_copy_ids.push_back(d.copies.size());
            d.copies.push_back(lift(c.copy));
        }
    }

    Graph rest = g;
    for (const auto& c : d.copies) {
        for (const auto& e : image_edges(h, c)) {
            rest.remove_edge(e.u, e.v);
        }
    }
    d.singles = rest.edges();
    rep.t = g.size() - (h.size() - 1) * d.copies.size();
    rep.success = rep.t <= rep.target;
    return result;
}

Verification verify_decomposition(const Graph& g, const HDecomposition& d) {
    const int n = g.order();
    std::vector<int> covered(static_cast<std::size_t>(n) * n, 0);
    const auto edge_name = [](Vertex a, Vertex b) {
        return "(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
    };
    const auto fail = [](std::string what) { return Verification{false, std::move(what)}; };
    const auto cover = [&](Vertex a, Vertex b) {
        auto& c = covered[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)];
        return ++c == 1;
    };

    for (std::size_t i = 0; i < d.copies.size(); ++i) {
        const auto& map = d.copies[i].map;
        const std::string name = "copy " + std::to_string(i);
        if (static_cast<int>(map.size()) != d.pattern.order()) {
            return fail(name + ": wrong number of vertices");
        }
        std::vector<bool> used(n, false);
        for (Vertex v : map) {
            if (v < 0 || v >= n) {
                return fail(name + ": vertex " + std::to_string(v) + " out of range");
            }
            if (used[v]) {
                return fail(name + ": not injective at vertex " + std::to_string(v));
            }
            used[v] = true;
        }
        for (const auto& e : d.pattern.edges()) {
            const Vertex a = map[e.u];
            const Vertex b = map[e.v];
            if (!g.has_edge(a, b)) {
                return fail(name + ": non-edge " + edge_name(a, b));
            }
            if (!cover(a, b)) {
                return fail("edge covered twice: " + edge_name(a, b) + " in " + name);
            }
        }
    }
    for (const auto& e : d.singles) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
            return fail("single " + edge_name(e.u, e.v) + " out of range");
        }
        if (!g.has_edge(e.u, e.v)) {
            return fail("single " + edge_name(e.u, e.v) + " is not an edge");
        }
        if (!cover(e.u, e.v)) {
            return fail("edge covered twice: " + edge_name(e.u, e.v) + " as a single");
        }
    }
    for (const auto& e : g.edges()) {
        if (covered[static_cast<std::size_t>(e.u) * n + e.v] == 0) {
            return fail("edge uncovered: " + edge_name(e.u, e.v));
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

LowerBoundResult lower_bound_construction(int n, const Graph& h, const ExtremalOptions& options) {
    const int r = chromatic_number(h, options.limits);
    if (r < 3) {
        throw DomainError("lower_bound_construction needs chi(H) >= 3");
    }
    const auto rec = biex(n, h, options);
    if (!rec.exact()) {
        throw DomainError("lower_bound_construction: no exact biex witness at n = " + std::to_string(n));
    }
    LowerBoundResult out;
    auto& cert = out.certificate;
    cert.n = n;
    cert.r = r;
    cert.biex_value = rec.value;
    cert.biex_witness = rec.witness;
    const Graph& w = rec.witness;
    const int k = (n + r - 2) / (r - 1);
    const std::size_t denom = static_cast<std::size_t>(r - 1) * (r - 1);
    cert.required_plant_edges = (w.size() + denom - 1) / denom;

    std::vector<Vertex> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    while (static_cast<int>(alive.size()) > k) {
        const Graph cur = w.induced(alive);
        std::size_t drop = 0;
        for (std::size_t i = 1; i < alive.size(); ++i) {
            if (cur.degree(static_cast<Vertex>(i)) < cur.degree(static_cast<Vertex>(drop))) {
                drop = i;
            }
        }
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    cert.selection = "greedy-min-degree";
    if (w.induced(alive).size() < cert.required_plant_edges) {
        // Exhaustive over k-subsets; first maximum in lexicographic order.
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + k, true);
        std::size_t best = 0;
        do {
            std::vector<Vertex> s;
            for (Vertex v = 0; v < n; ++v) {
                if (pick[v]) {
                    s.push_back(v);
                }
            }
            const auto e = w.induced(s).size();
            if (e > best) {
                best = e;
                alive = s;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        cert.selection = "exhaustive";
    }
    cert.plant_vertices = alive;
    cert.plant = w.induced(alive);

    std::vector<Vertex> targets(k);
    std::iota(targets.begin(), targets.end(), 0);
    out.graph = plant(turan_graph(n, r - 1), cert.plant, targets).graph;
    cert.turan_edges = turan_number(n, r);
    cert.edges = out.graph.size();
    cert.bound_holds = cert.edges >= cert.turan_edges + cert.required_plant_edges;
    if (n <= std::min(options.limits.embedding_vertices, Limits::kMaxSearchVertices)) {
        cert.h_freeness = contains_subgraph(out.graph, h, options.limits) ? "failed" : "verified";
    } else {
        cert.h_freeness = "unverified";
    }
    return out;
}

}  // namespace hdecomp
