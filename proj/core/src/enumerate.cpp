#include "hdecomp/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "hdecomp/error.hpp"

namespace hdecomp {

namespace {

// Edge whose canonical endpoint positions are largest as (max, min).
Edge canonical_last_edge(const Graph& g, const CanonicalForm& cf) {
    Edge best{-1, -1};
    std::pair<int, int> best_key{-1, -1};
    for (const auto& e : g.edges()) {
        const int a = cf.labeling[e.u];
        const int b = cf.labeling[e.v];
        const std::pair<int, int> key{std::max(a, b), std::min(a, b)};
        if (key > best_key) {
            best_key = key;
            best = e;
        }
    }
    return best;
}

std::vector<int> sorted_degrees_without(const Graph& g, Edge e) {
    std::vector<int> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        d[v] = g.degree(v);
    }
    --d[e.u];
    --d[e.v];
    std::sort(d.begin(), d.end());
    return d;
}

class Orderly {
public:
    Orderly(const std::function<bool(const Graph&, Edge)>& admissible,
            const std::function<void(const Graph&, const CanonicalForm&)>& visit, SearchBudget* budget,
            const Limits& limits)
        : admissible_(admissible), visit_(visit), budget_(budget), limits_(limits) {}

    OrderlyResult run(int n) {
        Graph root(n);
        expand(root, canonical_form(root, limits_));
        return result_;
    }

private:
    // Returns false once the budget is exhausted.
    bool expand(const Graph& g, const CanonicalForm& cf) {
        if (budget_ != nullptr) {
            if (budget_->exhausted()) {
                result_.complete = false;
                return false;
            }
            ++budget_->used;
        }
        ++result_.graphs_visited;
        visit_(g, cf);

        std::unordered_set<std::string> seen;
        Graph child = g;
        const int n = g.order();
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) {
                    continue;
                }
                child.add_edge(u, v);
                const Edge added{u, v};
                if (admissible_(child, added)) {
                    auto child_cf = canonical_form(child, limits_);
                    if (seen.insert(child_cf.code).second && is_canonical_augmentation(child, added, child_cf, cf)) {
                        if (!expand(child, child_cf)) {
                            return false;
                        }
                    }
                }
                child.remove_edge(u, v);
            }
        }
        return true;
    }

    bool is_canonical_augmentation(const Graph& child, Edge added, const CanonicalForm& child_cf,
                                   const CanonicalForm& parent) const {
        const Edge last = canonical_last_edge(child, child_cf);
        if (last == added) {
            return true;
        }
        if (sorted_degrees_without(child, last) != sorted_degrees_without(child, added)) {
            return false;
        }
        Graph reduced = child;
        reduced.remove_edge(last.u, last.v);
        return canonical_code(reduced, limits_) == parent.code;
    }

    const std::function<bool(const Graph&, Edge)>& admissible_;
    const std::function<void(const Graph&, const CanonicalForm&)>& visit_;
    SearchBudget* budget_;
    const Limits& limits_;
    OrderlyResult result_;
};

}  // namespace

OrderlyResult orderly_generate(int n, const std::function<bool(const Graph& child, Edge added)>& admissible,
                               const std::function<void(const Graph&, const CanonicalForm&)>& visit,
                               SearchBudget* budget, const Limits& limits) {
    if (n < 0) {
        throw DomainError("negative order");
    }
    return Orderly(admissible, visit, budget, limits).run(n);
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit, const Limits& limits) {
    if (n > limits.enumeration_vertices) {
        throw SizeError("enumerate_graphs: n = " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(limits.enumeration_vertices));
    }
    orderly_generate(
        n, [](const Graph&, Edge) { return true; }, [&](const Graph& g, const CanonicalForm&) { visit(g); },
        nullptr, limits);
}

std::vector<Graph> enumerate_graphs(int n, const Limits& limits) {
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, limits);
    return out;
}

}  // namespace hdecomp
