#include "hdecomp/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "hdecomp/error.hpp"
#include "hdecomp/graph6.hpp"

namespace hdecomp {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()), rows_(g.order()) {
        for (Vertex v = 0; v < n_; ++v) {
            rows_[v] = g.row64(v);
        }
        orbit_.resize(n_);
        std::iota(orbit_.begin(), orbit_.end(), 0);
    }

    CanonicalForm run() {
        std::vector<Mask> cells;
        if (n_ > 0) {
            cells.push_back(n_ == 64 ? ~Mask{0} : bit(n_) - 1);
        }
        search(std::move(cells), 0);

        CanonicalForm out;
        out.labeling = best_position_;
        Graph canon(n_);
        for (int i = 0; i < n_; ++i) {
            for (Mask m = best_rows_[i] & ~((bit(i) << 1) - 1); m != 0; m &= m - 1) {
                canon.add_edge(i, std::countr_zero(m));
            }
        }
        out.code = emit_graph6(canon);
        return out;
    }

private:
    // Split cells by neighbour counts into each splitter until equitable.
    void refine(std::vector<Mask>& cells) const {
        std::vector<Mask> next;
        std::vector<std::pair<int, Vertex>> counts;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const Mask splitter = cells[s];
                next.clear();
                for (Mask cell : cells) {
                    if (std::has_single_bit(cell)) {
                        next.push_back(cell);
                        continue;
                    }
                    counts.clear();
                    for (Mask m = cell; m != 0; m &= m - 1) {
                        const Vertex v = std::countr_zero(m);
                        counts.emplace_back(std::popcount(rows_[v] & splitter), v);
                    }
                    std::sort(counts.begin(), counts.end());
                    if (counts.front().first == counts.back().first) {
                        next.push_back(cell);
                        continue;
                    }
                    changed = true;
                    Mask group = 0;
                    int current = counts.front().first;
                    for (auto [c, v] : counts) {
                        if (c != current) {
                            next.push_back(group);
                            group = 0;
                            current = c;
                        }
                        group |= bit(v);
                    }
                    next.push_back(group);
                }
                if (changed) {
                    cells.swap(next);
                }
            }
        }
    }

    void search(std::vector<Mask> cells, int depth) {
        refine(cells);

        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (!std::has_single_bit(cells[i]) &&
                (target == cells.size() || std::popcount(cells[i]) < std::popcount(cells[target]))) {
                target = i;
            }
        }
        if (target == cells.size()) {
            evaluate_leaf(cells);
            return;
        }

        Mask tried = 0;
        const Mask cell = cells[target];
        for (Mask m = cell; m != 0; m &= m - 1) {
            const Vertex v = std::countr_zero(m);
            if (is_twin_of_any(v, tried)) {
                continue;
            }
            if (depth == 0 && root_orbit_seen(v, tried)) {
                continue;
            }
            tried |= bit(v);
            std::vector<Mask> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(bit(v));
                    child.push_back(cell & ~bit(v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            search(std::move(child), depth + 1);
        }
    }

    bool is_twin_of_any(Vertex v, Mask tried) const {
        for (Mask m = tried; m != 0; m &= m - 1) {
            const Vertex u = std::countr_zero(m);
            if ((rows_[u] & ~bit(v)) == (rows_[v] & ~bit(u))) {
                return true;
            }
        }
        return false;
    }

    Vertex find(Vertex v) {
        while (orbit_[v] != v) {
            orbit_[v] = orbit_[orbit_[v]];
            v = orbit_[v];
        }
        return v;
    }

    bool root_orbit_seen(Vertex v, Mask tried) {
        const Vertex root = find(v);
        for (Mask m = tried; m != 0; m &= m - 1) {
            if (find(std::countr_zero(m)) == root) {
                return true;
            }
        }
        return false;
    }

    void evaluate_leaf(const std::vector<Mask>& cells) {
        std::vector<Vertex> position(n_);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            position[std::countr_zero(cells[i])] = static_cast<Vertex>(i);
        }
        std::vector<Mask> rows(n_, 0);
        for (Vertex v = 0; v < n_; ++v) {
            Mask r = 0;
            for (Mask m = rows_[v]; m != 0; m &= m - 1) {
                r |= bit(position[std::countr_zero(m)]);
            }
            rows[position[v]] = r;
        }

        if (best_rows_.empty() || rows > best_rows_) {
            best_rows_ = std::move(rows);
            best_position_ = std::move(position);
        } else if (rows == best_rows_) {
            // Same relabeled graph: best^-1 o position is an automorphism.
            std::vector<Vertex> inverse_best(n_);
            for (Vertex v = 0; v < n_; ++v) {
                inverse_best[best_position_[v]] = v;
            }
            for (Vertex v = 0; v < n_; ++v) {
                const Vertex a = find(v);
                const Vertex b = find(inverse_best[position[v]]);
                if (a != b) {
                    orbit_[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }

    int n_;
    std::vector<Mask> rows_;
    std::vector<Vertex> orbit_;
    std::vector<Mask> best_rows_;
    std::vector<Vertex> best_position_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const Limits& limits) {
    const int cap = std::min(limits.embedding_vertices, Limits::kMaxSearchVertices);
    if (g.order() > cap) {
        throw SizeError("canonical_form: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
    }
    return CanonicalSearch(g).run();
}

bool are_isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    return canonical_code(a, limits) == canonical_code(b, limits);
}

bool canonical_less(const Graph& a, const Graph& b, const Limits& limits) {
    if (a.order() != b.order()) {
        return a.order() < b.order();
    }
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return canonical_code(a, limits) < canonical_code(b, limits);
}

}  // namespace hdecomp
