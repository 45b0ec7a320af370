#include "hdecomp/coloring.hpp"

#include <algorithm>

#include "hdecomp/error.hpp"

namespace hdecomp {

namespace {

class ColouringWalk {
public:
    ColouringWalk(const Graph& h, int r, const std::function<bool(const ColourPartition&)>& visit)
        : h_(h), r_(r), visit_(visit), colour_(h.order(), -1) {}

    void run() {
        if (h_.order() == 0) {
            if (r_ == 0) {
                visit_({});
            }
            return;
        }
        assign(0, 0);
    }

private:
    // Restricted growth: vertex v takes a colour no larger than one past the
    // largest colour used so far, which fixes one representative per partition.
    bool assign(Vertex v, int used) {
        const int n = h_.order();
        if (v == n) {
            if (used != r_) {
                return true;
            }
            ColourPartition classes(r_);
            for (Vertex u = 0; u < n; ++u) {
                classes[colour_[u]].push_back(u);
            }
            return visit_(classes);
        }
        if (used + (n - v) < r_) {
            return true;
        }
        const int top = std::min(used, r_ - 1);
        for (int c = 0; c <= top; ++c) {
            bool clash = false;
            for (Vertex w : h_.neighbors(v)) {
                if (w < v && colour_[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) {
                continue;
            }
            colour_[v] = c;
            if (!assign(v + 1, std::max(used, c + 1))) {
                return false;
            }
        }
        colour_[v] = -1;
        return true;
    }

    const Graph& h_;
    int r_;
    const std::function<bool(const ColourPartition&)>& visit_;
    std::vector<int> colour_;
};

}  // namespace

void for_each_proper_coloring(const Graph& h, int r, const std::function<bool(const ColourPartition&)>& visit,
                              const Limits& limits) {
    if (h.order() > limits.embedding_vertices) {
        throw SizeError("proper_colorings: order " + std::to_string(h.order()) + " exceeds cap " +
                        std::to_string(limits.embedding_vertices));
    }
    if (r < 0 || r > h.order()) {
        return;
    }
    ColouringWalk(h, r, visit).run();
}

std::vector<ColourPartition> proper_colorings(const Graph& h, int r, const Limits& limits) {
    std::vector<ColourPartition> out;
    for_each_proper_coloring(
        h, r,
        [&](const ColourPartition& p) {
            out.push_back(p);
            return true;
        },
        limits);
    return out;
}

int chromatic_number(const Graph& h, const Limits& limits) {
    for (int r = 0; r <= h.order(); ++r) {
        bool found = false;
        for_each_proper_coloring(
            h, r,
            [&](const ColourPartition&) {
                found = true;
                return false;
            },
            limits);
        if (found) {
            return r;
        }
    }
    return h.order();
}

}  // namespace hdecomp
