#include "taitenum/oracle.hpp"

#include <algorithm>

namespace taitenum::oracle {

namespace {

void check_cap(const CubicGraph& g, int cap) {
    if (g.vertex_count() > cap) {
        throw CapExceeded("oracle refuses n = " + std::to_string(g.vertex_count()) + " (cap " +
                          std::to_string(cap) + ")");
    }
}

// Tries all three colors per edge in edge-id order, pruning an edge as soon as
// it repeats a color already present at one of its endpoints.
template <class Sink>
void all_colorings(const CubicGraph& g, Sink&& sink) {
    const int m = g.edge_count();
    std::vector<int> color(static_cast<std::size_t>(m), -1);
    auto clashes = [&](EdgeId e, int c) {
        const Edge& ed = g.edge(e);
        for (VertexId x : {ed.u, ed.v}) {
            for (EdgeId f : g.incidence(x)) {
                if (f != e && color[f] == c) return true;
            }
        }
        return false;
    };
    auto recurse = [&](auto& self, EdgeId e) -> void {
        if (e == m) {
            sink(color);
            return;
        }
        for (int c = 0; c < 3; ++c) {
            if (clashes(e, c)) continue;
            color[e] = c;
            self(self, e + 1);
            color[e] = -1;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::set<TaitColoring> brute_colorings(const CubicGraph& g, int vertex_cap) {
    check_cap(g, vertex_cap);
    const auto& seed = g.incidence(0);
    std::set<TaitColoring> out;
    all_colorings(g, [&](const std::vector<int>& color) {
        if (color[seed[0]] != 0 || color[seed[1]] != 1 || color[seed[2]] != 2) return;
        std::vector<Color> c;
        c.reserve(color.size());
        for (int x : color) c.push_back(static_cast<Color>(x));
        out.emplace(std::move(c));
    });
    return out;
}

std::uint64_t count_unnormalized(const CubicGraph& g, int vertex_cap) {
    check_cap(g, vertex_cap);
    std::uint64_t total = 0;
    all_colorings(g, [&](const std::vector<int>&) { ++total; });
    return total;
}

std::set<CanonicalCycle> brute_hamiltonian(const CubicGraph& g, int vertex_cap) {
    check_cap(g, vertex_cap);
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> path{0};
    std::vector<EdgeId> path_edges;
    std::set<CanonicalCycle> out;
    used[0] = 1;

    auto extend = [&](auto& self, VertexId at) -> void {
        for (EdgeId e : g.incidence(at)) {
            VertexId next = g.other_end(e, at);
            if (next == 0 && static_cast<int>(path.size()) == n && n >= 3) {
                // Each undirected cycle shows up once per direction; keep the
                // one whose second vertex is the smaller neighbor of 0.
                if (path[1] < path.back()) {
                    CanonicalCycle cycle{path, path_edges};
                    cycle.edges.push_back(e);
                    out.insert(std::move(cycle));
                }
                continue;
            }
            if (used[next]) continue;
            used[next] = 1;
            path.push_back(next);
            path_edges.push_back(e);
            self(self, next);
            path_edges.pop_back();
            path.pop_back();
            used[next] = 0;
        }
    };
    extend(extend, 0);
    return out;
}

}  // namespace taitenum::oracle
