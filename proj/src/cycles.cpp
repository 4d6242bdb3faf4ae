#include "taitenum/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace taitenum {

std::string to_string(ColorPair p) {
    return std::string(to_string(p.first)) + "-" + std::string(to_string(p.second));
}

std::string CanonicalCycle::to_string() const {
    std::string s;
    for (VertexId v : vertices) s += std::to_string(v) + "-";
    s += vertices.empty() ? "" : std::to_string(vertices.front());
    return s;
}

namespace {

constexpr std::array<ColorPair, 3> kPairs{{
    {Color::Red, Color::Green},
    {Color::Red, Color::Blue},
    {Color::Green, Color::Blue},
}};

Color third_color(ColorPair p) {
    return static_cast<Color>(3 - static_cast<int>(p.first) - static_cast<int>(p.second));
}

// Walks the component of vertex 0 in the subgraph formed by the two edges
// at each vertex reported by `pick`. Starts toward the smaller neighbor.
// Returns the number of vertices on that cycle.
template <class Pick>
int walk_from_zero(const CubicGraph& g, Pick pick, CanonicalCycle* out) {
    auto [ea, eb] = pick(0);
    VertexId a = g.other_end(ea, 0);
    VertexId b = g.other_end(eb, 0);
    EdgeId edge = (b < a || (b == a && eb < ea)) ? eb : ea;
    VertexId at = 0;
    int length = 0;
    do {
        if (out) {
            out->vertices.push_back(at);
            out->edges.push_back(edge);
        }
        ++length;
        at = g.other_end(edge, at);
        auto [x, y] = pick(at);
        edge = x == edge ? y : x;
    } while (at != 0 && length <= g.vertex_count());
    return length;
}

// The two edges at v whose color is not `excluded`, in incidence order.
struct ColorPicker {
    const CubicGraph& g;
    ColoringView coloring;
    Color excluded;

    std::pair<EdgeId, EdgeId> operator()(VertexId v) const {
        const auto& inc = g.incidence(v);
        if (coloring[inc[0]] == excluded) return {inc[1], inc[2]};
        if (coloring[inc[1]] == excluded) return {inc[0], inc[2]};
        return {inc[0], inc[1]};
    }
};

}  // namespace

std::array<TwoFactor, 3> two_factors(const CubicGraph& g, ColoringView coloring) {
    if (!is_proper(g, coloring)) throw std::invalid_argument("two_factors: coloring is not proper");
    std::array<TwoFactor, 3> factors;
    for (std::size_t k = 0; k < kPairs.size(); ++k) {
        factors[k].colors = kPairs[k];
        Color excluded = third_color(kPairs[k]);
        for (const Edge& e : g.edges()) {
            if (coloring[e.id] != excluded) factors[k].edges.push_back(e.id);
        }
    }
    return factors;
}

std::optional<CanonicalCycle> hamiltonian_of(const CubicGraph& g, const TwoFactor& factor) {
    const int n = g.vertex_count();
    std::vector<std::array<EdgeId, 2>> at(static_cast<std::size_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    auto add = [&](VertexId v, EdgeId e) {
        if (degree[v] < 2) at[v][degree[v]] = e;
        ++degree[v];
    };
    for (EdgeId e : factor.edges) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("hamiltonian_of: unknown edge id");
        add(g.edge(e).u, e);
        add(g.edge(e).v, e);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] != 2) throw std::invalid_argument("hamiltonian_of: subgraph is not 2-regular spanning");
    }
    auto pick = [&](VertexId v) { return std::pair{at[v][0], at[v][1]}; };
    if (walk_from_zero(g, pick, nullptr) != n) return std::nullopt;
    CanonicalCycle cycle;
    walk_from_zero(g, pick, &cycle);
    return cycle;
}

TaitColoring coloring_from_cycle(const CubicGraph& g, const CanonicalCycle& cycle) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (cycle.vertices.size() != n || cycle.edges.size() != n) {
        throw std::invalid_argument("coloring_from_cycle: cycle does not have n vertices and edges");
    }
    std::vector<char> seen_vertex(n, 0);
    std::vector<char> on_cycle(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = cycle.vertices[i];
        VertexId w = cycle.vertices[(i + 1) % n];
        EdgeId e = cycle.edges[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen_vertex[v]) {
            throw std::invalid_argument("coloring_from_cycle: vertex sequence is not a permutation");
        }
        seen_vertex[v] = 1;
        if (e < 0 || e >= g.edge_count() || on_cycle[e]) {
            throw std::invalid_argument("coloring_from_cycle: bad or repeated edge id");
        }
        const Edge& ed = g.edge(e);
        if (!((ed.u == v && ed.v == w) || (ed.u == w && ed.v == v))) {
            throw std::invalid_argument("coloring_from_cycle: edge " + std::to_string(e) + " does not join " +
                                        std::to_string(v) + " and " + std::to_string(w));
        }
        on_cycle[e] = 1;
    }

    std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), Color::Blue);
    for (std::size_t i = 0; i < n; ++i) colors[cycle.edges[i]] = i % 2 == 0 ? Color::Red : Color::Green;

    // Rename so that vertex 0's incidence edges read red, green, blue.
    std::array<Color, 3> rename{};
    const auto& seed = g.incidence(0);
    for (int k = 0; k < 3; ++k) rename[static_cast<std::size_t>(colors[seed[k]])] = static_cast<Color>(k);
    for (Color& c : colors) c = rename[static_cast<std::size_t>(c)];
    return TaitColoring(std::move(colors));
}

int count_hamiltonian_factors(const CubicGraph& g, ColoringView coloring) {
    int found = 0;
    for (ColorPair p : kPairs) {
        found += walk_from_zero(g, ColorPicker{g, coloring, third_color(p)}, nullptr) == g.vertex_count();
    }
    return found;
}

SearchStats enumerate_hamiltonian(const CubicGraph& g, const SchedulePlan& plan, const CycleVisitor& visitor,
                                  const HamiltonOptions& options) {
    std::uint64_t cycles = 0;
    bool stop = false;
    EnumerateOptions inner;
    inner.progress = options.progress;
    inner.progress_every = options.progress_every;
    auto per_coloring = [&](ColoringView coloring) {
        for (ColorPair p : kPairs) {
            ColorPicker pick{g, coloring, third_color(p)};
            if (walk_from_zero(g, pick, nullptr) != g.vertex_count()) continue;
            ++cycles;
            if (visitor) {
                CanonicalCycle cycle;
                walk_from_zero(g, pick, &cycle);
                if (visitor(cycle, p) == Visit::Stop) stop = true;
            }
            if (stop || (options.cycle_limit && cycles >= *options.cycle_limit)) {
                stop = true;
                return Visit::Stop;
            }
        }
        return Visit::Continue;
    };
    SearchStats stats = enumerate_colorings(g, plan, per_coloring, inner);
    stats.cycles_found = cycles;
    return stats;
}

SearchStats enumerate_hamiltonian(const CubicGraph& g, const CycleVisitor& visitor,
                                  const HamiltonOptions& options) {
    return enumerate_hamiltonian(g, build_schedule(g), visitor, options);
}

SearchStats count_hamiltonian(const CubicGraph& g, const SchedulePlan& plan, const SplitOptions& options) {
    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<std::uint64_t> per_worker(jobs, 0);
    auto make_visitor = [&](unsigned worker) -> ColoringVisitor {
        return [&g, &slot = per_worker[worker]](ColoringView coloring) {
            slot += static_cast<std::uint64_t>(count_hamiltonian_factors(g, coloring));
            return Visit::Continue;
        };
    };
    SearchStats stats = enumerate_split(g, plan, options, make_visitor);
    for (std::uint64_t c : per_worker) stats.cycles_found += c;
    return stats;
}

}  // namespace taitenum
