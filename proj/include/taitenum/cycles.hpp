#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "taitenum/enumerate.hpp"

namespace taitenum {

// Unordered pair of distinct colors, stored with first < second.
struct ColorPair {
    Color first;
    Color second;

    friend auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

std::string to_string(ColorPair p);

// Spanning 2-regular subgraph made of the edges carrying either color of the pair.
struct TwoFactor {
    ColorPair colors;
    std::vector<EdgeId> edges;  // ascending
};

// A Hamiltonian cycle as a walk: vertices[0] = 0, vertices[1] is the smaller of
// 0's two cycle neighbors, and edges[i] joins vertices[i] to vertices[i+1]
// (cyclically). Edge ids are kept because parallel edges make the vertex
// sequence alone ambiguous.
struct CanonicalCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    // "0-1-2-...-0"
    std::string to_string() const;

    friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;
};

// The red-green, red-blue and green-blue factors, in that order.
// Throws std::invalid_argument if the coloring is not proper.
std::array<TwoFactor, 3> two_factors(const CubicGraph& g, ColoringView coloring);

// Walks the factor from vertex 0; a cycle closing after all n vertices is
// returned in canonical form. Throws std::invalid_argument for a subgraph that
// is not 2-regular and spanning.
std::optional<CanonicalCycle> hamiltonian_of(const CubicGraph& g, const TwoFactor& factor);

// Paints the cycle in alternating colors and the complementary matching in
// the third, then renames colors so vertex 0's edges read red, green, blue.
// Throws std::invalid_argument if the cycle is not a Hamiltonian cycle of g.
TaitColoring coloring_from_cycle(const CubicGraph& g, const CanonicalCycle& cycle);

using CycleVisitor = std::function<Visit(const CanonicalCycle&, ColorPair)>;

struct HamiltonOptions {
    std::optional<std::uint64_t> cycle_limit;
    std::function<void(const SearchStats&)> progress;
    std::uint64_t progress_every = std::uint64_t{1} << 24;
};

// Colorings -> factors -> connected factors. Every Hamiltonian cycle of g is
// reported exactly once: distinct cycles induce distinct normalized colorings
// and the three factors of one coloring are distinct.
SearchStats enumerate_hamiltonian(const CubicGraph& g, const SchedulePlan& plan, const CycleVisitor& visitor,
                                  const HamiltonOptions& options = {});
SearchStats enumerate_hamiltonian(const CubicGraph& g, const CycleVisitor& visitor,
                                  const HamiltonOptions& options = {});

// Number of Hamiltonian factors of one coloring (0..3).
int count_hamiltonian_factors(const CubicGraph& g, ColoringView coloring);

// Counting pipeline split over worker threads; fills colorings_found and cycles_found.
SearchStats count_hamiltonian(const CubicGraph& g, const SchedulePlan& plan, const SplitOptions& options);

}  // namespace taitenum
