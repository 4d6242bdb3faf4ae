#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taitenum/cycles.hpp"

namespace taitenum::testing {

// random_cubic(10, 2024), frozen when the generator was written.
inline constexpr const char* kRandom10Seed2024 =
    "10 15\n"
    "0 2\n0 6\n0 7\n1 4\n1 7\n1 8\n2 7\n2 9\n3 4\n3 5\n3 6\n4 8\n5 6\n5 9\n8 9\n";

// Two double edges (0=1 and 2=3) joined by the single edges 0-2 and 1-3.
inline constexpr const char* kTheta4 = "4 6\n0 1\n0 1\n0 2\n1 3\n2 3\n2 3\n";

// Double edge at vertex 0 on 6 vertices.
inline constexpr const char* kDoubleAtZero6 = "6 9\n0 1\n0 1\n0 2\n1 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";

// Reference colorings of the cube in canonical search order, indexed by edge id
// (edge ids follow the schedule order [0,1],[0,3],...,[6,7]).
inline std::vector<TaitColoring> cube_table() {
    constexpr Color r = Color::Red, g = Color::Green, b = Color::Blue;
    return {
        TaitColoring({r, g, b, g, b, r, b, b, r, g, g, r}),
        TaitColoring({r, g, b, g, b, r, b, b, g, r, r, g}),
        TaitColoring({r, g, b, g, b, b, r, r, b, g, g, r}),
        TaitColoring({r, g, b, b, g, r, g, b, r, g, b, r}),
    };
}

struct NamedCycle {
    std::string walk;
    ColorPair colors;

    friend auto operator<=>(const NamedCycle&, const NamedCycle&) = default;
};

// The six Hamiltonian cycles of the cube, written from 0 toward the smaller neighbor.
inline std::vector<NamedCycle> cube_cycles() {
    const ColorPair rg{Color::Red, Color::Green};
    const ColorPair rb{Color::Red, Color::Blue};
    const ColorPair gb{Color::Green, Color::Blue};
    return {
        {"0-1-6-5-2-3-4-7-0", rb}, {"0-3-4-5-2-1-6-7-0", gb}, {"0-1-2-5-6-7-4-3-0", rg},
        {"0-3-2-1-6-5-4-7-0", gb}, {"0-1-2-3-4-5-6-7-0", rb}, {"0-1-6-7-4-5-2-3-0", rg},
    };
}

inline std::vector<TaitColoring> collect_colorings(const CubicGraph& g, const SchedulePlan& plan,
                                                   std::span<const Branch> prefix = {}) {
    std::vector<TaitColoring> out;
    enumerate_prefixed(g, plan, prefix, [&](ColoringView c) {
        out.emplace_back(c);
        return Visit::Continue;
    });
    return out;
}

inline std::vector<std::pair<CanonicalCycle, ColorPair>> collect_cycles(const CubicGraph& g) {
    std::vector<std::pair<CanonicalCycle, ColorPair>> out;
    enumerate_hamiltonian(g, [&](const CanonicalCycle& c, ColorPair p) {
        out.emplace_back(c, p);
        return Visit::Continue;
    });
    return out;
}

}  // namespace taitenum::testing
