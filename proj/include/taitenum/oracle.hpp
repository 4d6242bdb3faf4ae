#pragma once

#include <set>
#include <stdexcept>

#include "taitenum/cycles.hpp"

// Brute-force reference implementations for differential tests. They share
// only the data types with the main pipeline and never consult a schedule.
namespace taitenum::oracle {

inline constexpr int kDefaultVertexCap = 16;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All proper 3-edge colorings with vertex 0's incidence edges red, green, blue.
std::set<TaitColoring> brute_colorings(const CubicGraph& g, int vertex_cap = kDefaultVertexCap);

// Number of proper 3-edge colorings without any normalization (6x the above).
std::uint64_t count_unnormalized(const CubicGraph& g, int vertex_cap = kDefaultVertexCap);

// All Hamiltonian cycles by path extension from vertex 0, one per undirected
// edge set, in canonical form.
std::set<CanonicalCycle> brute_hamiltonian(const CubicGraph& g, int vertex_cap = kDefaultVertexCap);

}  // namespace taitenum::oracle
