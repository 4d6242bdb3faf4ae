#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taitenum {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    EdgeId id;
    VertexId u;  // u <= v
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Thrown for malformed EDGE LIST text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Thrown when an edge multiset does not describe an accepted cubic graph.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValidationReport {
    bool is_cubic = false;
    bool is_connected = false;
    bool has_loop = false;
    int girth = 0;  // 0 when the graph is acyclic
    std::vector<std::string> violations;

    bool accepted() const { return violations.empty(); }
};

// Checks an arbitrary edge multiset against the cubic-graph rules. Never throws.
ValidationReport validate(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

// Connected, loop-free, 3-regular multigraph on n >= 4 vertices.
//
// Edge ids are assigned after sorting the edge multiset by (u, v), so two
// graphs with the same multiset have identical ids regardless of input order.
// Parallel edges keep distinct ids. incidence(v) lists the three edges at v
// ordered by far endpoint, then by edge id.
class CubicGraph {
public:
    // Throws GraphError listing every violation.
    CubicGraph(int n, std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::array<EdgeId, 3>& incidence(VertexId v) const { return incidence_[v]; }

    VertexId other_end(EdgeId e, VertexId from) const {
        const Edge& ed = edges_[e];
        return ed.u == from ? ed.v : ed.u;
    }

    // Far endpoints of v in incidence order (the n0 <= n1 <= n2 convention).
    std::array<VertexId, 3> neighbors(VertexId v) const;

    int girth() const { return girth_; }
    bool is_simple() const { return girth_ > 2; }

    friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::array<EdgeId, 3>> incidence_;
    int girth_;
};

CubicGraph parse_edge_list(std::string_view text);

// Emits the EDGE LIST format with edges sorted by (u, v, occurrence).
std::string serialize_edge_list(const CubicGraph& g);

// Names accepted by builtin(): cube, k4, k33, petersen, prism, horton.
const std::vector<std::string>& builtin_names();
CubicGraph builtin(std::string_view name);

// Exact girth of any multigraph: BFS from every vertex; a parallel pair gives 2.
int girth(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);
inline int girth(const CubicGraph& g) { return g.girth(); }

inline constexpr int kRandomCubicRetryCap = 100000;

// Configuration-model draw: 3n stubs paired uniformly with a seeded
// mt19937_64, rejecting loops and disconnected outcomes. Multi-edges are kept
// unless min_girth > 2 (min_girth = 4 yields simple triangle-free graphs).
// Throws GenerationError after kRandomCubicRetryCap rejected draws.
CubicGraph random_cubic(int n, std::uint64_t seed, int min_girth = 0);

}  // namespace taitenum
