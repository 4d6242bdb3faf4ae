#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "taitenum/graph.hpp"
#include "taitenum/partition.hpp"

namespace taitenum {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

std::string_view to_string(Color c);

// Choice at a soft pair. A gives the smaller remaining color to the first
// edge of the pair, B swaps them. A is tried first.
enum class Branch : std::uint8_t { A, B };

// Parses a string such as "AAB". Throws std::invalid_argument on other letters.
std::vector<Branch> parse_prefix(std::string_view text);

enum class Visit { Continue, Stop };

// Read-only view of the current assignment, indexed by edge id. Only valid for
// the duration of the visitor call.
using ColoringView = std::span<const Color>;
using ColoringVisitor = std::function<Visit(ColoringView)>;

struct TaitColoring {
    std::vector<Color> colors;  // indexed by edge id

    TaitColoring() = default;
    explicit TaitColoring(ColoringView view) : colors(view.begin(), view.end()) {}
    explicit TaitColoring(std::vector<Color> c) : colors(std::move(c)) {}

    Color operator[](EdgeId e) const { return colors[static_cast<std::size_t>(e)]; }
    ColoringView view() const { return colors; }

    friend auto operator<=>(const TaitColoring&, const TaitColoring&) = default;
};

// True iff the three edges at every vertex carry three distinct colors.
bool is_proper(const CubicGraph& g, ColoringView c);

// True iff vertex 0's edges, in incidence order, are red, green, blue.
bool is_normalized(const CubicGraph& g, ColoringView c);

// Counters of one search. All counters are additive across the disjoint
// subtrees of enumerate_prefixed, so merged split runs report exactly what a
// sequential run reports.
struct SearchStats {
    int soft_count = 0;
    std::uint64_t decision_nodes = 0;  // soft pairs entered
    std::uint64_t conflicts = 0;       // rejected assignments, forced or branch
    std::uint64_t backtracks = 0;      // returns after a dead end or a finished coloring
    std::uint64_t colorings_found = 0;
    std::uint64_t cycles_found = 0;    // filled by the Hamiltonian pipeline
    double elapsed_seconds = 0.0;
    bool stopped_early = false;

    // The search is of order 2^bound_exponent().
    int bound_exponent() const { return soft_count; }

    SearchStats& operator+=(const SearchStats& other);
};

struct EnumerateOptions {
    // Stop after this many colorings.
    std::optional<std::uint64_t> limit;
    // Called with a stats snapshot roughly every progress_every decision nodes.
    std::function<void(const SearchStats&)> progress;
    std::uint64_t progress_every = std::uint64_t{1} << 24;
};

// Interprets the schedule depth-first. Every proper coloring with vertex 0's
// edges colored red, green, blue is passed to the visitor exactly once, in
// canonical order (branch A before B at every soft pair).
SearchStats enumerate_colorings(const CubicGraph& g, const SchedulePlan& plan,
                                const ColoringVisitor& visitor, const EnumerateOptions& options = {});

// Same traversal without a visitor.
SearchStats count_colorings(const CubicGraph& g, const SchedulePlan& plan,
                            const EnumerateOptions& options = {});

// Restricts the search to the subtree where the first prefix.size() soft
// vertices take the given branches. A null visitor only counts. Throws
// std::invalid_argument if the prefix is longer than the soft sequence.
SearchStats enumerate_prefixed(const CubicGraph& g, const SchedulePlan& plan,
                               std::span<const Branch> prefix, const ColoringVisitor& visitor,
                               const EnumerateOptions& options = {});

struct SplitOptions {
    unsigned jobs = 1;
    // Prefix length used for splitting; 0 picks one from `jobs`.
    int split_depth = 0;
    std::function<void(const SearchStats&)> progress;
    double progress_interval_seconds = 10.0;
};

// Runs every prefix subtree on `jobs` worker threads and merges the stats.
// make_visitor(worker) supplies a visitor per worker (may return null to only
// count); visit order across workers is unspecified.
SearchStats enumerate_split(const CubicGraph& g, const SchedulePlan& plan, const SplitOptions& options,
                            const std::function<ColoringVisitor(unsigned worker)>& make_visitor = {});

}  // namespace taitenum
