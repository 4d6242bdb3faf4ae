#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "taitenum/graph.hpp"

namespace taitenum {

enum class Role : std::uint8_t { Initial, Forced, PairFirst, PairSecond };

std::string_view to_string(Role role);

struct ScheduleEntry {
    EdgeId edge;
    Role role;
    // Vertex whose remaining color(s) this entry consumes: 0 for Initial, the
    // rigid vertex for Forced, the soft vertex for either half of a pair.
    VertexId owner;

    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

// Sizes of S, U and R at the first instant every vertex has been seen.
struct CoverSnapshot {
    int soft = 0;
    int unidentified = 0;
    int rigid = 0;

    friend bool operator==(const CoverSnapshot&, const CoverSnapshot&) = default;
};

// Output of the first run: the rigid/soft split and the coloring order.
struct SchedulePlan {
    std::vector<VertexId> rigid;  // ascending
    std::vector<VertexId> soft;   // discovery order; also the decision order
    std::vector<ScheduleEntry> schedule;
    CoverSnapshot first_cover;
    // Rigid vertices other than 0 whose three edges were already scheduled when
    // they were promoted. #soft = n/2 - 2 + saturated_rigid for every plan.
    int saturated_rigid = 0;

    int soft_count() const { return static_cast<int>(soft.size()); }

    friend bool operator==(const SchedulePlan&, const SchedulePlan&) = default;
};

// Runs the rigid/soft classification starting at vertex 0. Whenever several
// unidentified vertices bound two scheduled edges, the smallest label is
// promoted first and the scan restarts; the next soft vertex is the smallest
// unidentified label.
SchedulePlan build_schedule(const CubicGraph& g);

// Independent re-check of every plan invariant (partition of V, coverage,
// seed prefix, pair adjacency, determinacy). Violations are listed in the
// report; never throws.
ValidationReport verify_schedule(const CubicGraph& g, const SchedulePlan& plan);

}  // namespace taitenum
