#pragma once

#include <optional>

#include "json.hpp"
#include "taitenum/cycles.hpp"

namespace taitenum {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Checks of the complexity estimates against one concrete plan.
struct BoundReport {
    // 2 #S <= #U + #R at the first moment every vertex has been seen.
    bool cover_inequality = false;
    // 3 #S <= n at the same moment (equivalent to the above).
    bool cover_soft_le_third = false;
    bool triangle_free = false;
    // #S <= n/2 for the final plan; only meaningful on simple triangle-free graphs.
    std::optional<bool> soft_le_half;
    // n (g + 2) / (3 g): exponent of the girth-based upper bound.
    double girth_bound_exponent = 0.0;
};

BoundReport bounds(const CubicGraph& g, const SchedulePlan& plan);

Json graph_json(const CubicGraph& g);
Json plan_summary_json(const SchedulePlan& plan);
// Full plan: rigid, soft and every schedule entry with its endpoints.
Json plan_json(const CubicGraph& g, const SchedulePlan& plan);
Json stats_json(const SearchStats& stats);
Json bounds_json(const BoundReport& b);
Json coloring_json(ColoringView coloring);
Json cycle_json(const CanonicalCycle& cycle, std::optional<ColorPair> colors);

// {schema_version, graph, plan, stats, bounds}
Json run_report(const CubicGraph& g, const SchedulePlan& plan, const SearchStats& stats);

}  // namespace taitenum
