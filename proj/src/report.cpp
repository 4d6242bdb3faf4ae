#include "taitenum/report.hpp"

#include <cmath>

namespace taitenum {

BoundReport bounds(const CubicGraph& g, const SchedulePlan& plan) {
    BoundReport b;
    const CoverSnapshot& c = plan.first_cover;
    const int n = g.vertex_count();
    const int girth = g.girth();
    b.cover_inequality = 2 * c.soft <= c.unidentified + c.rigid;
    b.cover_soft_le_third = 3 * c.soft <= n;
    b.triangle_free = girth >= 4;
    if (b.triangle_free) b.soft_le_half = 2 * plan.soft_count() <= n;
    b.girth_bound_exponent = static_cast<double>(n) * (girth + 2) / (3.0 * girth);
    return b;
}

Json graph_json(const CubicGraph& g) {
    return Json{{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"girth", g.girth()},
                {"simple", g.is_simple()}};
}

Json plan_summary_json(const SchedulePlan& plan) {
    return Json{{"rigid_count", plan.rigid.size()},
                {"soft_count", plan.soft_count()},
                {"saturated_rigid", plan.saturated_rigid},
                {"first_cover",
                 {{"soft", plan.first_cover.soft},
                  {"unidentified", plan.first_cover.unidentified},
                  {"rigid", plan.first_cover.rigid}}}};
}

Json plan_json(const CubicGraph& g, const SchedulePlan& plan) {
    Json entries = Json::array();
    for (const ScheduleEntry& e : plan.schedule) {
        const Edge& ed = g.edge(e.edge);
        entries.push_back({{"edge", e.edge},
                           {"u", ed.u},
                           {"v", ed.v},
                           {"role", std::string(to_string(e.role))},
                           {"owner", e.owner}});
    }
    return Json{{"rigid", plan.rigid}, {"soft", plan.soft}, {"schedule", std::move(entries)}};
}

Json stats_json(const SearchStats& s) {
    return Json{{"soft_count", s.soft_count},
                {"bound_exponent", s.bound_exponent()},
                {"decision_nodes", s.decision_nodes},
                {"log2_decision_nodes",
                 s.decision_nodes == 0 ? 0.0 : std::log2(static_cast<double>(s.decision_nodes))},
                {"conflicts", s.conflicts},
                {"backtracks", s.backtracks},
                {"colorings_found", s.colorings_found},
                {"cycles_found", s.cycles_found},
                {"stopped_early", s.stopped_early},
                {"elapsed_seconds", s.elapsed_seconds}};
}

Json bounds_json(const BoundReport& b) {
    Json j{{"cover_inequality", b.cover_inequality},
           {"cover_soft_le_third", b.cover_soft_le_third},
           {"triangle_free", b.triangle_free}};
    j["soft_le_half"] = b.soft_le_half ? Json(*b.soft_le_half) : Json(nullptr);
    j["girth_bound_exponent"] = b.girth_bound_exponent;
    return j;
}

Json coloring_json(ColoringView coloring) {
    Json j = Json::array();
    for (Color c : coloring) j.push_back(std::string(to_string(c)));
    return j;
}

Json cycle_json(const CanonicalCycle& cycle, std::optional<ColorPair> colors) {
    Json j{{"walk", cycle.to_string()}, {"vertices", cycle.vertices}, {"edges", cycle.edges}};
    if (colors) j["colors"] = to_string(*colors);
    return j;
}

Json run_report(const CubicGraph& g, const SchedulePlan& plan, const SearchStats& stats) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"graph", graph_json(g)},
                {"plan", plan_summary_json(plan)},
                {"stats", stats_json(stats)},
                {"bounds", bounds_json(bounds(g, plan))}};
}

}  // namespace taitenum
