#include "taitenum/partition.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace taitenum {

std::string_view to_string(Role role) {
    switch (role) {
        case Role::Initial: return "initial";
        case Role::Forced: return "forced";
        case Role::PairFirst: return "pair-first";
        case Role::PairSecond: return "pair-second";
    }
    return "?";
}

namespace {

enum class Status : std::uint8_t { Unseen, Unidentified, Rigid, Soft };

class ScheduleBuilder {
public:
    explicit ScheduleBuilder(const CubicGraph& g)
        : g_(g),
          status_(static_cast<std::size_t>(g.vertex_count()), Status::Unseen),
          scheduled_at_(static_cast<std::size_t>(g.vertex_count()), 0),
          scheduled_(static_cast<std::size_t>(g.edge_count()), 0),
          unseen_(g.vertex_count()) {}

    SchedulePlan run() {
        status_[0] = Status::Rigid;
        --unseen_;
        for (EdgeId e : g_.incidence(0)) append(e, Role::Initial, 0);

        while (true) {
            saturate();
            if (unidentified_.empty()) break;
            VertexId v = *unidentified_.begin();
            unidentified_.erase(unidentified_.begin());
            status_[v] = Status::Soft;
            plan_.soft.push_back(v);
            assert(scheduled_at_[v] == 1);
            Role role = Role::PairFirst;
            for (EdgeId e : g_.incidence(v)) {
                if (scheduled_[e]) continue;
                append(e, role, v);
                role = Role::PairSecond;
            }
        }

        assert(plan_.schedule.size() == static_cast<std::size_t>(g_.edge_count()));
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (status_[v] == Status::Rigid) plan_.rigid.push_back(v);
        }
        return std::move(plan_);
    }

private:
    // Promotes unidentified vertices bounding >= 2 scheduled edges, smallest
    // label first, until none is left.
    void saturate() {
        while (!ready_.empty()) {
            VertexId v = *ready_.begin();
            ready_.erase(ready_.begin());
            unidentified_.erase(v);
            status_[v] = Status::Rigid;
            bool appended = false;
            for (EdgeId e : g_.incidence(v)) {
                if (scheduled_[e]) continue;
                append(e, Role::Forced, v);
                appended = true;
            }
            if (!appended) ++plan_.saturated_rigid;
        }
    }

    void append(EdgeId e, Role role, VertexId owner) {
        scheduled_[e] = 1;
        plan_.schedule.push_back({e, role, owner});
        const Edge& ed = g_.edge(e);
        for (VertexId x : {ed.u, ed.v}) {
            ++scheduled_at_[x];
            if (status_[x] == Status::Unseen) {
                status_[x] = Status::Unidentified;
                unidentified_.insert(x);
                if (--unseen_ == 0) record_cover();
            }
            if (status_[x] == Status::Unidentified && scheduled_at_[x] >= 2) ready_.insert(x);
        }
    }

    void record_cover() {
        int rigid = 0;
        int soft = 0;
        for (Status s : status_) {
            rigid += s == Status::Rigid;
            soft += s == Status::Soft;
        }
        plan_.first_cover = {soft, static_cast<int>(unidentified_.size()), rigid};
    }

    const CubicGraph& g_;
    std::vector<Status> status_;
    std::vector<int> scheduled_at_;
    std::vector<char> scheduled_;
    std::set<VertexId> unidentified_;
    std::set<VertexId> ready_;
    int unseen_;
    SchedulePlan plan_;
};

}  // namespace

SchedulePlan build_schedule(const CubicGraph& g) { return ScheduleBuilder(g).run(); }

ValidationReport verify_schedule(const CubicGraph& g, const SchedulePlan& plan) {
    ValidationReport report;
    report.is_cubic = true;
    report.is_connected = true;
    report.girth = g.girth();
    auto& out = report.violations;
    const int n = g.vertex_count();
    const int m = g.edge_count();

    // Partition of V.
    std::vector<int> kind(static_cast<std::size_t>(n), 0);  // 1 rigid, 2 soft
    auto classify = [&](const std::vector<VertexId>& list, int tag, std::string_view name) {
        for (VertexId v : list) {
            if (v < 0 || v >= n) {
                out.push_back(std::string(name) + " vertex " + std::to_string(v) + " out of range");
            } else if (kind[v] != 0) {
                out.push_back("vertex " + std::to_string(v) + " listed more than once");
            } else {
                kind[v] = tag;
            }
        }
    };
    classify(plan.rigid, 1, "rigid");
    classify(plan.soft, 2, "soft");
    for (VertexId v = 0; v < n; ++v) {
        if (kind[v] == 0) out.push_back("vertex " + std::to_string(v) + " is neither rigid nor soft");
    }
    if (n > 0 && kind[0] != 1) out.push_back("vertex 0 is not rigid");

    // Coverage.
    std::vector<int> position(static_cast<std::size_t>(m), -1);
    if (plan.schedule.size() != static_cast<std::size_t>(m)) {
        out.push_back("schedule has " + std::to_string(plan.schedule.size()) + " entries, expected " +
                      std::to_string(m));
    }
    for (std::size_t i = 0; i < plan.schedule.size(); ++i) {
        EdgeId e = plan.schedule[i].edge;
        if (e < 0 || e >= m) {
            out.push_back("entry " + std::to_string(i) + " names unknown edge " + std::to_string(e));
        } else if (position[e] >= 0) {
            out.push_back("edge " + std::to_string(e) + " scheduled twice");
        } else {
            position[e] = static_cast<int>(i);
        }
    }
    for (EdgeId e = 0; e < m; ++e) {
        if (position[e] < 0) out.push_back("edge " + std::to_string(e) + " is never scheduled");
    }
    if (!out.empty()) return report;

    // Seed prefix.
    for (int k = 0; k < 3; ++k) {
        const auto& entry = plan.schedule[static_cast<std::size_t>(k)];
        if (entry.role != Role::Initial || entry.edge != g.incidence(0)[k] || entry.owner != 0) {
            out.push_back("entry " + std::to_string(k) + " is not vertex 0's incidence edge " +
                          std::to_string(k));
        }
    }

    auto incident = [&](EdgeId e, VertexId v) { return g.edge(e).u == v || g.edge(e).v == v; };
    // Edges at `v` other than the given ones, with multiplicity handled by id.
    auto others_before = [&](VertexId v, std::initializer_list<EdgeId> skip, std::size_t limit) {
        for (EdgeId e : g.incidence(v)) {
            if (std::find(skip.begin(), skip.end(), e) != skip.end()) continue;
            if (static_cast<std::size_t>(position[e]) >= limit) return false;
        }
        return true;
    };

    std::vector<VertexId> pair_owners;
    std::vector<int> forced_count(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < plan.schedule.size(); ++i) {
        const ScheduleEntry& entry = plan.schedule[i];
        const std::string where = "entry " + std::to_string(i) + " (edge " + std::to_string(entry.edge) + ")";
        if (entry.owner < 0 || entry.owner >= n || !incident(entry.edge, entry.owner)) {
            out.push_back(where + ": owner " + std::to_string(entry.owner) + " is not an endpoint");
            continue;
        }
        switch (entry.role) {
            case Role::Initial:
                if (i >= 3) out.push_back(where + ": initial entry outside the seed prefix");
                break;
            case Role::Forced:
                if (kind[entry.owner] != 1) out.push_back(where + ": forced owner is not rigid");
                if (++forced_count[entry.owner] > 1) out.push_back(where + ": rigid owner forced twice");
                if (!others_before(entry.owner, {entry.edge}, i)) {
                    out.push_back(where + ": forced before the owner's other two edges");
                }
                break;
            case Role::PairFirst: {
                if (kind[entry.owner] != 2) out.push_back(where + ": pair owner is not soft");
                const ScheduleEntry* second = i + 1 < plan.schedule.size() ? &plan.schedule[i + 1] : nullptr;
                if (second == nullptr || second->role != Role::PairSecond || second->owner != entry.owner) {
                    out.push_back(where + ": pair-first not followed by its pair-second");
                    break;
                }
                if (!incident(second->edge, entry.owner)) break;  // reported on the next entry
                if (!others_before(entry.owner, {entry.edge, second->edge}, i)) {
                    out.push_back(where + ": pair opened before the owner's known edge");
                }
                pair_owners.push_back(entry.owner);
                break;
            }
            case Role::PairSecond:
                if (i == 0 || plan.schedule[i - 1].role != Role::PairFirst ||
                    plan.schedule[i - 1].owner != entry.owner) {
                    out.push_back(where + ": pair-second without a preceding pair-first");
                }
                break;
        }
    }
    if (pair_owners != plan.soft) out.push_back("soft sequence does not match the order of pairs");
    return report;
}

}  // namespace taitenum
