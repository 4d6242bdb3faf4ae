#include "taitenum/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace taitenum {

std::string_view to_string(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

std::vector<Branch> parse_prefix(std::string_view text) {
    std::vector<Branch> prefix;
    for (char ch : text) {
        if (ch == 'A' || ch == 'a') {
            prefix.push_back(Branch::A);
        } else if (ch == 'B' || ch == 'b') {
            prefix.push_back(Branch::B);
        } else {
            throw std::invalid_argument("prefix may only contain A and B, got '" + std::string(text) + "'");
        }
    }
    return prefix;
}

bool is_proper(const CubicGraph& g, ColoringView c) {
    if (c.size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        unsigned seen = 0;
        for (EdgeId e : g.incidence(v)) {
            auto color = static_cast<unsigned>(c[static_cast<std::size_t>(e)]);
            if (color > 2) return false;
            seen |= 1u << color;
        }
        if (seen != 7u) return false;
    }
    return true;
}

bool is_normalized(const CubicGraph& g, ColoringView c) {
    const auto& seed = g.incidence(0);
    return c[seed[0]] == Color::Red && c[seed[1]] == Color::Green && c[seed[2]] == Color::Blue;
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
    soft_count = std::max(soft_count, other.soft_count);
    decision_nodes += other.decision_nodes;
    conflicts += other.conflicts;
    backtracks += other.backtracks;
    colorings_found += other.colorings_found;
    cycles_found += other.cycles_found;
    elapsed_seconds += other.elapsed_seconds;
    stopped_early = stopped_early || other.stopped_early;
    return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

enum class StepKind : std::uint8_t { Fixed, Forced, Pair };

// One schedule entry, or one whole soft pair, with the endpoints resolved.
struct Step {
    StepKind kind;
    Color fixed;
    VertexId owner;
    EdgeId first;
    VertexId first_far;
    EdgeId second;
    VertexId second_far;
};

std::vector<Step> compile(const CubicGraph& g, const SchedulePlan& plan) {
    ValidationReport check = verify_schedule(g, plan);
    if (!check.accepted()) {
        throw std::invalid_argument("schedule does not fit the graph: " + check.violations.front());
    }
    std::vector<Step> steps;
    const auto& entries = plan.schedule;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ScheduleEntry& entry = entries[i];
        Step step{};
        step.owner = entry.owner;
        step.first = entry.edge;
        step.first_far = g.other_end(entry.edge, entry.owner);
        switch (entry.role) {
            case Role::Initial:
                step.kind = StepKind::Fixed;
                step.fixed = static_cast<Color>(i);
                break;
            case Role::Forced:
                step.kind = StepKind::Forced;
                break;
            case Role::PairFirst:
                step.kind = StepKind::Pair;
                ++i;
                step.second = entries[i].edge;
                step.second_far = g.other_end(step.second, entry.owner);
                break;
            case Role::PairSecond:
                throw std::logic_error("unpaired pair-second entry");
        }
        steps.push_back(step);
    }
    return steps;
}

struct CountOnly {
    Visit operator()(ColoringView) const { return Visit::Continue; }
};

// Depth-first interpreter of the compiled schedule. Assignments are recorded
// on a trail; each decision frame remembers the trail height at its entry.
//
// In a prefixed run the first k frames are pinned. Events that happen above
// depth k are shared by several prefixes; each is counted only by the prefix
// whose remaining choices are all A, which keeps split stats additive.
template <class Visitor>
class Search {
public:
    Search(const CubicGraph& g, const SchedulePlan& plan, std::span<const Branch> prefix,
           Visitor& visitor, const EnumerateOptions& options)
        : g_(g),
          steps_(compile(g, plan)),
          prefix_(prefix),
          visitor_(visitor),
          options_(options),
          color_(static_cast<std::size_t>(g.edge_count()), Color::Red),
          mask_(static_cast<std::size_t>(g.vertex_count()), 0) {
        if (prefix.size() > plan.soft.size()) {
            throw std::invalid_argument("prefix of length " + std::to_string(prefix.size()) +
                                        " exceeds the " + std::to_string(plan.soft.size()) +
                                        " soft vertices");
        }
        const std::size_t k = prefix.size();
        suffix_all_a_.assign(k + 1, true);
        for (std::size_t d = k; d-- > 0;) suffix_all_a_[d] = suffix_all_a_[d + 1] && prefix[d] == Branch::A;
        trail_.reserve(static_cast<std::size_t>(g.edge_count()));
        frames_.reserve(plan.soft.size());
        stats_.soft_count = plan.soft_count();
    }

    SearchStats run() {
        start_ = Clock::now();
        bool more = true;
        while (more) {
            if (descend()) {
                ++stats_.colorings_found;
                ++stats_.backtracks;
                bool stop = visitor_(ColoringView(color_)) == Visit::Stop;
                if (stop || (options_.limit && stats_.colorings_found >= *options_.limit)) {
                    stats_.stopped_early = true;
                    break;
                }
            }
            more = backtrack();
        }
        stats_.elapsed_seconds = seconds_since(start_);
        if (stats_.soft_count < 63 && stats_.colorings_found > (std::uint64_t{1} << stats_.soft_count)) {
            throw std::logic_error("more colorings than 2^#soft");
        }
        return stats_;
    }

private:
    struct Frame {
        std::size_t step;
        std::size_t mark;
        Branch branch;
    };

    bool counted(std::size_t region) const {
        return region >= prefix_.size() || suffix_all_a_[region];
    }

    void dead_end(std::size_t region) {
        if (!counted(region)) return;
        ++stats_.conflicts;
        ++stats_.backtracks;
    }

    bool assign(EdgeId e, VertexId owner, VertexId far, unsigned bit) {
        if (mask_[far] & bit) return false;
        mask_[owner] |= static_cast<std::uint8_t>(bit);
        mask_[far] |= static_cast<std::uint8_t>(bit);
        color_[e] = static_cast<Color>(std::countr_zero(bit));
        trail_.push_back(e);
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            EdgeId e = trail_.back();
            trail_.pop_back();
            auto keep = static_cast<std::uint8_t>(~(1u << static_cast<unsigned>(color_[e])));
            const Edge& ed = g_.edge(e);
            mask_[ed.u] &= keep;
            mask_[ed.v] &= keep;
        }
    }

    bool apply_pair(const Step& s, Branch branch) {
        unsigned rest = 7u & ~static_cast<unsigned>(mask_[s.owner]);
        unsigned low = rest & (0u - rest);
        unsigned high = rest ^ low;
        unsigned first = branch == Branch::A ? low : high;
        unsigned second = branch == Branch::A ? high : low;
        std::size_t mark = trail_.size();
        if (!assign(s.first, s.owner, s.first_far, first)) return false;
        if (!assign(s.second, s.owner, s.second_far, second)) {
            undo_to(mark);
            return false;
        }
        return true;
    }

    // Runs forward from pos_. True when the schedule is exhausted.
    bool descend() {
        while (pos_ < steps_.size()) {
            const Step& s = steps_[pos_];
            switch (s.kind) {
                case StepKind::Fixed:
                    if (!assign(s.first, s.owner, s.first_far, 1u << static_cast<unsigned>(s.fixed))) {
                        dead_end(frames_.size());
                        return false;
                    }
                    break;
                case StepKind::Forced:
                    if (!assign(s.first, s.owner, s.first_far, 7u & ~static_cast<unsigned>(mask_[s.owner]))) {
                        dead_end(frames_.size());
                        return false;
                    }
                    break;
                case StepKind::Pair: {
                    std::size_t depth = frames_.size();
                    Branch branch = depth < prefix_.size() ? prefix_[depth] : Branch::A;
                    frames_.push_back({pos_, trail_.size(), branch});
                    if (counted(depth)) enter_node();
                    if (!apply_pair(s, branch)) {
                        dead_end(depth + 1);
                        return false;
                    }
                    break;
                }
            }
            ++pos_;
        }
        return true;
    }

    // Unwinds to the deepest frame with an untried branch and takes it.
    bool backtrack() {
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            undo_to(f.mark);
            pos_ = f.step;
            std::size_t depth = frames_.size() - 1;
            if (depth >= prefix_.size() && f.branch == Branch::A) {
                f.branch = Branch::B;
                if (apply_pair(steps_[pos_], Branch::B)) {
                    ++pos_;
                    return true;
                }
                dead_end(depth + 1);
                continue;
            }
            frames_.pop_back();
        }
        undo_to(0);
        return false;
    }

    void enter_node() {
        ++stats_.decision_nodes;
        if (options_.progress && ++since_progress_ >= options_.progress_every) {
            since_progress_ = 0;
            SearchStats snapshot = stats_;
            snapshot.elapsed_seconds = seconds_since(start_);
            options_.progress(snapshot);
        }
    }

    const CubicGraph& g_;
    std::vector<Step> steps_;
    std::span<const Branch> prefix_;
    Visitor& visitor_;
    const EnumerateOptions& options_;
    std::vector<Color> color_;
    std::vector<std::uint8_t> mask_;
    std::vector<EdgeId> trail_;
    std::vector<Frame> frames_;
    std::vector<bool> suffix_all_a_;
    std::size_t pos_ = 0;
    std::uint64_t since_progress_ = 0;
    SearchStats stats_;
    Clock::time_point start_;
};

template <class Visitor>
SearchStats run_search(const CubicGraph& g, const SchedulePlan& plan, std::span<const Branch> prefix,
                       Visitor& visitor, const EnumerateOptions& options) {
    return Search<Visitor>(g, plan, prefix, visitor, options).run();
}

}  // namespace

SearchStats enumerate_colorings(const CubicGraph& g, const SchedulePlan& plan,
                                const ColoringVisitor& visitor, const EnumerateOptions& options) {
    return enumerate_prefixed(g, plan, {}, visitor, options);
}

SearchStats count_colorings(const CubicGraph& g, const SchedulePlan& plan, const EnumerateOptions& options) {
    CountOnly sink;
    return run_search(g, plan, {}, sink, options);
}

SearchStats enumerate_prefixed(const CubicGraph& g, const SchedulePlan& plan,
                               std::span<const Branch> prefix, const ColoringVisitor& visitor,
                               const EnumerateOptions& options) {
    if (!visitor) {
        CountOnly sink;
        return run_search(g, plan, prefix, sink, options);
    }
    return run_search(g, plan, prefix, visitor, options);
}

SearchStats enumerate_split(const CubicGraph& g, const SchedulePlan& plan, const SplitOptions& options,
                            const std::function<ColoringVisitor(unsigned worker)>& make_visitor) {
    const auto start = Clock::now();
    const unsigned jobs = std::max(1u, options.jobs);
    int depth = options.split_depth;
    if (depth <= 0) depth = static_cast<int>(std::bit_width(jobs - 1)) + 4;
    depth = std::min({depth, plan.soft_count(), 30});
    const std::size_t total = std::size_t{1} << depth;

    std::mutex mutex;
    std::condition_variable finished;
    SearchStats merged;
    merged.soft_count = plan.soft_count();
    std::size_t done = 0;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&](unsigned id) {
        try {
            ColoringVisitor visitor = make_visitor ? make_visitor(id) : ColoringVisitor{};
            std::vector<Branch> prefix(static_cast<std::size_t>(depth));
            for (std::size_t index = next++; index < total; index = next++) {
                for (int d = 0; d < depth; ++d) {
                    prefix[d] = ((index >> (depth - 1 - d)) & 1u) ? Branch::B : Branch::A;
                }
                SearchStats part = enumerate_prefixed(g, plan, prefix, visitor);
                std::lock_guard lock(mutex);
                merged += part;
                ++done;
                finished.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
            next = total;
            done = total;
            finished.notify_all();
        }
    };

    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    {
        std::unique_lock lock(mutex);
        auto interval = std::chrono::duration<double>(std::max(0.01, options.progress_interval_seconds));
        auto last_report = Clock::now();
        while (done < total) {
            finished.wait_for(lock, interval);
            if (options.progress && done < total && Clock::now() - last_report >= interval) {
                last_report = Clock::now();
                SearchStats snapshot = merged;
                snapshot.elapsed_seconds = seconds_since(start);
                options.progress(snapshot);
            }
        }
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    merged.elapsed_seconds = seconds_since(start);
    return merged;
}

}  // namespace taitenum
