// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// indented detail lines. Usage: taitenum_acceptance [criterion...]
// With no arguments every criterion except the long Horton run (3) is checked.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "json.hpp"
#include "taitenum/cli.hpp"
#include "taitenum/cycles.hpp"
#include "taitenum/oracle.hpp"

namespace {

using namespace taitenum;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kCubeSeconds = 1e-3;
constexpr double kFixtureSeconds = 10e-3;
constexpr double kDifferentialSeconds = 30.0;
constexpr double kHortonSeconds = 600.0;
constexpr std::uint64_t kHortonColorings = 143982592;
constexpr double kHortonNodeTarget = 4294967296.0;  // 2^32
constexpr double kHortonNodeFactor = 10.0;
constexpr int kDifferentialGraphs = 60;
constexpr int kTriangleFreeGraphs = 64;
constexpr int kTimingRepeats = 5;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Median wall time of `repeats` calls.
double median_seconds(int repeats, const std::function<void()>& body) {
    std::vector<double> t;
    for (int i = 0; i < repeats; ++i) {
        auto start = Clock::now();
        body();
        t.push_back(seconds_since(start));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

class Outcome {
public:
    void check(bool ok, const std::string& what) {
        if (!ok) {
            failed_ = true;
            details_.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& line) { details_.push_back(line); }
    bool passed() const { return !failed_; }
    const std::vector<std::string>& details() const { return details_; }

private:
    bool failed_ = false;
    std::vector<std::string> details_;
};

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

std::vector<testing::NamedCycle> cube_cycle_list(const CubicGraph& g, const SchedulePlan& plan) {
    std::vector<testing::NamedCycle> out;
    enumerate_hamiltonian(g, plan, [&](const CanonicalCycle& c, ColorPair p) {
        out.push_back({c.to_string(), p});
        return Visit::Continue;
    });
    return out;
}

// 1. Cube golden test.
void cube_golden(Outcome& o) {
    const CubicGraph g = builtin("cube");
    const SchedulePlan plan = build_schedule(g);
    o.check(plan.soft == std::vector<VertexId>{1, 2, 4}, "soft sequence is (1,2,4)");
    const std::vector<std::pair<VertexId, VertexId>> reference{{0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 6}, {2, 3},
                                                              {2, 5}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}};
    std::vector<std::pair<VertexId, VertexId>> order;
    for (const ScheduleEntry& e : plan.schedule) order.emplace_back(g.edge(e.edge).u, g.edge(e.edge).v);
    o.check(order == reference, "schedule order matches the reference order");

    std::vector<TaitColoring> colorings = testing::collect_colorings(g, plan);
    o.check(colorings == testing::cube_table(), "4 colorings equal to the reference table, in order");

    auto cycles = cube_cycle_list(g, plan);
    auto expected = testing::cube_cycles();
    o.check(cycles.size() == 6, "6 Hamiltonian cycles");
    o.check(std::set(cycles.begin(), cycles.end()) == std::set(expected.begin(), expected.end()),
            "cycles and color pairs equal the reference six");

    const double t = median_seconds(kTimingRepeats, [&] {
        SchedulePlan p = build_schedule(g);
        std::uint64_t n = 0;
        enumerate_colorings(g, p, [&](ColoringView) {
            ++n;
            return Visit::Continue;
        });
        cube_cycle_list(g, p);
    });
    o.note("partition + colorings + cycles: " + fmt(t * 1e3) + " ms (limit " + fmt(kCubeSeconds * 1e3) + " ms)");
    o.check(t < kCubeSeconds, "cube pipeline under 1 ms");
}

// 2. Fixture counts, oracle first.
void fixture_counts(Outcome& o) {
    struct Row {
        const char* name;
        std::uint64_t colorings;
        std::uint64_t cycles;
    };
    const std::vector<Row> rows{{"k4", 1, 3}, {"k33", 2, 6}, {"petersen", 0, 0}};
    for (const Row& r : rows) {
        CubicGraph g = builtin(r.name);
        const auto oc = oracle::brute_colorings(g).size();
        const auto oh = oracle::brute_hamiltonian(g).size();
        o.check(oc == r.colorings && oh == r.cycles, std::string("oracle agrees on ") + r.name);
    }
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> found;
    const double t = median_seconds(kTimingRepeats, [&] {
        for (const Row& r : rows) {
            CubicGraph g = builtin(r.name);
            SearchStats s = enumerate_hamiltonian(g, nullptr);
            found[r.name] = {s.colorings_found, s.cycles_found};
        }
    });
    for (const Row& r : rows) {
        auto [c, h] = found[r.name];
        o.note(std::string(r.name) + ": colorings=" + std::to_string(c) + " hamiltonian=" + std::to_string(h));
        o.check(c == r.colorings && h == r.cycles, std::string("main path counts for ") + r.name);
    }
    o.note("main path total: " + fmt(t * 1e3) + " ms (limit " + fmt(kFixtureSeconds * 1e3) + " ms)");
    o.check(t < kFixtureSeconds, "fixture counts under 10 ms");
}

// 3. Horton benchmark.
void horton(Outcome& o) {
    const CubicGraph g = builtin("horton");
    const SchedulePlan plan = build_schedule(g);
    SplitOptions options;
    options.jobs = std::max(1u, std::thread::hardware_concurrency());
    options.progress_interval_seconds = 30.0;
    options.progress = [](const SearchStats& s) {
        std::cerr << "  progress: colorings=" << s.colorings_found << " elapsed=" << s.elapsed_seconds << "s\n";
    };
    auto start = Clock::now();
    SearchStats s = count_hamiltonian(g, plan, options);
    const double t = seconds_since(start);
    const double nodes = static_cast<double>(s.decision_nodes);
    o.note("jobs=" + std::to_string(options.jobs) + " soft=" + std::to_string(plan.soft_count()) +
           " colorings=" + std::to_string(s.colorings_found) + " hamiltonian=" + std::to_string(s.cycles_found));
    o.note("decision_nodes=" + std::to_string(s.decision_nodes) + " (2^" + fmt(std::log2(nodes)) + ")");
    o.note("wall time " + fmt(t) + " s (limit " + fmt(kHortonSeconds) + " s)");
    o.check(s.colorings_found == kHortonColorings, "143982592 colorings");
    o.check(s.cycles_found == 0, "no Hamiltonian cycles");
    o.check(nodes >= kHortonNodeTarget / kHortonNodeFactor && nodes <= kHortonNodeTarget * kHortonNodeFactor,
            "decision_nodes within a factor of 10 of 2^32");
    o.check(t < kHortonSeconds, "finishes within the time limit");
}

// 4. Differential suite against the oracle.
void differential(Outcome& o) {
    auto start = Clock::now();
    int agree = 0;
    for (int i = 0; i < kDifferentialGraphs; ++i) {
        const int n = 4 + 2 * (i % 6);
        const std::uint64_t seed = 7 + static_cast<std::uint64_t>(i);
        CubicGraph g = random_cubic(n, seed);
        SchedulePlan plan = build_schedule(g);
        std::set<TaitColoring> colorings;
        enumerate_colorings(g, plan, [&](ColoringView c) {
            colorings.emplace(c);
            return Visit::Continue;
        });
        std::set<CanonicalCycle> cycles;
        enumerate_hamiltonian(g, plan, [&](const CanonicalCycle& c, ColorPair) {
            cycles.insert(c);
            return Visit::Continue;
        });
        bool ok = colorings == oracle::brute_colorings(g) && cycles == oracle::brute_hamiltonian(g);
        agree += ok;
        o.check(ok, "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
    const double t = seconds_since(start);
    o.note(std::to_string(agree) + "/" + std::to_string(kDifferentialGraphs) + " graphs agree, n in 4..14, " +
           fmt(t) + " s (limit " + fmt(kDifferentialSeconds) + " s)");
    o.check(t < kDifferentialSeconds, "differential suite under 30 s");
}

std::vector<std::pair<std::string, CubicGraph>> property_corpus() {
    std::vector<std::pair<std::string, CubicGraph>> corpus;
    for (const char* name : {"k4", "k33", "petersen", "prism", "cube"}) corpus.emplace_back(name, builtin(name));
    corpus.emplace_back("theta4", parse_edge_list(testing::kTheta4));
    corpus.emplace_back("double-at-zero6", parse_edge_list(testing::kDoubleAtZero6));
    corpus.emplace_back("random n=10 seed=2024", parse_edge_list(testing::kRandom10Seed2024));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int n = 4 + 2 * static_cast<int>(seed % 14);
        corpus.emplace_back("random n=" + std::to_string(n) + " seed=" + std::to_string(seed), random_cubic(n, seed));
    }
    return corpus;
}

// 5. Property suite.
void properties(Outcome& o) {
    int snapshot_violations = 0;
    std::string first_violation;
    int graphs = 0;
    for (const auto& [label, g] : property_corpus()) {
        ++graphs;
        const SchedulePlan plan = build_schedule(g);
        const CoverSnapshot& s = plan.first_cover;
        if (2 * s.soft > s.unidentified + s.rigid) {
            if (snapshot_violations++ == 0) {
                first_violation = label + ": S=" + std::to_string(s.soft) + " U=" + std::to_string(s.unidentified) +
                                  " R=" + std::to_string(s.rigid);
            }
        }

        bool proper = true;
        bool factors_ok = true;
        bool round_trip = true;
        SearchStats stats = enumerate_colorings(g, plan, [&](ColoringView c) {
            proper = proper && is_proper(g, c) && is_normalized(g, c);
            for (const TwoFactor& f : two_factors(g, c)) {
                std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
                for (EdgeId e : f.edges) {
                    ++degree[g.edge(e).u];
                    ++degree[g.edge(e).v];
                }
                factors_ok = factors_ok && f.edges.size() == static_cast<std::size_t>(g.vertex_count()) &&
                             std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
                auto h = hamiltonian_of(g, f);
                if (!h) continue;
                int hits = 0;
                for (const TwoFactor& back : two_factors(g, coloring_from_cycle(g, *h).view())) {
                    auto again = hamiltonian_of(g, back);
                    hits += again && *again == *h;
                }
                round_trip = round_trip && hits == 1;
            }
            return Visit::Continue;
        });
        o.check(stats.colorings_found <= (std::uint64_t{1} << stats.soft_count), label + ": colorings <= 2^soft");
        o.check(proper, label + ": every visited coloring proper and normalized");
        o.check(factors_ok, label + ": every 2-factor 2-regular spanning");
        o.check(round_trip, label + ": cycle -> coloring -> factor -> cycle round trip");

        if (plan.soft_count() >= 2) {
            std::uint64_t sum = 0;
            for (const char* prefix : {"AA", "AB", "BA", "BB"}) {
                auto p = parse_prefix(prefix);
                sum += enumerate_prefixed(g, plan, p, nullptr).colorings_found;
            }
            o.check(sum == stats.colorings_found, label + ": prefix counts for k=2 sum to the total");
        }
    }
    // The snapshot inequality is also evaluated on Horton's plan (no enumeration needed).
    const SchedulePlan horton_plan = build_schedule(builtin("horton"));
    const CoverSnapshot& hs = horton_plan.first_cover;
    const bool horton_ok = 2 * hs.soft <= hs.unidentified + hs.rigid;
    o.note("corpus: " + std::to_string(graphs) + " graphs plus the Horton plan");
    o.note("snapshot 2S <= U+R at first cover violated on " + std::to_string(snapshot_violations) + "/" +
           std::to_string(graphs) + " corpus graphs" +
           (first_violation.empty() ? "" : " (first: " + first_violation + ")"));
    o.note("horton first cover: S=" + std::to_string(hs.soft) + " U=" + std::to_string(hs.unidentified) +
           " R=" + std::to_string(hs.rigid));
    o.check(snapshot_violations == 0 && horton_ok, "snapshot inequality 2S <= U+R holds on every corpus graph");
}

// 6. Triangle-free bound: final #soft <= n/2.
void triangle_free(Outcome& o) {
    int violations = 0;
    int max_soft_excess = 0;
    for (int i = 0; i < kTriangleFreeGraphs; ++i) {
        const int n = 8 + 2 * (i % 20);
        const std::uint64_t seed = 1 + static_cast<std::uint64_t>(i);
        CubicGraph g = random_cubic(n, seed, 4);
        const SchedulePlan plan = build_schedule(g);
        max_soft_excess = std::max(max_soft_excess, 2 * plan.soft_count() - n);
        if (2 * plan.soft_count() > n) {
            ++violations;
            o.check(false, "n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                               " soft=" + std::to_string(plan.soft_count()));
        }
    }
    o.note(std::to_string(kTriangleFreeGraphs) + " simple triangle-free graphs, n in 8..46, " +
           std::to_string(violations) + " violations; max 2*soft - n = " + std::to_string(max_soft_excess));
}

// 7. Determinism of --json output apart from timing.
void determinism(Outcome& o) {
    auto strip = [](nlohmann::ordered_json& j) {
        std::function<void(nlohmann::ordered_json&)> walk = [&](nlohmann::ordered_json& node) {
            if (node.is_object()) {
                node.erase("elapsed_seconds");
                for (auto& [k, v] : node.items()) walk(v);
            } else if (node.is_array()) {
                for (auto& v : node) walk(v);
            }
        };
        walk(j);
    };
    const std::string r10 = testing::kRandom10Seed2024;
    const std::vector<std::pair<std::vector<std::string>, std::string>> runs{
        {{"partition", "--graph", "cube", "--json"}, ""},
        {{"colorings", "--graph", "cube", "--json", "--list"}, ""},
        {{"hamilton", "--graph", "k33", "--json", "--list"}, ""},
        {{"colorings", "--stdin", "--json", "--list"}, r10},
        {{"hamilton", "--stdin", "--json", "--count"}, r10},
        {{"colorings", "--graph", "petersen", "--json"}, ""},
    };
    for (const auto& [args, input] : runs) {
        std::string text[2];
        for (std::string& t : text) {
            std::istringstream in(input);
            std::ostringstream out, err;
            int code = cli::run(args, in, out, err);
            o.check(code == 0, args[0] + " exit code");
            auto j = nlohmann::ordered_json::parse(out.str());
            strip(j);
            t = j.dump();
        }
        std::string label;
        for (const auto& a : args) label += a + " ";
        o.check(text[0] == text[1], "byte-identical output: " + label);
    }
    o.note(std::to_string(runs.size()) + " commands run twice; elapsed_seconds removed before comparison");
}

struct Criterion {
    int number;
    const char* title;
    void (*body)(Outcome&);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "cube golden test", cube_golden},
        {2, "fixture counts", fixture_counts},
        {3, "horton benchmark", horton},
        {4, "differential suite", differential},
        {5, "property suite", properties},
        {6, "triangle-free soft bound", triangle_free},
        {7, "determinism", determinism},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > 7) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..7 ...]\n";
            return 2;
        }
        selected.insert(k);
    }
    if (selected.empty()) selected = {1, 2, 4, 5, 6, 7};

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!selected.count(c.number)) continue;
        Outcome o;
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.passed() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n";
        for (const std::string& d : o.details()) std::cout << "    " << d << "\n";
        std::cout << std::flush;
        failures += !o.passed();
    }
    return failures == 0 ? 0 : 1;
}
