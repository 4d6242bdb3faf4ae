#include "taitenum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "taitenum/oracle.hpp"
#include "taitenum/report.hpp"

namespace taitenum::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultLongThreshold = std::uint64_t{1} << 30;

struct Source {
    std::string builtin;
    std::string file;
    bool from_stdin = false;
};

struct RunFlags {
    bool json = false;
    bool count = false;
    bool list = false;
    std::uint64_t limit = 0;
    CLI::Option* limit_option = nullptr;
    unsigned jobs = 1;
    bool allow_long = false;
    std::string long_threshold;
    double progress_seconds = 10.0;
};

void add_source(CLI::App* cmd, Source& s) {
    auto* g = cmd->add_option("--graph", s.builtin, "Builtin graph: cube, k4, k33, petersen, prism, horton");
    auto* f = cmd->add_option("--file", s.file, "Read an EDGE LIST file");
    auto* i = cmd->add_flag("--stdin", s.from_stdin, "Read an EDGE LIST from standard input");
    g->excludes(f)->excludes(i);
    f->excludes(i);
}

void add_run_flags(CLI::App* cmd, RunFlags& r, bool with_jobs) {
    cmd->add_flag("--json", r.json, "Emit one JSON document on stdout");
    auto* count = cmd->add_flag("--count", r.count, "Report counts and statistics only (default)");
    auto* list = cmd->add_flag("--list", r.list, "Stream every result");
    count->excludes(list);
    r.limit_option = cmd->add_option("--limit", r.limit, "Stop after N results")->check(CLI::PositiveNumber);
    if (with_jobs) {
        cmd->add_option("--jobs", r.jobs, "Worker threads for counting runs")->check(CLI::Range(1u, 1024u));
    }
    cmd->add_flag("--allow-long", r.allow_long, "Permit searches above the long-run threshold");
    cmd->add_option("--long-threshold", r.long_threshold,
                    "Projected decision nodes that count as long (integer or 2^k); "
                    "overrides TAITENUM_LONG_THRESHOLD");
    cmd->add_option("--progress", r.progress_seconds, "Seconds between progress lines on stderr (0 = off)")
        ->check(CLI::NonNegativeNumber);
}

CubicGraph load(const Source& s, std::istream& in) {
    int given = !s.builtin.empty() + !s.file.empty() + s.from_stdin;
    if (given != 1) throw UsageError("exactly one of --graph, --file or --stdin is required");
    if (!s.builtin.empty()) {
        const auto& names = builtin_names();
        if (std::find(names.begin(), names.end(), s.builtin) == names.end()) {
            throw UsageError("unknown builtin graph '" + s.builtin + "'");
        }
        return builtin(s.builtin);
    }
    std::string text;
    if (s.from_stdin) {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(s.file);
        if (!file) throw GraphError("cannot open '" + s.file + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_edge_list(text);
}

std::uint64_t parse_threshold(const std::string& text, const std::string& origin) {
    try {
        std::size_t used = 0;
        if (text.rfind("2^", 0) == 0) {
            unsigned long exponent = std::stoul(text.substr(2), &used);
            if (used + 2 == text.size() && exponent < 64) return std::uint64_t{1} << exponent;
        } else {
            unsigned long long value = std::stoull(text, &used);
            if (used == text.size()) return value;
        }
    } catch (const std::exception&) {
    }
    throw UsageError("invalid long-run threshold '" + text + "' from " + origin);
}

std::uint64_t long_threshold(const RunFlags& r) {
    if (!r.long_threshold.empty()) return parse_threshold(r.long_threshold, "--long-threshold");
    if (const char* env = std::getenv("TAITENUM_LONG_THRESHOLD"); env != nullptr && *env != '\0') {
        return parse_threshold(env, "TAITENUM_LONG_THRESHOLD");
    }
    return kDefaultLongThreshold;
}

void gate(const SchedulePlan& plan, const RunFlags& r) {
    if (r.allow_long) return;
    const int exponent = plan.soft_count();
    const std::uint64_t threshold = long_threshold(r);
    if (exponent >= 64 || (std::uint64_t{1} << exponent) > threshold) {
        throw UsageError("projected search of 2^" + std::to_string(exponent) +
                         " decision nodes exceeds the long-run threshold of " + std::to_string(threshold) +
                         "; pass --allow-long to run it");
    }
}

// Rate-limited progress lines on the diagnostic stream.
class ProgressPrinter {
public:
    ProgressPrinter(std::ostream& err, double interval) : err_(err), interval_(interval) {}

    void operator()(const SearchStats& s) {
        auto now = std::chrono::steady_clock::now();
        if (std::chrono::duration<double>(now - last_).count() < interval_) return;
        last_ = now;
        err_ << "progress: decision_nodes=" << s.decision_nodes << " colorings=" << s.colorings_found
             << " elapsed=" << s.elapsed_seconds << "s\n"
             << std::flush;
    }

private:
    std::ostream& err_;
    double interval_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::function<void(const SearchStats&)> progress_hook(const RunFlags& r, std::ostream& err) {
    if (r.progress_seconds <= 0) return {};
    auto printer = std::make_shared<ProgressPrinter>(err, r.progress_seconds);
    return [printer](const SearchStats& s) { (*printer)(s); };
}

void print_summary(std::ostream& out, const CubicGraph& g, const SchedulePlan& plan, const SearchStats& s,
                   bool with_cycles) {
    const BoundReport b = bounds(g, plan);
    out << "n=" << g.vertex_count() << "\n"
        << "m=" << g.edge_count() << "\n"
        << "girth=" << g.girth() << "\n"
        << "simple=" << (g.is_simple() ? "true" : "false") << "\n"
        << "rigid=" << plan.rigid.size() << "\n"
        << "soft=" << plan.soft_count() << "\n"
        << "first_cover=S" << plan.first_cover.soft << ",U" << plan.first_cover.unidentified << ",R"
        << plan.first_cover.rigid << "\n"
        << "colorings=" << s.colorings_found << "\n";
    if (with_cycles) out << "hamiltonian=" << s.cycles_found << "\n";
    out << "decision_nodes=" << s.decision_nodes << "\n"
        << "conflicts=" << s.conflicts << "\n"
        << "backtracks=" << s.backtracks << "\n"
        << "stopped_early=" << (s.stopped_early ? "true" : "false") << "\n"
        << "cover_inequality=" << (b.cover_inequality ? "holds" : "violated") << "\n"
        << "girth_bound_exponent=" << b.girth_bound_exponent << "\n"
        << "elapsed_seconds=" << s.elapsed_seconds << "\n";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Parallel edges make the vertex walk ambiguous, so multigraph listings add the edge ids.
void print_cycle(std::ostream& out, const CubicGraph& g, const CanonicalCycle& c, std::optional<ColorPair> p) {
    out << c.to_string();
    if (p) out << " (" << to_string(*p) << ")";
    if (!g.is_simple()) {
        out << " edges";
        for (std::size_t i = 0; i < c.edges.size(); ++i) out << (i ? ',' : ' ') << c.edges[i];
    }
    out << "\n";
}

EnumerateOptions enumerate_options(const RunFlags& r, std::ostream& err) {
    EnumerateOptions o;
    if (r.limit_option->count() > 0) o.limit = r.limit;
    o.progress = progress_hook(r, err);
    o.progress_every = std::uint64_t{1} << 22;
    return o;
}

SplitOptions split_options(const RunFlags& r, std::ostream& err) {
    SplitOptions o;
    o.jobs = r.jobs;
    o.progress = progress_hook(r, err);
    o.progress_interval_seconds = r.progress_seconds > 0 ? r.progress_seconds : 10.0;
    return o;
}

// --- partition -------------------------------------------------------------

int cmd_partition(const Source& src, bool json, std::istream& in, std::ostream& out) {
    CubicGraph g = load(src, in);
    SchedulePlan plan = build_schedule(g);
    if (json) {
        Json j{{"schema_version", kReportSchemaVersion}, {"graph", graph_json(g)}};
        Json detail = plan_json(g, plan);
        for (auto& [key, value] : detail.items()) j[key] = value;
        j["summary"] = plan_summary_json(plan);
        j["bounds"] = bounds_json(bounds(g, plan));
        print_json(out, j);
        return kOk;
    }
    out << "rigid";
    for (VertexId v : plan.rigid) out << ' ' << v;
    out << "\nsoft";
    for (VertexId v : plan.soft) out << ' ' << v;
    out << "\nfirst_cover S=" << plan.first_cover.soft << " U=" << plan.first_cover.unidentified
        << " R=" << plan.first_cover.rigid << "\nschedule\n";
    for (std::size_t i = 0; i < plan.schedule.size(); ++i) {
        const ScheduleEntry& e = plan.schedule[i];
        const Edge& ed = g.edge(e.edge);
        out << "  " << i << " edge=" << e.edge << " [" << ed.u << "," << ed.v << "] " << to_string(e.role)
            << " owner=" << e.owner << "\n";
    }
    return kOk;
}

// --- colorings -------------------------------------------------------------

int cmd_colorings(const Source& src, const RunFlags& r, const std::string& prefix_text, std::istream& in,
                  std::ostream& out, std::ostream& err) {
    CubicGraph g = load(src, in);
    SchedulePlan plan = build_schedule(g);
    std::vector<Branch> prefix = parse_prefix(prefix_text);
    if (r.jobs > 1 && (r.list || !prefix.empty() || r.limit_option->count() > 0)) {
        throw UsageError("--jobs only applies to unlimited --count runs");
    }
    gate(plan, r);

    Json listed = Json::array();
    std::uint64_t index = 0;
    ColoringVisitor visitor;
    if (r.list) {
        visitor = [&](ColoringView c) {
            ++index;
            if (r.json) {
                listed.push_back(coloring_json(c));
            } else {
                out << "# coloring " << index << "\n";
                for (const Edge& e : g.edges()) out << e.id << ' ' << e.u << ' ' << e.v << ' ' << to_string(c[e.id]) << "\n";
            }
            return Visit::Continue;
        };
    }

    SearchStats stats;
    if (r.jobs > 1) {
        stats = enumerate_split(g, plan, split_options(r, err));
    } else {
        stats = enumerate_prefixed(g, plan, prefix, visitor, enumerate_options(r, err));
    }

    if (r.json) {
        Json j = run_report(g, plan, stats);
        if (!prefix.empty()) j["prefix"] = prefix_text;
        if (r.list) j["colorings"] = std::move(listed);
        print_json(out, j);
    } else if (r.list) {
        err << "# colorings=" << stats.colorings_found << " decision_nodes=" << stats.decision_nodes << "\n";
    } else {
        if (!prefix.empty()) out << "prefix=" << prefix_text << "\n";
        print_summary(out, g, plan, stats, false);
    }
    return kOk;
}

// --- hamilton --------------------------------------------------------------

int cmd_hamilton(const Source& src, const RunFlags& r, std::istream& in, std::ostream& out, std::ostream& err) {
    CubicGraph g = load(src, in);
    SchedulePlan plan = build_schedule(g);
    if (r.jobs > 1 && (r.list || r.limit_option->count() > 0)) {
        throw UsageError("--jobs only applies to unlimited --count runs");
    }
    gate(plan, r);

    Json listed = Json::array();
    SearchStats stats;
    if (r.jobs > 1) {
        stats = count_hamiltonian(g, plan, split_options(r, err));
    } else {
        HamiltonOptions o;
        if (r.limit_option->count() > 0) o.cycle_limit = r.limit;
        o.progress = progress_hook(r, err);
        o.progress_every = std::uint64_t{1} << 22;
        CycleVisitor visitor;
        if (r.list) {
            visitor = [&](const CanonicalCycle& c, ColorPair p) {
                if (r.json) {
                    listed.push_back(cycle_json(c, p));
                } else {
                    print_cycle(out, g, c, p);
                }
                return Visit::Continue;
            };
        }
        stats = enumerate_hamiltonian(g, plan, visitor, o);
    }

    if (r.json) {
        Json j = run_report(g, plan, stats);
        if (r.list) j["cycles"] = std::move(listed);
        print_json(out, j);
    } else if (r.list) {
        err << "# colorings=" << stats.colorings_found << " hamiltonian=" << stats.cycles_found << "\n";
    } else {
        print_summary(out, g, plan, stats, true);
    }
    return kOk;
}

// --- oracle ----------------------------------------------------------------

int cmd_oracle(const std::string& what, const Source& src, const RunFlags& r, int cap, std::istream& in,
               std::ostream& out) {
    CubicGraph g = load(src, in);
    const bool limited = r.limit_option->count() > 0;
    Json listed = Json::array();
    std::uint64_t emitted = 0;
    std::uint64_t total = 0;
    if (what == "colorings") {
        auto all = oracle::brute_colorings(g, cap);
        total = all.size();
        for (const TaitColoring& c : all) {
            if (!r.list || (limited && emitted >= r.limit)) break;
            ++emitted;
            if (r.json) {
                listed.push_back(coloring_json(c.view()));
            } else {
                out << "# coloring " << emitted << "\n";
                for (const Edge& e : g.edges()) out << e.id << ' ' << e.u << ' ' << e.v << ' ' << to_string(c[e.id]) << "\n";
            }
        }
    } else {
        auto all = oracle::brute_hamiltonian(g, cap);
        total = all.size();
        for (const CanonicalCycle& c : all) {
            if (!r.list || (limited && emitted >= r.limit)) break;
            ++emitted;
            if (r.json) {
                listed.push_back(cycle_json(c, std::nullopt));
            } else {
                print_cycle(out, g, c, std::nullopt);
            }
        }
    }
    if (r.json) {
        Json j{{"schema_version", kReportSchemaVersion}, {"graph", graph_json(g)}, {"oracle", what}, {"count", total}};
        if (r.list) j[what] = std::move(listed);
        print_json(out, j);
    } else if (!r.list) {
        out << (what == "colorings" ? "colorings=" : "hamiltonian=") << total << "\n";
    }
    return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckOutcome {
    std::uint64_t colorings = 0;
    std::uint64_t cycles = 0;
    std::vector<std::string> disagreements;
};

CheckOutcome differential(const CubicGraph& g, int cap) {
    CheckOutcome result;
    SchedulePlan plan = build_schedule(g);
    if (auto report = verify_schedule(g, plan); !report.accepted()) {
        result.disagreements.push_back("schedule: " + report.violations.front());
    }

    std::set<TaitColoring> main_colorings;
    std::uint64_t visits = 0;
    enumerate_colorings(g, plan, [&](ColoringView c) {
        ++visits;
        if (!is_proper(g, c)) result.disagreements.push_back("improper coloring visited");
        main_colorings.emplace(c);
        return Visit::Continue;
    });
    if (visits != main_colorings.size()) result.disagreements.push_back("duplicate coloring visited");
    auto oracle_colorings = oracle::brute_colorings(g, cap);
    if (main_colorings != oracle_colorings) result.disagreements.push_back("coloring sets differ");
    if (oracle::count_unnormalized(g, cap) != 6 * oracle_colorings.size()) {
        result.disagreements.push_back("unnormalized count is not 6x the normalized count");
    }

    std::set<CanonicalCycle> main_cycles;
    std::uint64_t emitted = 0;
    enumerate_hamiltonian(g, plan, [&](const CanonicalCycle& c, ColorPair) {
        ++emitted;
        main_cycles.insert(c);
        return Visit::Continue;
    });
    if (emitted != main_cycles.size()) result.disagreements.push_back("duplicate cycle emitted");
    if (main_cycles != oracle::brute_hamiltonian(g, cap)) result.disagreements.push_back("cycle sets differ");

    result.colorings = main_colorings.size();
    result.cycles = main_cycles.size();
    return result;
}

struct CheckFlags {
    Source source;
    int random = 0;
    int min_n = 4;
    int max_n = 14;
    std::uint64_t seed = 1;
    int cap = oracle::kDefaultVertexCap;
    bool json = false;
};

int cmd_check(const CheckFlags& f, std::istream& in, std::ostream& out) {
    struct Case {
        std::string label;
        CubicGraph graph;
    };
    std::vector<Case> cases;
    if (f.random > 0) {
        if (f.min_n < 4 || f.min_n % 2 || f.max_n < f.min_n || f.max_n % 2) {
            throw UsageError("--min-n and --max-n must be even with 4 <= min-n <= max-n");
        }
        const int sizes = (f.max_n - f.min_n) / 2 + 1;
        for (int i = 0; i < f.random; ++i) {
            int n = f.min_n + 2 * (i % sizes);
            std::uint64_t seed = f.seed + static_cast<std::uint64_t>(i);
            cases.push_back({"random n=" + std::to_string(n) + " seed=" + std::to_string(seed), random_cubic(n, seed)});
        }
    } else {
        cases.push_back({"input", load(f.source, in)});
    }

    Json rows = Json::array();
    int agree = 0;
    for (const Case& c : cases) {
        CheckOutcome o = differential(c.graph, f.cap);
        bool ok = o.disagreements.empty();
        agree += ok;
        if (f.json) {
            rows.push_back({{"graph", c.label},
                            {"colorings", o.colorings},
                            {"hamiltonian", o.cycles},
                            {"agree", ok},
                            {"disagreements", o.disagreements}});
        } else {
            out << c.label << " colorings=" << o.colorings << " hamiltonian=" << o.cycles
                << (ok ? " agree" : " DISAGREE");
            for (const auto& d : o.disagreements) out << " [" << d << "]";
            out << "\n";
        }
    }
    const bool all = agree == static_cast<int>(cases.size());
    if (f.json) {
        print_json(out, Json{{"schema_version", kReportSchemaVersion},
                             {"checked", cases.size()},
                             {"agree", agree},
                             {"all_agree", all},
                             {"graphs", std::move(rows)}});
    } else {
        out << "checked=" << cases.size() << " agree=" << agree << "\n";
    }
    return all ? kOk : kInternal;
}

// --- bench -----------------------------------------------------------------

int cmd_bench(const Source& src, const RunFlags& r, int repeat, bool hamilton, std::istream& in,
              std::ostream& out, std::ostream& err) {
    CubicGraph g = load(src, in);
    SchedulePlan plan = build_schedule(g);
    gate(plan, r);
    std::vector<double> times;
    SearchStats last;
    for (int i = 0; i < repeat; ++i) {
        SplitOptions o = split_options(r, err);
        last = hamilton ? count_hamiltonian(g, plan, o) : enumerate_split(g, plan, o);
        times.push_back(last.elapsed_seconds);
    }
    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t k = sorted.size();
    const double median = k % 2 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
    if (r.json) {
        Json j = run_report(g, plan, last);
        j["bench"] = {{"repeat", repeat}, {"jobs", r.jobs}, {"median_seconds", median},
                      {"min_seconds", sorted.front()}, {"max_seconds", sorted.back()}, {"seconds", times}};
        print_json(out, j);
    } else {
        out << "repeat=" << repeat << "\njobs=" << r.jobs << "\ncolorings=" << last.colorings_found << "\n";
        if (hamilton) out << "hamiltonian=" << last.cycles_found << "\n";
        out << "decision_nodes=" << last.decision_nodes << "\nmedian_seconds=" << median
            << "\nmin_seconds=" << sorted.front() << "\nmax_seconds=" << sorted.back() << "\n";
    }
    return kOk;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(const std::string& name, int n, std::uint64_t seed, int min_girth, std::ostream& out) {
    if (name.empty() == (n == 0)) throw UsageError("gen needs exactly one of --graph or --n");
    if (!name.empty()) {
        Source s;
        s.builtin = name;
        std::istringstream none;
        out << serialize_edge_list(load(s, none));
    } else {
        out << serialize_edge_list(random_cubic(n, seed, min_girth));
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate 3-edge colorings and Hamiltonian cycles of cubic graphs", "taitenum"};
    app.require_subcommand(1);

    Source part_src;
    bool part_json = false;
    auto* partition = app.add_subcommand("partition", "Show the rigid/soft split and the coloring schedule");
    add_source(partition, part_src);
    partition->add_flag("--json", part_json, "Emit JSON");

    Source col_src;
    RunFlags col_flags;
    std::string prefix;
    auto* colorings = app.add_subcommand("colorings", "Enumerate 3-edge colorings");
    add_source(colorings, col_src);
    add_run_flags(colorings, col_flags, true);
    colorings->add_option("--prefix", prefix, "Branch choices (A/B) for the first soft vertices");

    Source ham_src;
    RunFlags ham_flags;
    auto* hamilton = app.add_subcommand("hamilton", "Enumerate Hamiltonian cycles via colorings");
    add_source(hamilton, ham_src);
    add_run_flags(hamilton, ham_flags, true);

    Source orc_src;
    RunFlags orc_flags;
    int cap = oracle::kDefaultVertexCap;
    std::string oracle_what;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference enumeration");
    oracle_cmd->require_subcommand(1);
    for (const char* what : {"colorings", "hamilton"}) {
        auto* sub = oracle_cmd->add_subcommand(what, std::string("Brute-force ") + what);
        add_source(sub, orc_src);
        add_run_flags(sub, orc_flags, false);
        sub->add_option("--cap", cap, "Largest vertex count the oracle accepts");
        sub->callback([&oracle_what, what] { oracle_what = what; });
    }

    CheckFlags check_flags;
    auto* check = app.add_subcommand("check", "Compare the main pipeline against the oracle");
    add_source(check, check_flags.source);
    check->add_option("--random", check_flags.random, "Number of random graphs to check");
    check->add_option("--min-n", check_flags.min_n, "Smallest random vertex count");
    check->add_option("--max-n", check_flags.max_n, "Largest random vertex count");
    check->add_option("--seed", check_flags.seed, "First seed; graph i uses seed + i");
    check->add_option("--cap", check_flags.cap, "Largest vertex count the oracle accepts");
    check->add_flag("--json", check_flags.json, "Emit JSON");

    Source bench_src;
    RunFlags bench_flags;
    int repeat = 5;
    bool bench_hamilton = false;
    auto* bench = app.add_subcommand("bench", "Repeat counting runs and report the median wall time");
    add_source(bench, bench_src);
    add_run_flags(bench, bench_flags, true);
    bench->add_option("--repeat", repeat, "Number of runs")->check(CLI::Range(1, 1000));
    bench->add_flag("--hamilton", bench_hamilton, "Also count Hamiltonian cycles");

    std::string gen_name;
    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    int gen_girth = 0;
    auto* gen = app.add_subcommand("gen", "Print a builtin or random cubic graph as an EDGE LIST");
    gen->add_option("--graph", gen_name, "Builtin graph name");
    gen->add_option("--n", gen_n, "Vertex count of a random graph");
    gen->add_option("--seed", gen_seed, "Seed of the random graph");
    gen->add_option("--min-girth", gen_girth, "Reject random graphs with smaller girth");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*partition) return cmd_partition(part_src, part_json, in, out);
        if (*colorings) return cmd_colorings(col_src, col_flags, prefix, in, out, err);
        if (*hamilton) return cmd_hamilton(ham_src, ham_flags, in, out, err);
        if (*oracle_cmd) return cmd_oracle(oracle_what, orc_src, orc_flags, cap, in, out);
        if (*check) return cmd_check(check_flags, in, out);
        if (*bench) return cmd_bench(bench_src, bench_flags, repeat, bench_hamilton, in, out, err);
        if (*gen) return cmd_gen(gen_name, gen_n, gen_seed, gen_girth, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const oracle::CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GenerationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "invalid graph: " << e.what() << "\n";
        return kInvalidGraph;
    } catch (const GraphError& e) {
        err << "invalid graph: " << e.what() << "\n";
        return kInvalidGraph;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace taitenum::cli
