#include "taitenum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <sstream>

namespace taitenum {

namespace {

using EdgePairs = std::vector<std::pair<VertexId, VertexId>>;

struct Arc {
    VertexId to;
    EdgeId edge;
};

std::vector<std::vector<Arc>> adjacency(int n, const EdgePairs& edges) {
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        auto id = static_cast<EdgeId>(i);
        adj[u].push_back({v, id});
        if (u != v) adj[v].push_back({u, id});
    }
    return adj;
}

bool connected(const std::vector<std::vector<Arc>>& adj) {
    if (adj.empty()) return true;
    std::vector<char> seen(adj.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (const Arc& a : adj[x]) {
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++count;
                stack.push_back(a.to);
            }
        }
    }
    return count == adj.size();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

int girth(int n, const EdgePairs& edges) {
    for (auto [u, v] : edges) {
        if (u == v) return 1;
    }
    auto adj = adjacency(n, edges);
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<EdgeId> parent(static_cast<std::size_t>(n));
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop();
            // Nothing shorter can be closed from deeper levels.
            if (2 * dist[x] >= best) break;
            for (const Arc& a : adj[x]) {
                if (a.edge == parent[x]) continue;
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[x] + 1;
                    parent[a.to] = a.edge;
                    queue.push(a.to);
                } else {
                    best = std::min(best, dist[x] + dist[a.to] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

ValidationReport validate(int n, const EdgePairs& edges) {
    ValidationReport report;
    auto& out = report.violations;

    if (n < 4) out.push_back("vertex count " + std::to_string(n) + " is below the minimum of 4");
    if (n % 2 != 0) out.push_back("vertex count " + std::to_string(n) + " is odd");
    if (n > 0 && edges.size() != static_cast<std::size_t>(3 * n / 2)) {
        out.push_back("edge count " + std::to_string(edges.size()) + " differs from 3n/2 = " +
                      std::to_string(3 * n / 2));
    }

    bool in_range = n > 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            out.push_back("edge " + std::to_string(u) + " " + std::to_string(v) +
                          " has an endpoint outside 0.." + std::to_string(n - 1));
            in_range = false;
        } else if (u == v) {
            report.has_loop = true;
            out.push_back("loop at vertex " + std::to_string(u));
        }
    }
    if (!in_range) return report;

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    report.is_cubic = true;
    for (VertexId x = 0; x < n; ++x) {
        if (degree[x] != 3) {
            report.is_cubic = false;
            out.push_back("vertex " + std::to_string(x) + " has degree " +
                          std::to_string(degree[x]) + " (expected 3)");
        }
    }
    report.is_connected = connected(adjacency(n, edges));
    if (!report.is_connected) out.push_back("graph is disconnected");
    report.girth = girth(n, edges);
    return report;
}

CubicGraph::CubicGraph(int n, EdgePairs edges) : n_(n) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    ValidationReport report = validate(n, edges);
    if (!report.accepted()) {
        std::string msg = "invalid cubic graph:";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw GraphError(msg);
    }
    girth_ = report.girth;

    std::sort(edges.begin(), edges.end());
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges_.push_back({static_cast<EdgeId>(i), edges[i].first, edges[i].second});
    }

    std::vector<std::vector<std::pair<VertexId, EdgeId>>> slots(static_cast<std::size_t>(n));
    for (const Edge& e : edges_) {
        slots[e.u].push_back({e.v, e.id});
        slots[e.v].push_back({e.u, e.id});
    }
    incidence_.resize(static_cast<std::size_t>(n));
    for (VertexId x = 0; x < n; ++x) {
        std::sort(slots[x].begin(), slots[x].end());
        for (int k = 0; k < 3; ++k) incidence_[x][k] = slots[x][k].second;
    }
}

std::array<VertexId, 3> CubicGraph::neighbors(VertexId v) const {
    const auto& inc = incidence_[v];
    return {other_end(inc[0], v), other_end(inc[1], v), other_end(inc[2], v)};
}

namespace {

// Line-oriented tokenizer tracking 1-based positions for error messages.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Advances to the next non-blank, non-comment line. False at end of input.
    bool next() {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            line_ = text_.substr(pos_, end - pos_);
            if (!line_.empty() && line_.back() == '\r') line_.remove_suffix(1);
            pos_ = end + 1;
            ++line_no_;
            cursor_ = 0;
            std::size_t first = line_.find_first_not_of(" \t");
            if (first == std::string_view::npos || line_[first] == '#') continue;
            return true;
        }
        return false;
    }

    long long integer(std::string_view what) {
        skip_space();
        std::size_t start = cursor_;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line_.data() + cursor_, line_.data() + line_.size(), value);
        if (ec != std::errc() || ptr == line_.data() + cursor_) {
            throw ParseError(line_no_, start + 1, "expected " + std::string(what));
        }
        cursor_ = static_cast<std::size_t>(ptr - line_.data());
        if (cursor_ < line_.size() && line_[cursor_] != ' ' && line_[cursor_] != '\t') {
            throw ParseError(line_no_, cursor_ + 1, "unexpected character after " + std::string(what));
        }
        return value;
    }

    void expect_end() {
        skip_space();
        if (cursor_ < line_.size()) throw ParseError(line_no_, cursor_ + 1, "trailing content");
    }

    std::size_t line_number() const { return line_no_; }

private:
    void skip_space() {
        while (cursor_ < line_.size() && (line_[cursor_] == ' ' || line_[cursor_] == '\t')) ++cursor_;
    }

    std::string_view text_;
    std::string_view line_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
    std::size_t cursor_ = 0;
};

}  // namespace

CubicGraph parse_edge_list(std::string_view text) {
    LineReader reader(text);
    if (!reader.next()) throw ParseError(1, 1, "missing header line 'n m'");
    long long n = reader.integer("vertex count");
    long long m = reader.integer("edge count");
    reader.expect_end();
    constexpr long long kMaxVertices = 1 << 24;
    if (n < 0 || n > kMaxVertices) throw ParseError(reader.line_number(), 1, "vertex count out of range");
    if (m < 0 || m > 3 * kMaxVertices) throw ParseError(reader.line_number(), 1, "edge count out of range");

    EdgePairs edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(edges.size()) < m) {
        if (!reader.next()) {
            throw ParseError(reader.line_number() + 1, 1,
                             "expected " + std::to_string(m) + " edge lines, found " +
                                 std::to_string(edges.size()));
        }
        long long u = reader.integer("vertex label");
        long long v = reader.integer("vertex label");
        reader.expect_end();
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(reader.line_number(), 1,
                             "vertex label outside 0.." + std::to_string(n - 1));
        }
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (reader.next()) throw ParseError(reader.line_number(), 1, "more edge lines than declared");
    return CubicGraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const CubicGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace taitenum
