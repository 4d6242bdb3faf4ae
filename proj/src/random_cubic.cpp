#include "taitenum/graph.hpp"

#include <limits>
#include <random>

namespace taitenum {

namespace {

// Unbiased draw from [0, bound) using only raw engine output, so a seed maps
// to the same graph on every standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

CubicGraph random_cubic(int n, std::uint64_t seed, int min_girth) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("random_cubic needs an even n >= 4, got " + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    std::vector<VertexId> stubs(static_cast<std::size_t>(3 * n));
    std::vector<std::pair<VertexId, VertexId>> edges(static_cast<std::size_t>(3 * n / 2));

    for (int attempt = 0; attempt < kRandomCubicRetryCap; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<VertexId>(i / 3);
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::swap(stubs[i], stubs[bounded(rng, i + 1)]);
        }
        bool loop = false;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            edges[k] = {stubs[2 * k], stubs[2 * k + 1]};
            loop = loop || edges[k].first == edges[k].second;
        }
        if (loop) continue;
        ValidationReport report = validate(n, edges);
        if (!report.accepted() || report.girth < min_girth) continue;
        return CubicGraph(n, edges);
    }
    throw GenerationError("random_cubic(" + std::to_string(n) + ", " + std::to_string(seed) +
                          ") gave up after " + std::to_string(kRandomCubicRetryCap) + " draws");
}

}  // namespace taitenum
