#include "taitenum/graph.hpp"

namespace taitenum {

namespace {

using EdgePairs = std::vector<std::pair<VertexId, VertexId>>;

// 1-skeleton of the 3-cube, labeled so that vertex 0 is adjacent to 1, 3, 7
// and the rims run 0-1-2-3 / 7-6-5-4.
EdgePairs cube_edges() {
    return {{0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 6}, {2, 3},
            {2, 5}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}};
}

EdgePairs k4_edges() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

// Sides {0, 1, 2} and {3, 4, 5}.
EdgePairs k33_edges() {
    EdgePairs e;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b) e.emplace_back(a, b);
    return e;
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
EdgePairs petersen_edges() {
    EdgePairs e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return e;
}

// Triangles 0-1-2 and 3-4-5 joined by i -- i+3.
EdgePairs prism_edges() {
    return {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
}

// Horton's 96-vertex graph, built the way the Sage graph library builds it:
// six copies of the Moebius-Kantor graph LCF[5,-5]^8 with the cycle edges
// 15-0 and 7-8 removed, glued in pairs (2k, 2k+1) and attached to three joint
// vertices; vertex 15 of every odd block is dropped.
//
// Labels: position j of block b is 16*b + j. Joint k takes the label freed by
// the dropped vertex 16*(2k+1) + 15, i.e. 31, 63 and 95.
EdgePairs horton_edges() {
    auto label = [](int block, int pos) { return static_cast<VertexId>(16 * block + pos); };
    auto joint = [&](int k) { return label(2 * k + 1, 15); };
    auto dropped = [](int block, int pos) { return block % 2 == 1 && pos == 15; };

    EdgePairs e;
    for (int b = 0; b < 6; ++b) {
        for (int j = 0; j < 16; ++j) {
            int next = (j + 1) % 16;
            bool removed_rim = (j == 15 && next == 0) || (j == 7 && next == 8);
            if (!removed_rim && !dropped(b, j) && !dropped(b, next)) e.emplace_back(label(b, j), label(b, next));
            // Chords +5 from even positions cover every chord once.
            if (j % 2 == 0) {
                int far = (j + 5) % 16;
                if (!dropped(b, j) && !dropped(b, far)) e.emplace_back(label(b, j), label(b, far));
            }
        }
    }
    for (int k = 0; k < 3; ++k) {
        int even = 2 * k;
        int odd = 2 * k + 1;
        e.emplace_back(label(even, 0), label(odd, 7));
        e.emplace_back(label(odd, 8), label(even, 7));
        e.emplace_back(label(even, 15), label(odd, 0));
        e.emplace_back(label(even, 8), joint(1));
        e.emplace_back(label(odd, 14), joint(2));
        e.emplace_back(label(odd, 10), joint(0));
    }
    return e;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"cube", "k4", "k33", "petersen", "prism", "horton"};
    return names;
}

CubicGraph builtin(std::string_view name) {
    if (name == "cube") return CubicGraph(8, cube_edges());
    if (name == "k4") return CubicGraph(4, k4_edges());
    if (name == "k33") return CubicGraph(6, k33_edges());
    if (name == "petersen") return CubicGraph(10, petersen_edges());
    if (name == "prism") return CubicGraph(6, prism_edges());
    if (name == "horton") return CubicGraph(96, horton_edges());
    throw std::invalid_argument("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace taitenum
