#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "crosscolor/drawing.hpp"

using namespace crosscolor;

namespace {

RawDrawing raw_from_positions(int n, std::vector<std::pair<int, int>> edges,
                              std::vector<std::pair<long long, long long>> pos) {
    RawDrawing r;
    r.n = n;
    r.edges = std::move(edges);
    r.positions = std::move(pos);
    r.has_positions = true;
    return r;
}

// Two K4 blocks, each drawn as a square with crossing diagonals, joined by
// one bridge edge.  Exactly two disjoint crossings.
RawDrawing two_square_drawing() {
    return raw_from_positions(
        8,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
         {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
        {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {10, 0}, {12, 0}, {12, 2}, {10, 2}});
}

// K5 drawn with its single unavoidable crossing: triangle 0,1,2 with 3
// inside and 4 above, edge 3-4 crossing edge 1-2.
RawDrawing k5_drawing() {
    return raw_from_positions(5,
                              {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                              {{0, 0}, {6, 0}, {2, 5}, {3, 2}, {3, 8}});
}

std::set<int> vertex_set(const PlaneGraph& g) {
    auto v = g.vertices();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("planar inputs pass through with inner triangulation") {
    // convex pentagon, no crossings to find
    auto raw = raw_from_positions(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                                  {{0, 0}, {10, 1}, {13, 9}, {5, 14}, {-3, 8}});
    auto d = normalize(raw);
    CHECK(d.mode == DrawingMode::Planar);
    CHECK(d.crossings.empty());
    CHECK(d.extra_edge.first == -1);
    CHECK(d.skeleton.edge_count() == 7);  // one pentagon face picks up two chords
    CHECK(d.added_edges.size() == 2);
    CHECK(d.skeleton.inner_faces_triangulated());
    validate_drawing(d);

    SUBCASE("outer hint selects the face kept open") {
        raw.outer_hint = {0, 1, 2, 3, 4};
        auto h = normalize(raw);
        auto walk = h.skeleton.outer_walk();
        CHECK(walk.size() == 5);
        CHECK(std::set<int>(walk.begin(), walk.end()) == std::set<int>{0, 1, 2, 3, 4});
        CHECK(h.skeleton.edge_count() == 7);
    }

    SUBCASE("a hint that bounds no face is rejected") {
        raw.outer_hint = {0, 2, 4};
        CHECK_THROWS_AS(normalize(raw), InvalidGraphError);
    }
}

TEST_CASE("single-crossing drawings route through the plus-edge form") {
    auto d = normalize(k5_drawing());
    CHECK(d.mode == DrawingMode::PlusEdge);
    CHECK(d.extra_edge == std::pair<int, int>{1, 2});
    CHECK(d.crossings.empty());
    CHECK_FALSE(d.skeleton.has_edge(1, 2));
    // K5 minus an edge is already a maximal planar graph
    CHECK(d.skeleton.edge_count() == 9);
    CHECK(d.added_edges.empty());
    CHECK(d.full_graph().edge_count() == 10);
    validate_drawing(d);

    SUBCASE("as_raw round-trips to the same skeleton") {
        auto d2 = normalize(d.as_raw());
        CHECK(d2.mode == DrawingMode::PlusEdge);
        CHECK(d2.extra_edge == d.extra_edge);
        for (int v = 0; v < 5; ++v)
            CHECK(d2.skeleton.rotation(v) == d.skeleton.rotation(v));
        CHECK(d2.skeleton.outer_walk() == d.skeleton.outer_walk());
    }
}

TEST_CASE("crossed-edge removal never returns as a triangulation chord") {
    // explicit rotations: octahedron with a claimed crossing between the
    // independent edges 1-2 and 3-4
    RawDrawing r;
    r.n = 6;
    r.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4},
               {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    r.rotations = {{4, 3, 2, 1}, {0, 2, 5, 4}, {0, 3, 5, 1},
                   {0, 4, 5, 2}, {0, 1, 5, 3}, {1, 2, 3, 4}};
    r.has_rotations = true;
    r.crossings = {{{1, 2}, {3, 4}}};
    r.has_crossings = true;
    auto d = normalize(r);
    CHECK(d.mode == DrawingMode::PlusEdge);
    CHECK(d.extra_edge == std::pair<int, int>{1, 2});
    CHECK_FALSE(d.skeleton.has_edge(1, 2));
    // the merged quad face is re-triangulated with a fresh chord instead
    CHECK(d.added_edges.size() == 1);
    CHECK(d.skeleton.inner_faces_triangulated());
    validate_drawing(d);
}

TEST_CASE("two crossings through one edge collapse to plus-edge") {
    // edge 0-2 runs under two vertical edges
    auto raw = raw_from_positions(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}},
        {{0, 0}, {3, 3}, {10, 2}, {3, -1}, {7, 3}, {7, -1}});
    auto d = normalize(raw);
    CHECK(d.mode == DrawingMode::PlusEdge);
    CHECK(d.extra_edge == std::pair<int, int>{0, 2});
    CHECK_FALSE(d.skeleton.has_edge(0, 2));
    validate_drawing(d);
}

TEST_CASE("a crossing between adjacent edges is absorbed by edge removal") {
    RawDrawing r;
    r.n = 3;
    r.edges = {{0, 1}, {1, 2}, {2, 0}};
    r.rotations = {{1, 2}, {2, 0}, {0, 1}};
    r.has_rotations = true;
    r.crossings = {{{0, 1}, {2, 0}}};
    r.has_crossings = true;
    auto d = normalize(r);
    CHECK(d.mode == DrawingMode::PlusEdge);
    CHECK(d.extra_edge == std::pair<int, int>{0, 1});
    validate_drawing(d);
}

TEST_CASE("two disjoint crossings build the canonical two-crossing form") {
    auto d = normalize(two_square_drawing());
    REQUIRE(d.mode == DrawingMode::TwoCross);
    REQUIRE(d.crossings.size() == 2);
    const Crossing& c0 = d.crossings[0];
    const Crossing& c1 = d.crossings[1];

    CHECK(c0.edge_a == std::pair<int, int>{0, 2});
    CHECK(c0.edge_b == std::pair<int, int>{3, 1});  // t=3, u=1 for the ccw convention
    CHECK_FALSE(c0.clockwise);
    CHECK(c1.edge_a == std::pair<int, int>{4, 6});
    CHECK(c1.edge_b == std::pair<int, int>{5, 7});
    CHECK(c1.clockwise);
    CHECK_FALSE(d.degenerate);

    // removed edges out, kept edges in, cluster cycles rebuilt
    CHECK_FALSE(d.skeleton.has_edge(0, 2));
    CHECK_FALSE(d.skeleton.has_edge(4, 6));
    CHECK(d.skeleton.has_edge(1, 3));
    CHECK(d.skeleton.has_edge(5, 7));
    for (auto [a, b] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {3, 0}})
        CHECK(d.skeleton.has_edge(a, b));

    // full sphere triangulation: 3n-6 edges, 7 of them fresh fill edges
    CHECK(d.skeleton.edge_count() == 18);
    CHECK(d.added_edges.size() == 7);
    CHECK(d.redrawn_edges.size() == 8);  // both squares redrawn as corridors
    CHECK(d.skeleton.all_faces_triangulated());

    // the kept edge's two faces are exactly the crossing triangles
    for (const Crossing& c : d.crossings) {
        auto f1 = d.skeleton.face_vertices({c.t(), c.u()});
        auto f2 = d.skeleton.face_vertices({c.u(), c.t()});
        std::set<int> sides;
        for (int z : f1)
            if (z != c.t() && z != c.u()) sides.insert(z);
        for (int z : f2)
            if (z != c.t() && z != c.u()) sides.insert(z);
        CHECK(sides == std::set<int>{c.v(), c.w()});
    }

    // everything the input had is still adjacency of the working graph
    Graph full = d.full_graph();
    for (auto [a, b] : two_square_drawing().edges) CHECK(full.has_edge(a, b));
    validate_drawing(d);
}

TEST_CASE("normalize is idempotent through as_raw") {
    auto d = normalize(two_square_drawing());
    auto r = d.as_raw();
    CHECK(r.has_rotations);
    CHECK(r.has_crossings);
    CHECK(r.crossings.size() == 2);

    // the round trip re-enters through explicit rotations and the
    // orientation search, and must land on the identical structure
    auto d2 = normalize(r);
    CHECK(d2.mode == DrawingMode::TwoCross);
    for (int i = 0; i < 2; ++i) {
        CHECK(d2.crossings[i].edge_a == d.crossings[i].edge_a);
        CHECK(d2.crossings[i].edge_b == d.crossings[i].edge_b);
        CHECK(d2.crossings[i].clockwise == d.crossings[i].clockwise);
    }
    for (int v = 0; v < 8; ++v)
        CHECK(d2.skeleton.rotation(v) == d.skeleton.rotation(v));
    CHECK(d2.skeleton.outer_walk() == d.skeleton.outer_walk());
    CHECK(d2.added_edges.empty());
    CHECK(d2.redrawn_edges.size() == 8);
}

TEST_CASE("planarize_minus_path opens the hole as each component's outer face") {
    auto d = normalize(two_square_drawing());
    std::vector<int> q{0, 1, 4, 5};
    auto comps = planarize_minus_path(d, q);
    REQUIRE(!comps.empty());

    std::set<int> survivors;
    std::set<int> expected{2, 3, 6, 7};
    auto in_q = [&](int v) { return std::count(q.begin(), q.end(), v) > 0; };
    for (const auto& comp : comps) {
        comp.validate(false);
        for (int v : comp.vertices()) survivors.insert(v);
        if (comp.edge_count() == 0) continue;
        REQUIRE(comp.outer_set());
        for (int v : comp.outer_walk()) {
            bool touches_q = false;
            for (int u : d.skeleton.rotation(v)) touches_q = touches_q || in_q(u);
            CHECK(touches_q);
        }
    }
    CHECK(survivors == expected);

    SUBCASE("every q-neighbor shows up on some hole boundary") {
        std::set<int> on_holes;
        for (const auto& comp : comps)
            if (comp.outer_set())
                for (int v : comp.outer_walk()) on_holes.insert(v);
        for (int v : expected) {
            bool adj = false;
            for (int u : d.skeleton.rotation(v)) adj = adj || in_q(u);
            if (adj) CHECK(on_holes.count(v) == 1);
        }
    }
}

TEST_CASE("planarize_minus_path rejects paths that miss a crossing") {
    auto d = normalize(two_square_drawing());
    // misses the second crossing entirely
    CHECK_THROWS_AS(planarize_minus_path(d, {0, 1}), BadInputError);
    // hits edge 0-2 but no endpoint of 1-3
    CHECK_THROWS_AS(planarize_minus_path(d, {0, 4, 5}), BadInputError);
    CHECK_THROWS_AS(planarize_minus_path(d, {}), BadInputError);
    CHECK_THROWS_AS(planarize_minus_path(d, {0, 0, 1}), BadInputError);
}

TEST_CASE("planarize_minus_path works on planar and plus-edge drawings") {
    auto pent = normalize(raw_from_positions(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                                             {{0, 0}, {10, 1}, {13, 9}, {5, 14}, {-3, 8}}));
    auto comps = planarize_minus_path(pent, {0});
    REQUIRE(comps.size() == 1);
    CHECK(vertex_set(comps[0]) == std::set<int>{1, 2, 3, 4});
    CHECK(comps[0].outer_set());

    // removing every vertex leaves nothing to embed
    CHECK(planarize_minus_path(pent, {0, 1, 2, 3, 4}).empty());

    auto k5 = normalize(k5_drawing());
    auto comps2 = planarize_minus_path(k5, {1});
    REQUIRE(comps2.size() == 1);
    CHECK(vertex_set(comps2[0]) == std::set<int>{0, 2, 3, 4});
    // a path avoiding the extra edge's endpoints cannot planarize the rest
    CHECK_THROWS_AS(planarize_minus_path(k5, {0}), BadInputError);
}

TEST_CASE("degenerate and malformed drawings are rejected") {
    SUBCASE("three crossings") {
        auto raw = raw_from_positions(
            5,
            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}},
            {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
        CHECK_THROWS_AS(normalize(raw), InvalidGraphError);
    }
    SUBCASE("two crossing points coinciding") {
        auto raw = raw_from_positions(6, {{0, 1}, {2, 3}, {4, 5}},
                                      {{-2, 0}, {2, 0}, {0, -2}, {0, 2}, {-2, -2}, {2, 2}});
        CHECK_THROWS_AS(normalize(raw), InvalidGraphError);
    }
    SUBCASE("vertex sitting on an edge") {
        auto raw = raw_from_positions(3, {{0, 1}}, {{0, 0}, {4, 0}, {2, 0}});
        CHECK_THROWS_AS(normalize(raw), InvalidGraphError);
    }
    SUBCASE("duplicate positions") {
        auto raw = raw_from_positions(2, {{0, 1}}, {{1, 1}, {1, 1}});
        CHECK_THROWS_AS(normalize(raw), InvalidGraphError);
    }
    SUBCASE("disconnected two-crossing drawing") {
        RawDrawing r;
        r.n = 8;
        r.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                   {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
        r.rotations = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1},
                       {5, 6, 7}, {4, 7, 6}, {4, 5, 7}, {4, 6, 5}};
        r.has_rotations = true;
        r.crossings = {{{0, 2}, {1, 3}}, {{4, 6}, {5, 7}}};
        r.has_crossings = true;
        CHECK_THROWS_AS(normalize(r), InvalidGraphError);
    }
    SUBCASE("missing rotations and coordinates") {
        RawDrawing r;
        r.n = 3;
        r.edges = {{0, 1}};
        CHECK_THROWS_AS(normalize(r), BadInputError);
    }
    SUBCASE("crossing names an absent edge") {
        RawDrawing r;
        r.n = 3;
        r.edges = {{0, 1}, {1, 2}};
        r.rotations = {{1}, {0, 2}, {1}};
        r.has_rotations = true;
        r.crossings = {{{0, 2}, {0, 1}}};
        r.has_crossings = true;
        CHECK_THROWS_AS(normalize(r), BadInputError);
    }
    SUBCASE("rotation that is not a permutation of the neighbors") {
        RawDrawing r;
        r.n = 3;
        r.edges = {{0, 1}, {1, 2}};
        r.rotations = {{1}, {0}, {1}};
        r.has_rotations = true;
        CHECK_THROWS_AS(normalize(r), BadInputError);
    }
    SUBCASE("same pair of edges crossing twice") {
        RawDrawing r;
        r.n = 4;
        r.edges = {{0, 1}, {2, 3}};
        r.rotations = {{1}, {0}, {3}, {2}};
        r.has_rotations = true;
        r.crossings = {{{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}};
        r.has_crossings = true;
        CHECK_THROWS_AS(normalize(r), BadInputError);
    }
}
