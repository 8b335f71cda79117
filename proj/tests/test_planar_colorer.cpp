#include "crosscolor/planar_colorer.hpp"

#include <random>

#include "crosscolor/errors.hpp"
#include "crosscolor/oracle.hpp"
#include "crosscolor/trace.hpp"
#include "doctest.h"

using namespace crosscolor;

namespace {

PlaneGraph triangle_plane() {
    auto g = PlaneGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}});
    g.set_outer({0, 1});
    return g;
}

// Pentagon 0-1-2-3-4 with the fan chords 0-2 and 0-3; outer face is the
// pentagon itself.
PlaneGraph fan_pentagon_plane() {
    auto g = PlaneGraph::from_rotations({
        {1, 2, 3, 4},  // 0
        {0, 2},        // 1
        {3, 0, 1},     // 2
        {4, 0, 2},     // 3
        {0, 3},        // 4
    });
    g.set_outer({0, 1});
    return g;
}

// Hub 0 inside a hexagonal rim 1..6.
PlaneGraph wheel6_plane() {
    std::vector<std::vector<int>> rot(7);
    rot[0] = {6, 5, 4, 3, 2, 1};
    for (int i = 1; i <= 6; ++i) {
        int prev = i == 1 ? 6 : i - 1;
        int next = i == 6 ? 1 : i + 1;
        rot[i] = {prev, 0, next};
    }
    auto g = PlaneGraph::from_rotations(rot);
    g.set_outer({2, 1});
    return g;
}

// Two triangles joined at vertex 2, plus a pendant vertex 5 off vertex 4.
PlaneGraph bowtie_pendant_plane() {
    auto g = PlaneGraph::from_rotations({
        {1, 2},        // 0
        {2, 0},        // 1
        {0, 1, 3, 4},  // 2
        {4, 2},        // 3
        {2, 3, 5},     // 4
        {4},           // 5
    });
    g.set_outer({0, 1});
    return g;
}

// K5 minus the edge 1-4, drawn with 2,3,4 as the outer triangle, 0 in the
// middle and 1 inside the face 0-2-3.  Every face is a triangle.
PlaneGraph k5_minus_edge_plane() {
    auto g = PlaneGraph::from_rotations({
        {2, 4, 3, 1},  // 0
        {2, 0, 3},     // 1
        {4, 0, 1, 3},  // 2
        {2, 1, 0, 4},  // 3
        {3, 0, 2},     // 4
    });
    g.set_outer({2, 4});
    return g;
}

// Two disjoint triangles 0-1-2 and 3-4-5.
PlaneGraph two_triangles_plane() {
    return PlaneGraph::from_rotations({
        {1, 2}, {2, 0}, {0, 1},
        {4, 5}, {5, 3}, {3, 4},
    });
}

ListAssignment uniform_lists(int n, const ColorList& l) { return ListAssignment(n, l); }

}  // namespace

TEST_CASE("triangle suitable coloring takes smallest colors") {
    auto g = triangle_plane();
    ListAssignment L = {{5}, {5, 7}, {5, 7, 9}};
    CHECK(!check_suitable(g, 0, 1, L));
    Coloring phi = color_suitable(g, 0, 1, L);
    CHECK(phi == Coloring{5, 7, 9});
}

TEST_CASE("wheel suitable coloring is valid and deterministic") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {9};
    L[2] = {8, 9};
    for (int i = 3; i <= 6; ++i) L[i] = {0, 1, 2};
    Coloring phi = color_suitable(g, 1, 2, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
    CHECK(phi[1] == 9);
    CHECK(phi[2] == 8);
    CHECK(phi == color_suitable(g, 1, 2, L));
}

TEST_CASE("fan pentagon exercises the chord split") {
    auto g = fan_pentagon_plane();
    ListAssignment L = {{5}, {5, 6}, {1, 2, 3}, {2, 3, 4}, {7, 8, 9}};
    Coloring phi = color_suitable(g, 0, 1, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
}

TEST_CASE("identical five-lists color any of the fixtures") {
    ColorList five = {0, 1, 2, 3, 4};
    for (auto g : {triangle_plane(), fan_pentagon_plane(), wheel6_plane()}) {
        ListAssignment L = uniform_lists(g.slot_count(), five);
        auto W = g.outer_walk();
        Coloring phi = color_suitable(g, W[0], W[1], L);
        CHECK(verify_coloring(g.to_graph(), L, phi, false));
    }
}

TEST_CASE("block tree with cut vertex and pendant bridge") {
    auto g = bowtie_pendant_plane();
    ListAssignment L(6);
    L[0] = {4};
    L[1] = {4, 5};
    for (int v : {2, 3, 4, 5}) L[v] = {0, 1, 2};
    Coloring phi = color_suitable(g, 0, 1, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
}

TEST_CASE("precolored pair is respected") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    for (int i = 1; i <= 6; ++i) L[i] = {0, 1, 2};
    Coloring phi = color_precolored_pair(g, 1, 2, 2, 1, L);
    CHECK(phi[1] == 2);
    CHECK(phi[2] == 1);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
}

TEST_CASE("suitable rejections name the offending condition") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {9};
    L[2] = {8, 9};
    for (int i = 3; i <= 6; ++i) L[i] = {0, 1, 2};

    SUBCASE("non-adjacent anchors") {
        CHECK(check_suitable(g, 1, 4, L).has_value());
    }
    SUBCASE("interior vertex with a short list") {
        L[0] = {0, 1, 2, 3};
        CHECK(check_suitable(g, 1, 2, L).has_value());
        CHECK_THROWS_AS(color_suitable(g, 1, 2, L), InvalidListsError);
    }
    SUBCASE("anchor off the outer face") {
        CHECK(check_suitable(g, 0, 1, L).has_value());
    }
    SUBCASE("duplicate colors do not inflate a list") {
        L[3] = {1, 1, 1};
        CHECK(check_suitable(g, 1, 2, L).has_value());
    }
    SUBCASE("no outer face designated") {
        auto h = g;
        h.clear_outer();
        CHECK(check_suitable(h, 1, 2, L).has_value());
    }
}

TEST_CASE("correct triple on the fan pentagon splits at a chord") {
    auto g = fan_pentagon_plane();
    ListAssignment L = {{7}, {8}, {0, 1, 2, 9}, {1, 2, 3}, {0, 1, 2, 3}};
    CHECK(!check_correct(g, 0, 1, 3, L));
    Coloring phi = color_correct(g, 0, 1, 3, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
    CHECK(phi[0] == 7);
    CHECK(phi[1] == 8);
    CHECK(phi == color_correct(g, 0, 1, 3, L));
}

TEST_CASE("correct triple with distant special vertex") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {0};
    L[4] = {1};
    L[3] = {2, 3, 4};
    for (int v : {2, 5, 6}) L[v] = {0, 1, 2, 3};
    trace::Capture cap;
    Coloring phi = color_correct(g, 1, 4, 3, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
    CHECK(cap.saw("PL4-fan"));
}

TEST_CASE("correct triple with special vertex beside the anchor") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {0};
    L[4] = {1};
    L[2] = {0, 1, 2};
    for (int v : {3, 5, 6}) L[v] = {0, 1, 2, 3};
    trace::Capture cap;
    Coloring phi = color_correct(g, 1, 4, 2, L);
    CHECK(verify_coloring(g.to_graph(), L, phi, false));
    CHECK(cap.saw("PL4-fan-z"));
}

TEST_CASE("correct triple rejections") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {0};
    L[4] = {1};
    L[3] = {2, 3, 4};
    for (int v : {2, 5, 6}) L[v] = {0, 1, 2, 3};

    SUBCASE("short list on the third vertex") {
        L[3] = {2, 3};
        CHECK(check_correct(g, 1, 4, 3, L).has_value());
    }
    SUBCASE("ordinary boundary vertex needs four colors") {
        L[5] = {0, 1, 2};
        CHECK(check_correct(g, 1, 4, 3, L).has_value());
    }
    SUBCASE("identical anchor singletons") {
        L[4] = {0};
        CHECK(check_correct(g, 1, 4, 3, L).has_value());
    }
    SUBCASE("not two-connected") {
        auto h = bowtie_pendant_plane();
        ListAssignment M(6, ColorList{0, 1, 2, 3, 4});
        M[0] = {0};
        M[1] = {1};
        CHECK(check_correct(h, 0, 1, 3, M).has_value());
    }
}

TEST_CASE("plus edge where the extra edge embeds after triangulation") {
    auto g = PlaneGraph::from_rotations({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    g.set_outer({1, 0});
    ListAssignment L = uniform_lists(4, {0, 1, 2, 3, 4});
    trace::Capture cap;
    Coloring phi = color_plus_edge(g, {0, 2}, L);
    CHECK(cap.saw("PL3-planar"));
    Graph full = g.to_graph();
    full.add_edge(0, 2);
    CHECK(verify_coloring(full, L, phi, false));
}

TEST_CASE("plus edge on a drawing of K5") {
    auto g = k5_minus_edge_plane();
    ListAssignment L = uniform_lists(5, {0, 1, 2, 3, 4});
    trace::Capture cap;
    Coloring phi = color_plus_edge(g, {1, 4}, L);
    CHECK(cap.saw("PL3-apex"));
    Graph full = g.to_graph();
    full.add_edge(1, 4);
    CHECK(verify_coloring(full, L, phi, false));
    // K5 with one shared palette forces all five colors.
    Coloring sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == Coloring{0, 1, 2, 3, 4});
}

TEST_CASE("plus edge bridging two components") {
    auto g = two_triangles_plane();
    ListAssignment L = uniform_lists(6, {0, 1, 2, 3, 4});
    trace::Capture cap;
    Coloring phi = color_plus_edge(g, {2, 3}, L);
    CHECK(cap.saw("PL3-bridge"));
    Graph full = g.to_graph();
    full.add_edge(2, 3);
    CHECK(verify_coloring(full, L, phi, false));
}

TEST_CASE("plus edge rejections") {
    auto g = k5_minus_edge_plane();
    ListAssignment L = uniform_lists(5, {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(color_plus_edge(g, {2, 3}, L), InvalidGraphError);
    CHECK_THROWS_AS(color_plus_edge(g, {1, 1}, L), InvalidGraphError);
    L[2] = {0, 1, 2, 3};
    CHECK_THROWS_AS(color_plus_edge(g, {1, 4}, L), InvalidListsError);
}

TEST_CASE("find_suitable_pair walks the boundary in order") {
    auto g = wheel6_plane();
    ListAssignment L(7);
    L[0] = {0, 1, 2, 3, 4};
    L[1] = {9};
    L[2] = {8, 9};
    for (int i = 3; i <= 6; ++i) L[i] = {0, 1, 2};
    auto pr = find_suitable_pair(g, L);
    REQUIRE(pr.has_value());
    CHECK(*pr == std::make_pair(1, 2));

    ListAssignment bad = L;
    bad[4] = {7};
    CHECK(!find_suitable_pair(g, bad).has_value());
}

TEST_CASE("random short lists on the wheel always color") {
    auto g = wheel6_plane();
    std::mt19937 rng(20240517);
    auto sample = [&](int from, int count) {
        std::vector<int> pool(from);
        for (int i = 0; i < from; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        return pool;
    };
    int colored = 0;
    for (int iter = 0; iter < 200; ++iter) {
        ListAssignment L(7);
        L[0] = sample(7, 5);
        L[1] = sample(6, 1);
        L[2] = sample(6, 2);
        for (int i = 3; i <= 6; ++i) L[i] = sample(6, 3);
        if (check_suitable(g, 1, 2, L)) continue;
        Coloring phi = color_suitable(g, 1, 2, L);
        CHECK(verify_coloring(g.to_graph(), L, phi, false));
        ++colored;
    }
    CHECK(colored > 150);
}

TEST_CASE("random four-lists drive the correct engine on the wheel") {
    auto g = wheel6_plane();
    std::mt19937 rng(991);
    auto sample = [&](int from, int count) {
        std::vector<int> pool(from);
        for (int i = 0; i < from; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        return pool;
    };
    int colored = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int z = 2 + static_cast<int>(rng() % 5);  // rim vertex other than 1
        ListAssignment L(7);
        L[0] = sample(8, 5);
        L[1] = sample(6, 1);
        int y = z == 4 ? 5 : 4;
        L[y] = sample(6, 1);
        L[z] = sample(6, 3);
        for (int v = 2; v <= 6; ++v)
            if (v != z && v != y) L[v] = sample(7, 4);
        if (check_correct(g, 1, y, z, L)) continue;
        Coloring phi = color_correct(g, 1, y, z, L);
        CHECK(verify_coloring(g.to_graph(), L, phi, false));
        ++colored;
    }
    CHECK(colored > 150);
}

TEST_CASE("oracle agrees the suitable fixtures are colorable") {
    auto g = fan_pentagon_plane();
    ListAssignment L = {{5}, {5, 6}, {1, 2, 3}, {2, 3, 4}, {7, 8, 9}};
    auto phi = oracle_color(g.to_graph(), L);
    REQUIRE(phi.has_value());
    CHECK(verify_coloring(g.to_graph(), L, *phi, false));
}
