#include "doctest.h"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "crosscolor/drawing.hpp"
#include "crosscolor/errors.hpp"
#include "crosscolor/generators.hpp"
#include "crosscolor/path_engine.hpp"
#include "crosscolor/planar_colorer.hpp"
#include "crosscolor/trace.hpp"

using namespace crosscolor;

namespace {

std::set<std::pair<int, int>> edge_set(const PlaneGraph& g) {
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.insert({std::min(u, v), std::max(u, v)});
    return es;
}

// shortest skeleton distance between the two crossing clusters
int cluster_distance(const TwoCrossingDrawing& d) {
    const auto a = d.crossings[0].cluster();
    const auto b = d.crossings[1].cluster();
    std::vector<int> dist(d.skeleton.slot_count(), -1);
    std::queue<int> q;
    for (int v : a) {
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : d.skeleton.rotation(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    int best = -1;
    for (int v : b)
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    return best;
}

void check_same_drawing(const TwoCrossingDrawing& d, const TwoCrossingDrawing& d2) {
    REQUIRE(d2.crossings.size() == d.crossings.size());
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        CHECK(d2.crossings[i].edge_a == d.crossings[i].edge_a);
        CHECK(d2.crossings[i].edge_b == d.crossings[i].edge_b);
        CHECK(d2.crossings[i].clockwise == d.crossings[i].clockwise);
    }
    REQUIRE(d2.skeleton.slot_count() == d.skeleton.slot_count());
    for (int v : d.skeleton.vertices()) CHECK(d2.skeleton.rotation(v) == d.skeleton.rotation(v));
    CHECK(d2.skeleton.outer_walk() == d.skeleton.outer_walk());
}

}  // namespace

TEST_CASE("random_triangulation smallest instances are the fixed seeds") {
    auto t = random_triangulation(3, 11);
    CHECK(t.alive_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.outer_walk() == std::vector<int>{0, 2, 1});

    // K4 admits no flips (every diagonal already present), so n=4 is exact
    auto k = random_triangulation(4, 99);
    CHECK(k.rotation(0) == std::vector<int>{2, 3, 1});
    CHECK(k.rotation(1) == std::vector<int>{0, 3, 2});
    CHECK(k.rotation(2) == std::vector<int>{1, 3, 0});
    CHECK(k.rotation(3) == std::vector<int>{1, 0, 2});
    CHECK(k.outer_walk() == std::vector<int>{0, 2, 1});

    CHECK_THROWS_AS(random_triangulation(2, 0), BadInputError);
}

TEST_CASE("random_triangulation grows valid triangulations with a fixed outer face") {
    for (int n : {5, 12, 30, 60}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            CAPTURE(n);
            CAPTURE(seed);
            auto g = random_triangulation(n, seed);
            CHECK(g.alive_count() == n);
            CHECK(g.edge_count() == 3 * n - 6);
            CHECK(g.outer_walk() == std::vector<int>{0, 2, 1});
            CHECK(g.all_faces_triangulated());
            g.validate(true);
        }
    }
}

TEST_CASE("random_triangulation is deterministic and seed-sensitive") {
    auto a = random_triangulation(30, 5);
    auto b = random_triangulation(30, 5);
    for (int v : a.vertices()) CHECK(a.rotation(v) == b.rotation(v));
    auto c = random_triangulation(30, 6);
    CHECK(edge_set(a) != edge_set(c));
}

TEST_CASE("random_two_crossing output validates at every size") {
    for (int n : {10, 16, 25, 40}) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            CAPTURE(n);
            CAPTURE(seed);
            auto d = random_two_crossing(n, seed);
            CHECK(d.mode == DrawingMode::TwoCross);
            CHECK(d.skeleton.alive_count() == n);
            REQUIRE(d.crossings.size() == 2);
            validate_drawing(d);
            auto d2 = random_two_crossing(n, seed);
            check_same_drawing(d, d2);
        }
    }
    CHECK_THROWS_AS(random_two_crossing(9, 0), BadInputError);
}

TEST_CASE("random_two_crossing survives a renormalization round trip") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CAPTURE(seed);
        auto d = random_two_crossing(18, seed);
        auto d2 = normalize(d.as_raw());
        check_same_drawing(d, d2);
        CHECK(d2.added_edges.empty());
    }
}

TEST_CASE("random_two_crossing covers all three cluster distance classes") {
    std::set<int> small_dists;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto d = random_two_crossing(12, seed);
        small_dists.insert(std::min(cluster_distance(d), 2));
    }
    CHECK(small_dists == std::set<int>{0, 1});

    std::set<int> big_dists;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto d = random_two_crossing(20, seed);
        big_dists.insert(std::min(cluster_distance(d), 2));
    }
    CHECK(big_dists == std::set<int>{0, 1, 2});
}

TEST_CASE("random_lists draws distinct colors from the pool") {
    auto lists = random_lists(6, 5, 8, 3);
    REQUIRE(lists.size() == 6);
    for (const auto& l : lists) {
        CHECK(l.size() == 5);
        CHECK(std::is_sorted(l.begin(), l.end()));
        CHECK(std::adjacent_find(l.begin(), l.end()) == l.end());
        for (int c : l) CHECK((0 <= c && c < 8));
    }
    auto again = random_lists(6, 5, 8, 3);
    CHECK(lists == again);
    CHECK(random_lists(6, 5, 8, 4) != lists);
    CHECK_THROWS_AS(random_lists(3, 5, 4, 0), BadInputError);
    CHECK_THROWS_AS(random_lists(3, 0, 4, 0), BadInputError);
}

TEST_CASE("random_suitable_lists satisfies the suitability contract") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CAPTURE(seed);
        auto g = random_triangulation(12, seed + 70);
        auto lists = random_suitable_lists(g, 0, 2, 8, seed);
        CHECK(!check_suitable(g, 0, 2, lists).has_value());
        auto walk = g.outer_walk();
        std::set<int> outer(walk.begin(), walk.end());
        for (int v : g.vertices()) {
            if (v == 0 || v == 2) continue;
            if (outer.count(v))
                CHECK(lists[v].size() >= 3);
            else
                CHECK(lists[v].size() == 5);
        }
        CHECK(lists[0].size() >= 1);
        CHECK(lists[2].size() >= 2);
        auto phi = color_suitable(g, 0, 2, lists);
        CHECK(verify_coloring(g.to_graph(), lists, phi));
    }
    auto g = random_triangulation(12, 1);
    CHECK_THROWS_AS(random_suitable_lists(g, 0, 2, 4, 0), BadInputError);
}

TEST_CASE("random_correct_lists pins the two anchors and frees the third") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CAPTURE(seed);
        auto g = random_triangulation(14, seed + 130);
        auto lists = random_correct_lists(g, 0, 2, 1, 8, seed);
        CHECK(!check_correct(g, 0, 2, 1, lists).has_value());
        CHECK(lists[0].size() == 1);
        CHECK(lists[2].size() == 1);
        CHECK(lists[0] != lists[2]);
        CHECK(lists[1].size() >= 3);
        auto phi = color_correct(g, 0, 2, 1, lists);
        CHECK(verify_coloring(g.to_graph(), lists, phi));
    }
    auto g = random_triangulation(14, 2);
    // interior vertex cannot serve as an anchor
    int interior = -1;
    auto walk = g.outer_walk();
    std::set<int> outer(walk.begin(), walk.end());
    for (int v : g.vertices())
        if (!outer.count(v)) {
            interior = v;
            break;
        }
    REQUIRE(interior >= 0);
    CHECK_THROWS_AS(random_suitable_lists(g, interior, 2, 8, 0), BadInputError);
}

TEST_CASE("fixture registry runs every tagged branch") {
    auto tags = fixture_tags();
    CHECK(tags.size() == 40);
    CHECK(std::is_sorted(tags.begin(), tags.end()));
    CHECK_THROWS_AS(lemma_fixture("L0-nope"), BadInputError);

    int extend = 0, great = 0, good = 0;
    for (const auto& tag : tags) {
        CAPTURE(tag);
        auto f = lemma_fixture(tag);
        CHECK(f.expected == tag);
        trace::Capture cap;
        switch (f.kind) {
            case LemmaFixture::Kind::Extend: {
                ++extend;
                Coloring phi = f.phi;
                extend_one(f.graph, f.lists, f.path, f.target, f.helper, phi);
                CHECK(proper(f.graph, phi));
                CHECK(respects_lists(f.graph, f.lists, phi));
                CHECK(residual_list(f.graph, f.lists, phi, f.helper).size() >= 3);
                break;
            }
            case LemmaFixture::Kind::Great: {
                ++great;
                auto an = analyze_path(f.graph, f.path);
                REQUIRE(an.great);
                auto phi = color_great(f.graph, an, f.lists, f.alpha);
                CHECK(is_alpha_safe(f.graph, f.lists, phi, f.path, f.alpha));
                break;
            }
            case LemmaFixture::Kind::Good: {
                ++good;
                auto an = analyze_path(f.graph, f.path);
                REQUIRE(an.good);
                auto phi = color_good(f.graph, an, f.lists);
                CHECK(is_safe(f.graph, f.lists, phi, f.path));
                break;
            }
            default:
                break;
        }
        CHECK(cap.saw(f.expected));
    }
    CHECK(extend == 3);
    CHECK(great == 16);
    CHECK(good == 21);
}
