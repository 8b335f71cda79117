#include "doctest.h"

#include "crosscolor/lists.hpp"

using namespace crosscolor;

TEST_CASE("list set operations") {
    ColorList a{0, 1, 2, 3, 4}, b{1, 3, 5};
    CHECK(list_minus(a, b) == ColorList{0, 2, 4});
    CHECK(list_minus(a, 2) == ColorList{0, 1, 3, 4});
    CHECK(list_intersect(a, b) == ColorList{1, 3});
    CHECK(list_union(b, ColorList{0}) == ColorList{0, 1, 3, 5});
    CHECK(list_contains(a, 4));
    CHECK(!list_contains(b, 0));
    CHECK(smallest_avoiding(a, {0, 1}, "t") == 2);
    CHECK_THROWS_AS(smallest_avoiding(b, {1, 3, 5}, "t"), InvalidListsError);
}

TEST_CASE("normalize_lists sorts and dedups") {
    ListAssignment l{{3, 1, 3, 0}, {}};
    normalize_lists(l);
    CHECK(l[0] == ColorList{0, 1, 3});
}

static Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

TEST_CASE("verify_coloring catches each failure mode") {
    Graph g = path_graph(3);
    ListAssignment L{{0, 1}, {0, 1}, {0, 1}};
    Coloring phi{0, 1, 0};
    CHECK(verify_coloring(g, L, phi));

    Coloring hole{0, kUncolored, 0};
    CHECK(!verify_coloring(g, L, hole, false));
    CHECK_THROWS_AS(verify_coloring(g, L, hole), InvalidListsError);

    Coloring offlist{0, 1, 7};
    CHECK(!verify_coloring(g, L, offlist, false));

    Coloring clash{0, 0, 1};
    CHECK(!verify_coloring(g, L, clash, false));
    CHECK_THROWS_AS(verify_coloring(g, L, clash), InvalidGraphError);
}

TEST_CASE("residual_list removes neighbor colors only") {
    Graph g = path_graph(3);
    ListAssignment L{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    Coloring phi{0, kUncolored, 2};
    CHECK(residual_list(g, L, phi, 1) == ColorList{1});
    CHECK(residual_list(g, L, phi, 0) == ColorList{0, 1, 2});  // neighbor 1 uncolored
}

TEST_CASE("safety predicate counts distinct colors seen by heavy outsiders") {
    // z adjacent to all three path vertices.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int v : {0, 1, 2}) g.add_edge(3, v);
    std::vector<int> path{0, 1, 2};
    ListAssignment L{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};

    CHECK(heavy_outside(g, path) == std::vector<int>{3});

    Coloring repeat{0, 1, 0, kUncolored};
    CHECK(is_safe(g, L, repeat, path));      // sees {0,1}, keeps 3
    CHECK(is_alpha_safe(g, L, repeat, path, 0));
    CHECK(!is_alpha_safe(g, L, repeat, path, 1));

    Coloring spread{0, 1, 2, kUncolored};
    CHECK(safety_violation(g, L, spread, path) == 3);  // sees {0,1,2}, keeps 2

    // With a bigger list at z the spread coloring is fine.
    L[3] = {0, 1, 2, 3, 4, 5};
    CHECK(is_safe(g, L, spread, path));
}

TEST_CASE("vertices with two path neighbors are never safety constraints") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    std::vector<int> path{0, 1, 2};
    ListAssignment L{{0, 1}, {0, 1, 2}, {0, 1}, {0, 1, 2}};
    Coloring phi{0, 1, 0, kUncolored};
    CHECK(heavy_outside(g, path).empty());
    CHECK(is_safe(g, L, phi, path));
}
