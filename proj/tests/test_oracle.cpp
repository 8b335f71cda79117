#include "doctest.h"

#include "crosscolor/oracle.hpp"

using namespace crosscolor;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

}  // namespace

TEST_CASE("oracle finds colorings and respects lists") {
    Graph g = cycle_graph(4);
    ListAssignment L{{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    auto phi = oracle_color(g, L);
    REQUIRE(phi.has_value());
    CHECK(verify_coloring(g, L, *phi));
}

TEST_CASE("oracle reports uncolorable instances") {
    Graph k3 = complete_graph(3);
    ListAssignment L{{0, 1}, {0, 1}, {0, 1}};
    CHECK(!oracle_colorable(k3, L));

    // Empty list on an alive vertex.
    ListAssignment L2{{0, 1}, {}, {0, 1}};
    CHECK(!oracle_colorable(k3, L2));
}

TEST_CASE("oracle is deterministic and prefers small colors") {
    Graph g = cycle_graph(5);
    ListAssignment L(5, ColorList{0, 1, 2});
    auto a = oracle_color(g, L);
    auto b = oracle_color(g, L);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("even cycles are 2-choosable, odd cycles are not") {
    for (int n : {4, 6}) {
        auto r = oracle_choosable(cycle_graph(n), 2);
        CHECK(r.choosable);
    }
    for (int n : {3, 5}) {
        auto r = oracle_choosable(cycle_graph(n), 2);
        CHECK(!r.choosable);
        // The witness really is uncolorable.
        CHECK(!oracle_colorable(cycle_graph(n), r.bad_lists));
    }
}

TEST_CASE("K4 is 3-chromatic-hard and K_{2,4} defeats 2-lists") {
    CHECK(!oracle_choosable(complete_graph(4), 3).choosable);
    CHECK(oracle_choosable(complete_graph(4), 4).choosable);
    CHECK(!oracle_choosable(complete_bipartite(2, 4), 2).choosable);
    CHECK(oracle_choosable(complete_bipartite(2, 2), 2).choosable);
}

TEST_CASE("choosability witness lists have the right shape") {
    auto r = oracle_choosable(cycle_graph(3), 2);
    REQUIRE(!r.choosable);
    for (int v = 0; v < 3; ++v) CHECK(r.bad_lists[v].size() == 2);
    CHECK(r.assignments_checked > 0);
}
