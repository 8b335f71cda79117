// Seeded instance generation.
//
// Everything here is a pure function of its parameters: the same seed always
// reproduces the same instance, and no global state is consulted.  Three
// families are provided:
//
//  * random structure: planar triangulations grown from K4 by face insertions
//    and diagonal flips, and two-crossing drawings grown around prebuilt
//    crossing gadgets so that the cluster distance (shared vertex, bridging
//    edge, or farther apart) is controlled by the seed;
//
//  * random lists: uniform fixed-size lists, plus assignments shaped to the
//    boundary profiles the structured colorers accept;
//
//  * the case fixture registry: small named (graph, path, lists) instances,
//    each built to steer the coloring engines through one documented case
//    branch, keyed by the branch's trace tag.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosscolor/drawing.hpp"
#include "crosscolor/graph.hpp"
#include "crosscolor/lists.hpp"
#include "crosscolor/plane_graph.hpp"

namespace crosscolor {

// Triangulation on n >= 3 vertices: every inner face a triangle, outer face
// the triangle 0-2-1 kept from the seed graph.  Grown from K4 by inserting
// each new vertex into a random inner face and mixing with random diagonal
// flips away from the outer face.
PlaneGraph random_triangulation(int n, std::uint64_t seed);

// Normalized drawing with exactly two crossings on n >= 10 vertices.  The
// crossing gadgets come from fixed frames whose cluster distance is 0 (a
// shared cluster vertex), 1 (a direct edge between the clusters), or at least
// 2 (buffer rings around both clusters); the seed picks the frame (distance
// >= 2 needs n >= 16) and drives the random growth around it.
TwoCrossingDrawing random_two_crossing(int n, std::uint64_t seed);

// One list per vertex 0..n-1, each a uniform random size-subset of
// {0, ..., pool-1}.
ListAssignment random_lists(int n, int size, int pool, std::uint64_t seed);

// Random assignment meeting the boundary-reduced profile color_suitable
// accepts: |L(x)| >= 1, |L(y)| >= 2, >= 3 on the rest of the outer walk,
// >= 5 inside.  Sizes vary randomly between the minimum and five.
ListAssignment random_suitable_lists(const PlaneGraph& g, int x, int y, int pool,
                                     std::uint64_t seed);

// Random assignment for color_correct: distinct singletons on x and y,
// >= 3 on z, >= 4 on the rest of the outer walk, >= 5 inside.
ListAssignment random_correct_lists(const PlaneGraph& g, int x, int y, int z, int pool,
                                    std::uint64_t seed);

// A registry fixture: the data needed to run one coloring entry point and
// watch it commit to one specific case branch.
struct LemmaFixture {
    enum class Kind {
        Extend,  // extend_one on `target` with `helper` watching the window
        Great,   // color_great with start color `alpha`
        Good,    // color_good
        Solve,   // full solver run on `raw` (drawing fixtures)
    };

    std::string tag;       // registry key
    std::string expected;  // trace tag the run must emit
    Kind kind = Kind::Good;

    Graph graph;
    std::vector<int> path;
    ListAssignment lists;

    // Kind::Extend only: phi holds the rest of the path already colored.
    Coloring phi;
    int target = -1;
    int helper = -1;

    int alpha = 0;  // Kind::Great start color

    RawDrawing raw;  // Kind::Solve instance
};

// Looks up a fixture by tag; throws BadInputError for unknown tags.
LemmaFixture lemma_fixture(const std::string& tag);

// All registry tags, sorted.
std::vector<std::string> fixture_tags();

}  // namespace crosscolor
