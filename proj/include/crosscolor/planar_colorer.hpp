// Structured list-coloring of plane graphs with reduced boundary lists.
//
// Three entry points, in increasing strength of what they accept:
//
//  * color_suitable: connected plane graph with designated outer face, an
//    adjacent anchor pair {x,y} on the outer walk, |L(x)| >= 1, |L(y)| >= 2,
//    other outer vertices >= 3, interior >= 5.  Classic boundary recursion:
//    chord splits, otherwise delete the boundary neighbor of y reserving two
//    of its colors from its interior fan.
//
//  * color_correct: 2-connected inner triangulation with outer cycle C and
//    three distinct special vertices x, y, z on C; x, y get forced (distinct)
//    colors, |L(z)| >= 3, the rest of C >= 4, interior >= 5.
//
//  * color_plus_edge: plane graph plus one extra abstract edge e whose
//    endpoints may sit anywhere; all lists >= 5.
//
// All routines are deterministic and return full colorings verified by the
// caller-facing wrappers.

#pragma once

#include <optional>

#include "crosscolor/lists.hpp"
#include "crosscolor/plane_graph.hpp"

namespace crosscolor {

// Quiet validation; returns a reason string when the instance does not meet
// the preconditions, std::nullopt when it does.
std::optional<std::string> check_suitable(const PlaneGraph& g, int x, int y,
                                          const ListAssignment& lists);
std::optional<std::string> check_correct(const PlaneGraph& g, int x, int y, int z,
                                         const ListAssignment& lists);

Coloring color_suitable(const PlaneGraph& g, int x, int y, const ListAssignment& lists);

// As color_suitable but with the anchor colors already chosen by the caller
// (cx != cy; x adjacent to y, both on the outer walk).
Coloring color_precolored_pair(const PlaneGraph& g, int x, int y, int cx, int cy,
                               const ListAssignment& lists);

Coloring color_correct(const PlaneGraph& g, int x, int y, int z, const ListAssignment& lists);

// g is the plane part; extra is an edge not present in g (its endpoints are).
// Colors g plus that edge with every list of size >= 5.
Coloring color_plus_edge(const PlaneGraph& g, std::pair<int, int> extra,
                         const ListAssignment& lists);

// First adjacent outer pair (x, y) that makes (g, x, y, lists) suitable,
// scanning the outer walk deterministically; nullopt when none works.
std::optional<std::pair<int, int>> find_suitable_pair(const PlaneGraph& g,
                                                      const ListAssignment& lists);

}  // namespace crosscolor
