// List assignments, partial colorings, and the safety predicate.
//
// A color is a small nonnegative int.  A Coloring maps vertex id -> color,
// with -1 meaning uncolored.  Lists are kept sorted and duplicate-free.

#pragma once

#include <string>
#include <vector>

#include "crosscolor/graph.hpp"

namespace crosscolor {

using ColorList = std::vector<int>;
using ListAssignment = std::vector<ColorList>;  // indexed by vertex id
using Coloring = std::vector<int>;              // -1 = uncolored

inline constexpr int kUncolored = -1;

// Sorts and dedups every list in place.
void normalize_lists(ListAssignment& lists);

bool list_contains(const ColorList& list, int color);

// Set difference a \ b, both sorted.
ColorList list_minus(const ColorList& a, const ColorList& b);
ColorList list_minus(const ColorList& a, int color);
ColorList list_intersect(const ColorList& a, const ColorList& b);
ColorList list_union(const ColorList& a, const ColorList& b);

// Smallest color in `list` not among `avoid`; throws InvalidListsError when
// none exists and `required` names the caller (for the message).
int smallest_avoiding(const ColorList& list, const ColorList& avoid,
                      const std::string& required);

// True if every alive colored vertex pair joined by an edge has distinct
// colors.  Uncolored vertices are ignored.
bool proper(const Graph& g, const Coloring& phi);

// True if every alive colored vertex uses a color from its list.
bool respects_lists(const Graph& g, const ListAssignment& lists, const Coloring& phi);

// Full check: every alive vertex colored, proper, and from-list.  Throws a
// descriptive InvalidListsError / InvalidGraphError on failure when `throwing`;
// otherwise returns false.
bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                     bool throwing = true);

// L(v) minus the colors phi already put on neighbors of v in g.
ColorList residual_list(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                        int v);

// Vertices outside `h` (alive, uncolored by convention of use) that have at
// least 3 neighbors inside `h`.
std::vector<int> heavy_outside(const Graph& g, const std::vector<int>& h);

// Safety of a coloring of the vertex set `h` (every vertex of `h` must be
// colored): each alive vertex z outside h with >= 3 neighbors in h must keep
// at least 3 usable colors once the colors on its h-neighbors are removed.
// Returns the first violating vertex id, or -1 when safe.
int safety_violation(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                     const std::vector<int>& h);

bool is_safe(const Graph& g, const ListAssignment& lists, const Coloring& phi,
             const std::vector<int>& h);

// Convenience for path colorings: safe and phi(path[0]) == alpha.
bool is_alpha_safe(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                   const std::vector<int>& path, int alpha);

}  // namespace crosscolor
