// Induced-path classification and safe path colorings.
//
// A vertex outside an induced path that sees three or more path vertices is
// "crowded": coloring the path risks burning three of its list colors.  The
// analyzer classifies paths by how crowded vertices attach (nice / great /
// good), and the coloring routines produce proper list colorings of the path
// that stay safe: every crowded vertex keeps at least three usable colors.
//
// All coloring entry points require lists of size at least five on the path
// and on its crowded vertices; internally lists are trimmed to their five
// smallest colors, which only strengthens the produced guarantees.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crosscolor/graph.hpp"
#include "crosscolor/lists.hpp"

namespace crosscolor {

// A window of the path is a run of three consecutive vertices
// {path[i-1], path[i], path[i+1]}, identified by its center index i.
struct PathAnalysis {
    std::vector<int> path;
    std::vector<int> z_set;  // vertices off the path with >= 3 path neighbors
    // window_adj[i]: vertices adjacent to all three window-i vertices, sorted
    // ascending; defined for 1 <= i <= p-2, empty elsewhere.
    std::vector<std::vector<int>> window_adj;
    bool nice = false;
    bool great = false;
    bool good = false;
    // For good-but-not-great paths: the special vertex and its sorted path
    // neighborhood (a subset of the first four path vertices).
    std::optional<std::pair<int, std::vector<int>>> good_witness;
};

// Classifies `path`, which must be an induced path of g (throws BadInputError
// otherwise).  nice: every crowded vertex covers exactly one window, no window
// is covered by more than two vertices, and a doubly covered window has at
// most one vertex on its two flanking windows combined.  great additionally
// bounds flank coverage between any two doubly covered windows.  good: great,
// or a witness hanging on the first four vertices as documented in the
// implementation.
PathAnalysis analyze_path(const Graph& g, const std::vector<int>& path);

// Colors path[idx], all other path vertices being colored already, so that
// the path stays proper and x (adjacent to exactly path[idx], path[idx+1],
// path[idx+2] among path vertices) keeps at least three usable colors.
// Requires idx == 0 or phi equal on path[idx-1] and path[idx+1]; throws
// BadInputError when the hypotheses fail.  Writes the color into phi and
// returns it.
int extend_one(const Graph& g, const ListAssignment& lists, const std::vector<int>& path,
               int idx, int x, Coloring& phi);

// Safe coloring of a great path starting with color alpha on path[0].
// Vertices off the path are never colored.  Throws BadInputError when the
// analysis is not great, InvalidListsError when alpha is missing from the
// first list or a needed list is shorter than five.
Coloring color_great(const Graph& g, const PathAnalysis& analysis, const ListAssignment& lists,
                     int alpha);

// Safe coloring of a good path (no start color is guaranteed).
Coloring color_good(const Graph& g, const PathAnalysis& analysis, const ListAssignment& lists);

}  // namespace crosscolor
