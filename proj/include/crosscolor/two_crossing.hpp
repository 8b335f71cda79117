// Top-level coloring of drawings with at most two crossings from 5-lists.
//
// The solver runs a reduction ladder first: delete a vertex of degree at most
// four, split along a separating triangle whose one side avoids both
// crossings, or rebuild along a separated 4-cycle.  When no reduction
// applies, it connects the two crossing regions by a shortest path, massages
// the path until its crowded neighborhoods are sparse, extends it by one
// vertex into each crossing, colors the extended path so every leftover
// vertex keeps enough colors, and finishes the plane remainder pieces with
// the boundary colorer.
//
// Every branch of the case analysis carries a stable tag (emitted through
// trace::emit and used by tests).  A branch whose structural precondition
// fails throws InternalCaseGap; solve() catches it, records the event in
// SolveStats, and falls back to the exhaustive oracle so callers still get a
// coloring.  Test suites require the fallback count to stay zero.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscolor/drawing.hpp"
#include "crosscolor/lists.hpp"

namespace crosscolor {

// One applicable reduction step, found on a normalized drawing.
struct Reduction {
    enum class Kind {
        LowDegreeDelete,    // v has at most four neighbors in the full graph
        TriangleSplit,      // separating triangle, one side crossing-free
        FourCycleInterior,  // separated 4-cycle, crossing-free side has no
                            // common neighbor of the opposite cycle corners
        FourCycleFan,       // same cycle but common neighbors exist inside
    };

    Kind kind;
    int v = -1;                         // LowDegreeDelete only
    std::vector<int> cycle;             // the separating triangle / 4-cycle
    std::vector<int> inside;            // crossing-free side vertex set
    std::vector<int> common_neighbors;  // FourCycleFan: the fan inside
};

// Searches the ladder in order (low degree, triangle, 4-cycle) and returns
// the first applicable reduction, or nullopt when the drawing is irreducible.
// Deterministic: candidates are scanned in ascending vertex order.
std::optional<Reduction> find_reduction(const TwoCrossingDrawing& d);

// Applies one reduction: builds the smaller instance(s), colors them through
// `recurse`, and assembles a coloring of the whole drawing.  The recursion
// handle receives normalized sub-drawings with compacted vertex ids; lists
// are remapped to match and the result is mapped back.
Coloring apply_reduction(
    const TwoCrossingDrawing& d, const Reduction& r, const ListAssignment& lists,
    const std::function<Coloring(const TwoCrossingDrawing&, const ListAssignment&)>& recurse);

// A shortest path in the full graph from one crossing's four endpoints to the
// other's, using no crossed edge.  Both crossings must exist.  Deterministic
// (smallest start, smallest tie-breaking ids).  The returned path has at
// least one vertex; its first vertex touches crossing 0, its last crossing 1.
std::vector<int> shortest_cc_path(const TwoCrossingDrawing& d);

// Reshapes a shortest connecting path until it is nice: no neighborhood
// window holds more than two outside vertices, and a doubly covered window
// starves its flanking windows.  Exchanges interior path vertices against
// window vertices; each exchange keeps the path shortest.  Input and output
// are paths between the two crossing regions.
std::vector<int> nicify_path(const TwoCrossingDrawing& d, std::vector<int> path);

// Extends a nice connecting path by one ring neighbor into each crossing,
// choosing endpoints so that at most one outside vertex reaches deep across
// each end.  May shift the path sideways by one vertex to repair a bad end.
std::vector<int> build_q(const TwoCrossingDrawing& d, const std::vector<int>& path);

// Certificate for the final stage: the extended path plus the weakening that
// makes it safely colorable (vertices deleted outright, single edges
// removed).  The deleted vertices rejoin the plane remainder with shortened
// lists and are colored there.
struct MagicPathCertificate {
    std::vector<int> q;
    std::vector<int> deleted_vertices;
    std::vector<std::pair<int, int>> deleted_edges;
};

// Executes one certificate: colors q in the weakened graph, splits the rest
// into plane pieces, and finishes each piece with the boundary colorer.
// Returns nullopt when the certificate does not go through (q not safely
// colorable after the weakening, or a piece cannot be anchored).
std::optional<Coloring> magic_finish(const TwoCrossingDrawing& d,
                                     const MagicPathCertificate& cert,
                                     const ListAssignment& lists);

// Counters for oracle fallbacks triggered by InternalCaseGap.  The dump of
// the last failing instance (text form) is kept for reproduction.
struct SolveStats {
    int case_gap_fallbacks = 0;
    std::vector<std::string> gap_tags;
    std::string last_gap_instance;
};

const SolveStats& solve_stats();
void reset_solve_stats();

// Colors any normalized drawing (planar, planar plus one edge, or two
// crossings) from lists of size at least five.  Throws InvalidListsError on
// short lists, InvalidGraphError on structural problems, InternalError if
// even the oracle fallback fails.  The result is a proper coloring of the
// input graph (verified internally, added helper edges included).
Coloring solve(const TwoCrossingDrawing& d, const ListAssignment& lists);

}  // namespace crosscolor
