// Drawings with at most two crossings and their canonical normalized form.
//
// A raw drawing arrives as a graph plus either explicit clockwise rotations
// or straight-line coordinates; with coordinates, crossings are detected by
// exact integer arithmetic (no floating point anywhere).  normalize() sorts
// the input into one of three shapes:
//
//   Planar    no crossings; the embedding is kept and inner faces of simple
//             boundary are triangulated.
//   PlusEdge  a single skeleton edge accounts for every crossing (one
//             crossing, or two crossings through a common edge); that edge
//             is pulled out and the rest embeds in the plane.
//   TwoCross  two crossings on four distinct edges: each crossing's four
//             endpoints are wired into a 4-cycle drawn tightly around the
//             crossing, one edge of each crossing leaves the skeleton, and
//             the skeleton is triangulated completely.  The kept crossed
//             edge splits its 4-cycle region into the two triangular faces
//             flanking it; the removed edge is understood to run across it.
//
// Labels inside a crossing follow a fixed orientation convention (see
// Crossing), so downstream case analysis never guesses handedness.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crosscolor/graph.hpp"
#include "crosscolor/plane_graph.hpp"

namespace crosscolor {

struct RawCrossing {
    std::pair<int, int> edge_a;
    std::pair<int, int> edge_b;
};

// Line-oriented instance data before any normalization.
struct RawDrawing {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    // Clockwise neighbor order per vertex; authoritative when present.
    std::vector<std::vector<int>> rotations;
    bool has_rotations = false;
    // Straight-line coordinates; required when rotations are absent.
    std::vector<std::pair<long long, long long>> positions;
    bool has_positions = false;
    // Explicit crossing list; when absent and coordinates are present the
    // crossings are detected geometrically.
    std::vector<RawCrossing> crossings;
    bool has_crossings = false;
    std::vector<int> outer_hint;  // vertex walk of the intended outer face
};

enum class DrawingMode { Planar, PlusEdge, TwoCross };

// One crossing in canonical labeling.  edge_a = (v, w) is the edge removed
// from the skeleton; edge_b = (t, u) stays.  `clockwise` reports whether
// v, u, w, t appear clockwise around the crossing point; after normalize the
// first crossing is always counterclockwise and the second clockwise.
struct Crossing {
    std::pair<int, int> edge_a;
    std::pair<int, int> edge_b;
    bool clockwise = false;

    int v() const { return edge_a.first; }
    int w() const { return edge_a.second; }
    int t() const { return edge_b.first; }
    int u() const { return edge_b.second; }
    std::vector<int> cluster() const { return {v(), u(), w(), t()}; }
};

struct TwoCrossingDrawing {
    DrawingMode mode = DrawingMode::Planar;
    PlaneGraph skeleton;
    std::vector<Crossing> crossings;            // exactly 2 in TwoCross mode
    std::pair<int, int> extra_edge{-1, -1};     // PlusEdge mode only
    std::vector<std::pair<int, int>> added_edges;    // cluster + fill edges
    std::vector<std::pair<int, int>> redrawn_edges;  // pre-existing cluster edges
    bool degenerate = false;  // the two clusters share two or more vertices
    Graph original;           // input vertex set and edges, nothing added

    // Adjacency of the working graph the solver colors: skeleton plus the
    // removed crossed edges (and the plus-edge extra).
    Graph full_graph() const;
    // Undoes normalize structurally: skeleton rotations with the removed
    // edges drawn back through their crossings, explicit crossing lines, and
    // the current outer walk as hint.
    RawDrawing as_raw() const;
};

// Canonicalizes a raw drawing.  Throws InvalidGraphError for inputs outside
// the supported shapes (more than two crossings, degenerate geometry,
// crossing data inconsistent with the rotations) and BadInputError for
// structurally broken input (bad ids, missing rotations and positions).
TwoCrossingDrawing normalize(const RawDrawing& raw);

// Structural check of every drawing invariant; throws InvalidGraphError with
// a description when one fails.  normalize() output always passes.
void validate_drawing(const TwoCrossingDrawing& d);

// Plane embeddings of the components of (working graph) minus the path q,
// each rooted so its outer face is the hole left by q.  Requires q to carry
// at least one endpoint of every crossed edge, so no crossing survives.
// Components reduced to a single vertex have no outer face set.
std::vector<PlaneGraph> planarize_minus_path(const TwoCrossingDrawing& d,
                                             const std::vector<int>& q);

}  // namespace crosscolor
