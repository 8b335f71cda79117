// Plane graphs as clockwise rotation systems.
//
// A PlaneGraph stores, for every vertex, its neighbors in clockwise order
// around the vertex.  Faces are traversed with the convention
//     next(u -> v) = (v -> clockwise-successor of u around v),
// so the combinatorial faces match the geometric faces of a drawing whose
// rotations are clockwise.  Vertex ids are stable across deletions, matching
// Graph, so colorings transfer between the two representations directly.

#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crosscolor/graph.hpp"

namespace crosscolor {

using HalfEdge = std::pair<int, int>;  // directed u -> v

struct FaceSet {
    // face id -> the face's directed boundary walk, each halfedge once
    std::vector<std::vector<HalfEdge>> walks;
    // halfedge -> face id
    std::unordered_map<long long, int> face_of_half;
    int outer = -1;  // face id of the designated outer face, -1 if none set

    int face_of(int u, int v) const;
    // Vertex sequence of face f (first vertex of each halfedge).
    std::vector<int> vertex_walk(int f) const;
    int size() const { return static_cast<int>(walks.size()); }
};

long long half_key(int u, int v);

struct HoleComponent;

class PlaneGraph {
public:
    PlaneGraph() = default;
    explicit PlaneGraph(int n);

    // Builds from clockwise adjacency lists; validates symmetry.
    static PlaneGraph from_rotations(std::vector<std::vector<int>> rot);

    int slot_count() const { return static_cast<int>(rot_.size()); }
    int add_vertex();  // returns the new id

    bool alive(int v) const;
    std::vector<int> vertices() const;
    int alive_count() const;
    int degree(int v) const;
    const std::vector<int>& rotation(int v) const;
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // Position of u in rot[v]; -1 when absent.
    int rot_index(int v, int u) const;
    // Clockwise successor / predecessor of u around v.
    int succ(int v, int u) const;
    int pred(int v, int u) const;

    // Low-level rotation surgery (used by normalize and the generators).
    void insert_neighbor_at(int v, int index, int u);
    void insert_neighbor_after(int v, int anchor, int u);
    void insert_neighbor_before(int v, int anchor, int u);
    void erase_neighbor(int v, int u);  // one side only; callers pair them

    // Adds chord b-c inside the face that has consecutive halfedges
    // (b,a),(a,c) on its boundary.  The triangle b,a,c becomes a face.
    void add_chord_in_face(int b, int a, int c);

    void remove_edge(int u, int v);
    void remove_vertex(int v);

    Graph to_graph() const;

    // Subgraph with only the given edges kept (rotations restricted); vertices
    // not on any kept edge die unless listed in keep_vertices.
    PlaneGraph restricted_to_edges(const std::vector<std::pair<int, int>>& keep,
                                   const std::vector<int>& keep_vertices = {}) const;

    // Outer-face designation.
    void set_outer(HalfEdge h);
    void clear_outer();
    bool outer_set() const;
    HalfEdge outer_half() const;

    FaceSet faces() const;
    // The face walk through halfedge h, starting at h.
    std::vector<HalfEdge> face_walk(HalfEdge h) const;
    std::vector<int> face_vertices(HalfEdge h) const;
    std::vector<int> outer_walk() const;  // vertex walk of the outer face

    // Structural validation: rotation symmetry, no loops/duplicates,
    // connectivity (optional) and the Euler face count.
    void validate(bool require_connected = true) const;

    bool inner_faces_triangulated() const;
    bool all_faces_triangulated() const;

    // Ear-clipping triangulation of the face containing h (must be a simple
    // cycle).  Deterministic: smallest available ear apex first.  Chords
    // listed in `avoid` are never drawn (used to keep removed crossing edges
    // out of rebuilt skeletons).
    void triangulate_face(HalfEdge h, const std::vector<std::pair<int, int>>& avoid = {});
    // every non-outer face / every face including the outer one
    void triangulate_inner(const std::vector<std::pair<int, int>>& avoid = {});
    void triangulate_all(const std::vector<std::pair<int, int>>& avoid = {});

    // Removes the vertex set q and returns the connected components of what
    // is left, each with a handle on the face that absorbed the hole.
    std::vector<HoleComponent> remove_vertices_with_hole(const std::vector<int>& q) const;

private:
    void check_vertex(int v) const;

    std::vector<char> alive_;
    std::vector<std::vector<int>> rot_;
    std::optional<HalfEdge> outer_;
};

struct HoleComponent {
    PlaneGraph graph;     // one connected component of the remainder
    HalfEdge hole_half;   // halfedge on the face bordering the removed set
};

// Side classification of faces and vertices relative to a simple cycle.
struct RegionSplit {
    static constexpr int kOutside = 0;
    static constexpr int kInside = 1;
    static constexpr int kOnCycle = -1;

    std::vector<int> face_side;    // per face id of the snapshot used
    std::vector<int> vertex_side;  // per vertex id
    FaceSet faces;                 // the snapshot classified
    int inside_vertex_count = 0;
    int outside_vertex_count = 0;
};

// Classifies everything as inside/outside the simple cycle `cycle` (given as a
// vertex sequence; consecutive pairs and the wrap pair must be edges).  The
// side containing the designated outer face is "outside"; outer must be set
// and must not lie on the cycle... if the outer face's halfedges all sit on
// the cycle itself the call is rejected.
RegionSplit classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle);

// Biconnected components of a plain graph.
struct BlockDecomposition {
    struct Block {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> vertices;
    };
    std::vector<Block> blocks;
    std::vector<char> is_cut;                  // per vertex id
    std::vector<std::vector<int>> blocks_of;   // vertex id -> block indices
};

BlockDecomposition biconnected_blocks(const Graph& g);

}  // namespace crosscolor
