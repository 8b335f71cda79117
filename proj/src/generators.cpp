#include "crosscolor/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "crosscolor/errors.hpp"

namespace crosscolor {

namespace {

using Rng = std::mt19937_64;
using Epair = std::pair<int, int>;

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

int pick_range(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Epair norm_pair(int a, int b) { return a < b ? Epair{a, b} : Epair{b, a}; }

// `size` distinct colors out of {0..pool-1}, sorted.
ColorList sample_colors(Rng& rng, int size, int pool) {
    std::vector<int> all(pool);
    for (int c = 0; c < pool; ++c) all[c] = c;
    for (int i = 0; i < size; ++i) std::swap(all[i], all[i + pick(rng, pool - i)]);
    ColorList out(all.begin(), all.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- seeded plane-graph growth -------------------------------------------

// Clockwise rotation systems of the two seed graphs.  The triangle's inner
// face is 0-1-2; K4 has outer triangle walk 0-2-1 and center vertex 3.
PlaneGraph triangle_seed() {
    auto g = PlaneGraph::from_rotations({{2, 1}, {0, 2}, {1, 0}});
    g.set_outer({0, 2});
    return g;
}

PlaneGraph k4_seed() {
    auto g = PlaneGraph::from_rotations({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {1, 0, 2}});
    g.set_outer({0, 2});
    return g;
}

// New vertex wired to the three corners of the triangular face at h.
int insert_in_face(PlaneGraph& g, HalfEdge h) {
    auto fv = g.face_vertices(h);
    if (fv.size() != 3) throw InternalError("vertex insertion needs a triangular face");
    const int a = fv[0], b = fv[1], c = fv[2];
    const int z = g.add_vertex();
    g.insert_neighbor_after(a, c, z);
    g.insert_neighbor_after(b, a, z);
    g.insert_neighbor_after(c, b, z);
    g.insert_neighbor_at(z, 0, b);
    g.insert_neighbor_at(z, 1, a);
    g.insert_neighbor_at(z, 2, c);
    return z;
}

// Diagonal flip of uv: the triangles uvc and vud become cdu and dcv.  Returns
// false (leaving g untouched) when the flip would break simplicity or the
// caller's edge ban.
bool try_flip(PlaneGraph& g, int u, int v, const std::set<Epair>& banned_new) {
    if (g.face_vertices({u, v}).size() != 3 || g.face_vertices({v, u}).size() != 3)
        return false;
    const int c = g.succ(v, u);
    const int d = g.succ(u, v);
    if (c == d || c == u || c == v || d == u || d == v) return false;
    if (g.has_edge(c, d) || banned_new.count(norm_pair(c, d))) return false;
    g.remove_edge(u, v);
    g.add_chord_in_face(c, u, d);
    return true;
}

struct GrowthGuard {
    std::set<Epair> protected_edges;         // never flipped away
    std::set<Epair> banned_new;              // never created by a flip
    std::vector<std::set<int>> keep_faces;   // vertex sets of faces kept intact
    bool inner_only = false;                 // restrict work to inner faces
};

bool face_kept(const std::vector<int>& walk_vertices, const GrowthGuard& guard) {
    std::set<int> vs(walk_vertices.begin(), walk_vertices.end());
    for (const auto& kept : guard.keep_faces)
        if (vs == kept) return true;
    return false;
}

void grow(PlaneGraph& g, int target_n, Rng& rng, const GrowthGuard& guard) {
    while (g.alive_count() < target_n) {
        auto fs = g.faces();
        std::vector<HalfEdge> cands;
        for (int f = 0; f < fs.size(); ++f) {
            if (guard.inner_only && f == fs.outer) continue;
            if (face_kept(fs.vertex_walk(f), guard)) continue;
            cands.push_back(fs.walks[f].front());
        }
        if (cands.empty()) throw InternalError("no face available for vertex insertion");
        insert_in_face(g, cands[pick(rng, static_cast<int>(cands.size()))]);
    }
    const int attempts = 3 * target_n;
    for (int i = 0; i < attempts; ++i) {
        auto es = g.edges();
        auto [u, v] = es[pick(rng, static_cast<int>(es.size()))];
        if (guard.protected_edges.count(norm_pair(u, v))) continue;
        if (guard.inner_only) {
            auto fs = g.faces();
            if (fs.face_of(u, v) == fs.outer || fs.face_of(v, u) == fs.outer) continue;
        }
        try_flip(g, u, v, guard.banned_new);
    }
}

// ---- two-crossing frames --------------------------------------------------

// Each frame is a small straight-line drawing with exactly two crossings,
// every crossing sitting inside its own quadrilateral of cluster edges.  The
// builder returns the normalized form once; callers copy and grow it.

void add_edges(RawDrawing& r, std::initializer_list<Epair> es) {
    for (auto e : es) r.edges.push_back(e);
}

// Clusters share vertex 2: distance 0.
RawDrawing frame_shared_vertex() {
    RawDrawing r;
    r.n = 7;
    r.positions = {{-2, 0}, {0, 2}, {2, 0}, {0, -2}, {6, 3}, {10, 0}, {6, -3}};
    r.has_positions = true;
    add_edges(r, {{0, 2}, {1, 3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
    add_edges(r, {{2, 5}, {4, 6}, {2, 4}, {4, 5}, {5, 6}, {2, 6}});
    return r;
}

// Clusters joined by the edge 2-4: distance 1.
RawDrawing frame_bridge_edge() {
    RawDrawing r;
    r.n = 8;
    r.positions = {{-2, 0}, {0, 2}, {2, 0}, {0, -2}, {10, 0}, {12, 2}, {14, 0}, {12, -2}};
    r.has_positions = true;
    add_edges(r, {{0, 2}, {1, 3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
    add_edges(r, {{4, 6}, {5, 7}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    add_edges(r, {{2, 4}});
    return r;
}

// Both clusters wrapped in buffer squares: distance at least 2.
RawDrawing frame_buffered() {
    RawDrawing r;
    r.n = 16;
    r.positions = {{-2, 0}, {0, 2},  {2, 0},   {0, -2},  {5, 5},   {-5, 5},
                   {-5, -5}, {5, -5}, {18, 1},  {20, 3},  {22, 1},  {20, -1},
                   {25, 6},  {15, 6}, {15, -4}, {25, -4}};
    r.has_positions = true;
    // cluster A and its buffer
    add_edges(r, {{0, 2}, {1, 3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
    add_edges(r, {{4, 5}, {5, 6}, {6, 7}, {7, 4}});
    add_edges(r, {{1, 4}, {2, 4}, {1, 5}, {0, 5}, {0, 6}, {3, 6}, {3, 7}, {2, 7}});
    // cluster B and its buffer
    add_edges(r, {{8, 10}, {9, 11}, {8, 9}, {9, 10}, {10, 11}, {8, 11}});
    add_edges(r, {{12, 13}, {13, 14}, {14, 15}, {15, 12}});
    add_edges(r, {{9, 12}, {10, 12}, {9, 13}, {8, 13}, {8, 14}, {11, 14}, {11, 15}, {10, 15}});
    // band between the buffers
    add_edges(r, {{4, 13}, {7, 14}, {4, 14}});
    return r;
}

struct Frame {
    TwoCrossingDrawing drawing;
    GrowthGuard guard;
};

Frame build_frame(int kind) {
    Frame f;
    RawDrawing raw;
    switch (kind) {
        case 0: raw = frame_shared_vertex(); break;
        case 1: raw = frame_bridge_edge(); break;
        default: raw = frame_buffered(); break;
    }
    f.drawing = normalize(raw);
    for (const auto& c : f.drawing.crossings) {
        f.guard.protected_edges.insert(norm_pair(c.t(), c.u()));
        f.guard.protected_edges.insert(norm_pair(c.v(), c.u()));
        f.guard.protected_edges.insert(norm_pair(c.u(), c.w()));
        f.guard.protected_edges.insert(norm_pair(c.w(), c.t()));
        f.guard.protected_edges.insert(norm_pair(c.t(), c.v()));
        f.guard.banned_new.insert(norm_pair(c.v(), c.w()));
        f.guard.keep_faces.push_back({c.t(), c.u(), c.v()});
        f.guard.keep_faces.push_back({c.t(), c.u(), c.w()});
    }
    if (kind == 1) f.guard.protected_edges.insert(norm_pair(2, 4));
    if (kind == 2) {
        const auto& cs = f.drawing.crossings;
        for (int a : cs[0].cluster())
            for (int b : cs[1].cluster()) f.guard.banned_new.insert(norm_pair(a, b));
    }
    return f;
}

const Frame& frame_for(int kind) {
    static const Frame frames[3] = {build_frame(0), build_frame(1), build_frame(2)};
    return frames[kind];
}

// Reinsert the drawn-over diagonal endpoint `far` into rot[a], inside the
// corner a shares with its two quadrilateral neighbors.
void insert_diagonal_end(std::vector<std::vector<int>>& rot, const PlaneGraph& g, int a,
                         int far, int n1, int n2) {
    int anchor;
    if (g.succ(a, n1) == n2)
        anchor = n1;
    else if (g.succ(a, n2) == n1)
        anchor = n2;
    else
        throw InternalError("crossing quadrilateral corner lost during growth");
    auto& r = rot[a];
    r.insert(std::find(r.begin(), r.end(), anchor) + 1, far);
}

}  // namespace

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw BadInputError("a triangulation needs at least three vertices");
    if (n == 3) return triangle_seed();
    Rng rng(seed);
    PlaneGraph g = k4_seed();
    GrowthGuard guard;
    guard.inner_only = true;
    grow(g, n, rng, guard);
    g.validate(true);
    return g;
}

TwoCrossingDrawing random_two_crossing(int n, std::uint64_t seed) {
    if (n < 10) throw BadInputError("two-crossing generation needs at least ten vertices");
    Rng rng(seed);
    const int kind = n >= 16 ? pick(rng, 3) : pick(rng, 2);
    const Frame& frame = frame_for(kind);

    PlaneGraph g = frame.drawing.skeleton;
    g.clear_outer();
    grow(g, n, rng, frame.guard);

    RawDrawing raw;
    raw.n = g.slot_count();
    raw.has_rotations = true;
    raw.rotations.resize(raw.n);
    for (int v = 0; v < raw.n; ++v)
        if (g.alive(v)) raw.rotations[v] = g.rotation(v);
    raw.edges = g.edges();
    for (const auto& c : frame.drawing.crossings) {
        insert_diagonal_end(raw.rotations, g, c.v(), c.w(), c.u(), c.t());
        insert_diagonal_end(raw.rotations, g, c.w(), c.v(), c.u(), c.t());
        raw.edges.push_back({c.v(), c.w()});
        raw.crossings.push_back({{c.v(), c.w()}, {c.t(), c.u()}});
    }
    raw.has_crossings = true;
    return normalize(raw);
}

ListAssignment random_lists(int n, int size, int pool, std::uint64_t seed) {
    if (n < 0 || size < 1 || pool < size)
        throw BadInputError("list generation needs size >= 1 and pool >= size");
    Rng rng(seed);
    ListAssignment lists(n);
    for (int v = 0; v < n; ++v) lists[v] = sample_colors(rng, size, pool);
    return lists;
}

namespace {

ListAssignment boundary_lists(const PlaneGraph& g, const std::map<int, Epair>& specials,
                              Epair outer_range, int pool, std::uint64_t seed) {
    if (pool < 5) throw BadInputError("boundary list generation needs a pool of five or more");
    if (!g.outer_set()) throw BadInputError("boundary list generation needs an outer face");
    Rng rng(seed);
    std::vector<char> on_outer(g.slot_count(), 0);
    for (int v : g.outer_walk()) on_outer[v] = 1;
    for (const auto& [v, range] : specials) {
        (void)range;
        if (!g.alive(v) || !on_outer[v])
            throw BadInputError("special vertex " + std::to_string(v) +
                                " is not on the outer face");
    }
    ListAssignment lists(g.slot_count());
    for (int v : g.vertices()) {
        Epair range{5, 5};
        if (auto it = specials.find(v); it != specials.end())
            range = it->second;
        else if (on_outer[v])
            range = outer_range;
        lists[v] = sample_colors(rng, pick_range(rng, range.first, range.second), pool);
    }
    return lists;
}

}  // namespace

ListAssignment random_suitable_lists(const PlaneGraph& g, int x, int y, int pool,
                                     std::uint64_t seed) {
    return boundary_lists(g, {{x, {1, 5}}, {y, {2, 5}}}, {3, 5}, pool, seed);
}

ListAssignment random_correct_lists(const PlaneGraph& g, int x, int y, int z, int pool,
                                    std::uint64_t seed) {
    auto lists = boundary_lists(g, {{x, {1, 1}}, {y, {1, 1}}, {z, {3, 5}}}, {4, 5}, pool, seed);
    if (lists[x] == lists[y]) {
        // the two forced colors must differ; nudge y to the next pool color
        lists[y][0] = (lists[y][0] + 1) % pool;
    }
    return lists;
}

// ---- fixture registry -----------------------------------------------------

namespace {

// Path 0..p-1 plus one extra vertex per attachment list, wired to the listed
// path vertices; extra vertex k gets id p+k.
Graph path_plus(int p, const std::vector<std::vector<int>>& attach) {
    Graph g(p + static_cast<int>(attach.size()));
    for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
    for (std::size_t k = 0; k < attach.size(); ++k)
        for (int v : attach[k]) g.add_edge(p + static_cast<int>(k), v);
    return g;
}

using Overrides = std::vector<std::pair<int, ColorList>>;

LemmaFixture path_fixture(LemmaFixture::Kind kind, const std::string& tag, int p,
                          const std::vector<std::vector<int>>& attach,
                          const Overrides& overrides) {
    LemmaFixture f;
    f.kind = kind;
    f.tag = tag;
    f.expected = tag;
    f.graph = path_plus(p, attach);
    f.path.resize(p);
    for (int i = 0; i < p; ++i) f.path[i] = i;
    f.lists.assign(f.graph.slot_count(), ColorList{0, 1, 2, 3, 4});
    for (const auto& [v, list] : overrides) f.lists[v] = list;
    normalize_lists(f.lists);
    return f;
}

LemmaFixture extend_fixture(const std::string& tag, const Overrides& overrides) {
    auto f = path_fixture(LemmaFixture::Kind::Extend, tag, 4, {{0, 1, 2}}, overrides);
    f.phi.assign(f.graph.slot_count(), kUncolored);
    f.phi[1] = 1;
    f.phi[2] = 2;
    f.phi[3] = 0;
    f.target = 0;
    f.helper = 4;
    return f;
}

std::map<std::string, LemmaFixture> build_registry() {
    std::map<std::string, LemmaFixture> reg;
    auto put = [&](LemmaFixture f) { reg.emplace(f.tag, std::move(f)); };
    const auto Great = LemmaFixture::Kind::Great;
    const auto Good = LemmaFixture::Kind::Good;

    put(extend_fixture("L6-miss", {{4, {5, 6, 7, 8, 9}}}));
    put(extend_fixture("L6-repeat", {}));
    put(extend_fixture("L6-avoid", {{0, {0, 1, 3, 4, 8}}, {4, {1, 2, 5, 6, 7}}}));

    put(path_fixture(Great, "L7-base", 2, {}, {}));
    put(path_fixture(Great, "L7-start", 3, {}, {}));
    put(path_fixture(Great, "L7-1", 5, {}, {}));
    put(path_fixture(Great, "L7-2-clear", 5, {{0, 1, 2}}, {{5, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Great, "L7-2-beta", 5, {{0, 1, 2}}, {{1, {0, 1, 2, 5, 6}}}));
    put(path_fixture(Great, "L7-2.1", 5, {{0, 1, 2}}, {}));
    put(path_fixture(Great, "L7-2.2a", 5, {{0, 1, 2}, {1, 2, 3}}, {{6, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Great, "L7-2.2b", 5, {{0, 1, 2}, {1, 2, 3}}, {{6, {0, 1, 7, 8, 9}}}));
    put(path_fixture(Great, "L7-2.2c", 5, {{0, 1, 2}, {1, 2, 3}}, {}));
    put(path_fixture(Great, "L7-2.3a", 5, {{0, 1, 2}, {1, 2, 3}, {1, 2, 3}},
                     {{2, {0, 5, 6, 7, 8}}, {3, {1, 5, 9, 10, 11}}}));
    put(path_fixture(Great, "L7-2.3b", 5, {{0, 1, 2}, {1, 2, 3}, {1, 2, 3}},
                     {{2, {5, 6, 7, 8, 9}},
                      {3, {0, 5, 10, 11, 12}},
                      {6, {0, 1, 5, 13, 14}},
                      {7, {0, 1, 5, 13, 14}}}));
    put(path_fixture(Great, "L7-3a", 5, {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}},
                     {{5, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Great, "L7-3b", 5, {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}},
                     {{5, {0, 5, 6, 7, 8}}}));
    put(path_fixture(Great, "L7-3c", 5, {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}},
                     {{6, {0, 5, 6, 7, 8}}}));
    put(path_fixture(Great, "L7-3d", 5, {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}}, {}));
    put(path_fixture(Great, "L7-3e", 6,
                     {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {2, 3, 4}}, {}));

    put(path_fixture(Good, "L8-great", 4, {}, {}));
    put(path_fixture(Good, "L8-free1", 4, {{0, 1, 2, 3}}, {{4, {1, 2, 3, 4, 5}}}));
    put(path_fixture(Good, "L8-1.1a", 4, {{0, 1, 2, 3}}, {}));
    put(path_fixture(Good, "L8-1.1b", 4, {{0, 1, 2, 3}},
                     {{1, {0, 1, 2, 3, 5}}, {2, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-1.1c", 4, {{0, 1, 2, 3}}, {{2, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-1.2a", 5, {{0, 1, 2, 3}, {1, 2, 3}, {2, 3, 4}},
                     {{1, {0, 1, 2, 3, 5}}}));
    put(path_fixture(Good, "L8-1.2a-cut", 5, {{0, 1, 2, 3}, {1, 2, 3}, {2, 3, 4}},
                     {{3, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-1.2b", 5, {{0, 1, 2, 3}, {1, 2, 3}}, {{3, {0, 1, 2, 3, 5}}}));
    put(path_fixture(Good, "L8-1.2b-beta", 5, {{0, 1, 2, 3}, {1, 2, 3}},
                     {{2, {0, 1, 2, 3, 5}}}));
    put(path_fixture(Good, "L8-1.2b-twin", 5, {{0, 1, 2, 3}, {1, 2, 3}}, {}));
    put(path_fixture(Good, "L8-1.2b-mirror", 5, {{0, 1, 2, 3}, {1, 2, 3}},
                     {{1, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-1.2b-drop", 5, {{0, 1, 2, 3}, {1, 2, 3}},
                     {{1, {5, 6, 7, 8, 9}}, {2, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-2", 4, {{0, 2, 3}}, {}));
    put(path_fixture(Good, "L8-2-align", 5, {{0, 2, 3}, {0, 1, 2}, {1, 2, 3}}, {}));
    put(path_fixture(Good, "L8-2-cut", 4, {{0, 2, 3}, {0, 1, 2}}, {{2, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-3", 4, {{0, 1, 3}}, {}));
    put(path_fixture(Good, "L8-3-beta", 4, {{0, 1, 3}, {0, 1, 2}}, {{1, {0, 1, 2, 3, 5}}}));
    put(path_fixture(Good, "L8-3-drop", 4, {{0, 1, 3}, {0, 1, 2}}, {{3, {5, 6, 7, 8, 9}}}));
    put(path_fixture(Good, "L8-3-one", 5, {{0, 1, 3}, {0, 1, 2}, {2, 3, 4}}, {}));
    put(path_fixture(Good, "L8-3-pair", 6,
                     {{0, 1, 3}, {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {2, 3, 4}}, {}));
    put(path_fixture(Good, "L8-3-two", 6, {{0, 1, 3}, {0, 1, 2}, {2, 3, 4}, {2, 3, 4}}, {}));

    return reg;
}

const std::map<std::string, LemmaFixture>& registry() {
    static const std::map<std::string, LemmaFixture> reg = build_registry();
    return reg;
}

}  // namespace

LemmaFixture lemma_fixture(const std::string& tag) {
    const auto& reg = registry();
    auto it = reg.find(tag);
    if (it == reg.end()) throw BadInputError("unknown fixture tag: " + tag);
    return it->second;
}

std::vector<std::string> fixture_tags() {
    std::vector<std::string> tags;
    for (const auto& [tag, f] : registry()) {
        (void)f;
        tags.push_back(tag);
    }
    return tags;
}

}  // namespace crosscolor
