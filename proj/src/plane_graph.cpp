#include "crosscolor/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace crosscolor {

long long half_key(int u, int v) {
    return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

int FaceSet::face_of(int u, int v) const {
    auto it = face_of_half.find(half_key(u, v));
    if (it == face_of_half.end())
        throw InvalidGraphError("halfedge " + std::to_string(u) + "->" + std::to_string(v) +
                                " not on any face");
    return it->second;
}

std::vector<int> FaceSet::vertex_walk(int f) const {
    std::vector<int> out;
    for (const auto& h : walks[f]) out.push_back(h.first);
    return out;
}

PlaneGraph::PlaneGraph(int n) : alive_(n, 1), rot_(n) {}

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<int>> rot) {
    PlaneGraph g;
    g.alive_.assign(rot.size(), 1);
    g.rot_ = std::move(rot);
    g.validate(false);
    return g;
}

int PlaneGraph::add_vertex() {
    alive_.push_back(1);
    rot_.emplace_back();
    return slot_count() - 1;
}

bool PlaneGraph::alive(int v) const {
    return v >= 0 && v < slot_count() && alive_[v];
}

void PlaneGraph::check_vertex(int v) const {
    if (!alive(v)) throw InvalidGraphError("vertex " + std::to_string(v) + " not alive");
}

std::vector<int> PlaneGraph::vertices() const {
    std::vector<int> out;
    for (int v = 0; v < slot_count(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

int PlaneGraph::alive_count() const {
    int c = 0;
    for (char a : alive_) c += a;
    return c;
}

int PlaneGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(rot_[v].size());
}

const std::vector<int>& PlaneGraph::rotation(int v) const {
    check_vertex(v);
    return rot_[v];
}

bool PlaneGraph::has_edge(int u, int v) const {
    if (!alive(u) || !alive(v) || u == v) return false;
    return rot_index(u, v) >= 0;
}

int PlaneGraph::edge_count() const {
    int half = 0;
    for (int v = 0; v < slot_count(); ++v)
        if (alive_[v]) half += static_cast<int>(rot_[v].size());
    return half / 2;
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < slot_count(); ++v)
        if (alive_[v])
            for (int u : rot_[v])
                if (v < u) out.emplace_back(v, u);
    return out;
}

int PlaneGraph::rot_index(int v, int u) const {
    check_vertex(v);
    const auto& r = rot_[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

int PlaneGraph::succ(int v, int u) const {
    int i = rot_index(v, u);
    if (i < 0)
        throw InvalidGraphError("succ: " + std::to_string(u) + " not around " +
                                std::to_string(v));
    const auto& r = rot_[v];
    return r[(i + 1) % r.size()];
}

int PlaneGraph::pred(int v, int u) const {
    int i = rot_index(v, u);
    if (i < 0)
        throw InvalidGraphError("pred: " + std::to_string(u) + " not around " +
                                std::to_string(v));
    const auto& r = rot_[v];
    return r[(i + r.size() - 1) % r.size()];
}

void PlaneGraph::insert_neighbor_at(int v, int index, int u) {
    check_vertex(v);
    check_vertex(u);
    if (rot_index(v, u) >= 0)
        throw InvalidGraphError("duplicate neighbor insert at " + std::to_string(v));
    if (index < 0 || index > static_cast<int>(rot_[v].size()))
        throw InvalidGraphError("rotation index out of range");
    rot_[v].insert(rot_[v].begin() + index, u);
}

void PlaneGraph::insert_neighbor_after(int v, int anchor, int u) {
    int i = rot_index(v, anchor);
    if (i < 0) throw InvalidGraphError("insert_after: anchor missing");
    insert_neighbor_at(v, i + 1, u);
}

void PlaneGraph::insert_neighbor_before(int v, int anchor, int u) {
    int i = rot_index(v, anchor);
    if (i < 0) throw InvalidGraphError("insert_before: anchor missing");
    insert_neighbor_at(v, i, u);
}

void PlaneGraph::erase_neighbor(int v, int u) {
    int i = rot_index(v, u);
    if (i < 0) throw InvalidGraphError("erase_neighbor: absent");
    rot_[v].erase(rot_[v].begin() + i);
}

void PlaneGraph::add_chord_in_face(int b, int a, int c) {
    // (b,a),(a,c) must be consecutive on a face: succ_a(b) == c.
    if (succ(a, b) != c)
        throw InvalidGraphError("add_chord_in_face: corner is not a face corner");
    if (b == c || has_edge(b, c)) throw InvalidGraphError("add_chord_in_face: chord invalid");
    insert_neighbor_before(b, a, c);
    insert_neighbor_after(c, a, b);
}

void PlaneGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw InvalidGraphError("remove_edge: absent");
    erase_neighbor(u, v);
    erase_neighbor(v, u);
}

void PlaneGraph::remove_vertex(int v) {
    check_vertex(v);
    for (int u : std::vector<int>(rot_[v])) erase_neighbor(u, v);
    rot_[v].clear();
    alive_[v] = 0;
}

Graph PlaneGraph::to_graph() const {
    Graph g(slot_count());
    for (int v = 0; v < slot_count(); ++v)
        if (!alive_[v]) g.remove_vertex(v);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
}

PlaneGraph PlaneGraph::restricted_to_edges(const std::vector<std::pair<int, int>>& keep,
                                           const std::vector<int>& keep_vertices) const {
    std::unordered_map<long long, char> keep_set;
    for (auto [u, v] : keep) {
        keep_set[half_key(u, v)] = 1;
        keep_set[half_key(v, u)] = 1;
    }
    PlaneGraph out(*this);
    for (auto [u, v] : edges())
        if (!keep_set.count(half_key(u, v))) out.remove_edge(u, v);
    std::vector<char> keep_v(slot_count(), 0);
    for (int v : keep_vertices) keep_v[v] = 1;
    for (int v = 0; v < slot_count(); ++v)
        if (out.alive_[v] && out.rot_[v].empty() && !keep_v[v]) out.alive_[v] = 0;
    out.outer_.reset();
    return out;
}

void PlaneGraph::set_outer(HalfEdge h) {
    if (!has_edge(h.first, h.second)) throw InvalidGraphError("set_outer: no such halfedge");
    outer_ = h;
}

void PlaneGraph::clear_outer() { outer_.reset(); }

bool PlaneGraph::outer_set() const {
    return outer_.has_value() && has_edge(outer_->first, outer_->second);
}

HalfEdge PlaneGraph::outer_half() const {
    if (!outer_set()) throw InvalidGraphError("outer face not designated");
    return *outer_;
}

std::vector<HalfEdge> PlaneGraph::face_walk(HalfEdge h) const {
    if (!has_edge(h.first, h.second)) throw InvalidGraphError("face_walk: no such halfedge");
    std::vector<HalfEdge> walk;
    HalfEdge cur = h;
    do {
        walk.push_back(cur);
        cur = {cur.second, succ(cur.second, cur.first)};
        if (walk.size() > 4u * rot_.size() * rot_.size() + 16)
            throw InternalError("face walk does not close");
    } while (cur != h);
    return walk;
}

std::vector<int> PlaneGraph::face_vertices(HalfEdge h) const {
    std::vector<int> out;
    for (const auto& e : face_walk(h)) out.push_back(e.first);
    return out;
}

std::vector<int> PlaneGraph::outer_walk() const { return face_vertices(outer_half()); }

FaceSet PlaneGraph::faces() const {
    FaceSet fs;
    for (int v = 0; v < slot_count(); ++v) {
        if (!alive_[v]) continue;
        for (int u : rot_[v]) {
            if (fs.face_of_half.count(half_key(v, u))) continue;
            int id = fs.size();
            auto walk = face_walk({v, u});
            for (const auto& h : walk) fs.face_of_half[half_key(h.first, h.second)] = id;
            fs.walks.push_back(std::move(walk));
        }
    }
    if (outer_set()) fs.outer = fs.face_of(outer_->first, outer_->second);
    return fs;
}

void PlaneGraph::validate(bool require_connected) const {
    for (int v = 0; v < slot_count(); ++v) {
        if (!alive_[v]) {
            if (!rot_[v].empty()) throw InvalidGraphError("dead vertex with neighbors");
            continue;
        }
        std::vector<int> seen;
        for (int u : rot_[v]) {
            if (u == v) throw InvalidGraphError("self loop at " + std::to_string(v));
            if (!alive(u)) throw InvalidGraphError("edge to dead vertex");
            seen.push_back(u);
            if (rot_index(u, v) < 0)
                throw InvalidGraphError("asymmetric rotation " + std::to_string(v) + "->" +
                                        std::to_string(u));
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InvalidGraphError("duplicate neighbor at " + std::to_string(v));
    }
    auto vs = vertices();
    if (vs.empty()) return;
    if (require_connected) {
        std::vector<char> seen(slot_count(), 0);
        std::deque<int> bfs{vs[0]};
        seen[vs[0]] = 1;
        int cnt = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            ++cnt;
            for (int u : rot_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    bfs.push_back(u);
                }
        }
        if (cnt != static_cast<int>(vs.size()))
            throw InvalidGraphError("plane graph not connected");
        int f = std::max(1, faces().size());
        int euler = static_cast<int>(vs.size()) - edge_count() + f;
        if (euler != 2)
            throw InvalidGraphError("rotation system fails Euler check (V-E+F=" +
                                    std::to_string(euler) + ")");
    }
}

bool PlaneGraph::inner_faces_triangulated() const {
    FaceSet fs = faces();
    if (fs.outer < 0) throw InvalidGraphError("outer face not designated");
    for (int f = 0; f < fs.size(); ++f)
        if (f != fs.outer && fs.walks[f].size() != 3) return false;
    return true;
}

bool PlaneGraph::all_faces_triangulated() const {
    FaceSet fs = faces();
    for (const auto& w : fs.walks)
        if (w.size() != 3) return false;
    return true;
}

namespace {

// One chord move on the face with walk W: either an ear (positions a, a+2) or
// a general position pair.  Returns chosen positions, or nullopt when W needs
// no work.  Throws when the face is stuck, which the surrounding theory rules
// out for faces of plane graphs.
std::optional<std::pair<int, int>> pick_chord(const PlaneGraph& g,
                                              const std::vector<HalfEdge>& W,
                                              const std::vector<std::pair<int, int>>& avoid) {
    int k = static_cast<int>(W.size());
    if (k <= 3) return std::nullopt;
    auto vert = [&](int i) { return W[((i % k) + k) % k].first; };
    auto banned = [&](int x, int y) {
        for (auto [a, b] : avoid)
            if ((a == x && b == y) || (a == y && b == x)) return true;
        return false;
    };
    // Ears first, smallest apex id.
    int best_apex = -1, best_a = -1;
    for (int a = 0; a < k; ++a) {
        int b = vert(a), apex = vert(a + 1), c = vert(a + 2);
        if (b == c || g.has_edge(b, c) || banned(b, c)) continue;
        if (best_apex < 0 || apex < best_apex) {
            best_apex = apex;
            best_a = a;
        }
    }
    if (best_a >= 0) return std::make_pair(best_a, (best_a + 2) % k);
    for (int a = 0; a < k; ++a)
        for (int d = 2; d <= k - 2; ++d) {
            int b = (a + d) % k;
            if (vert(a) == vert(b) || g.has_edge(vert(a), vert(b)) ||
                banned(vert(a), vert(b)))
                continue;
            return std::make_pair(a, b);
        }
    throw InternalError("face admits no chord; embedding corrupt");
}

}  // namespace

void PlaneGraph::triangulate_face(HalfEdge h, const std::vector<std::pair<int, int>>& avoid) {
    std::vector<HalfEdge> pending{h};
    while (!pending.empty()) {
        HalfEdge cur = pending.back();
        pending.pop_back();
        auto W = face_walk(cur);
        auto move = pick_chord(*this, W, avoid);
        if (!move) continue;
        int k = static_cast<int>(W.size());
        auto [a, b] = *move;
        int va = W[a].first, vb = W[b].first;
        int pa = W[(a + k - 1) % k].first, pb = W[(b + k - 1) % k].first;
        insert_neighbor_after(va, pa, vb);
        insert_neighbor_after(vb, pb, va);
        pending.push_back({va, vb});
        pending.push_back({vb, va});
    }
}

void PlaneGraph::triangulate_inner(const std::vector<std::pair<int, int>>& avoid) {
    FaceSet fs = faces();
    if (fs.outer < 0) throw InvalidGraphError("triangulate_inner: outer face not designated");
    for (int f = 0; f < fs.size(); ++f)
        if (f != fs.outer && fs.walks[f].size() > 3) triangulate_face(fs.walks[f][0], avoid);
}

void PlaneGraph::triangulate_all(const std::vector<std::pair<int, int>>& avoid) {
    FaceSet fs = faces();
    for (int f = 0; f < fs.size(); ++f)
        if (fs.walks[f].size() > 3) triangulate_face(fs.walks[f][0], avoid);
}

std::vector<HoleComponent> PlaneGraph::remove_vertices_with_hole(
    const std::vector<int>& q) const {
    if (q.empty()) throw InvalidGraphError("remove_vertices_with_hole: empty set");
    std::vector<char> in_q(slot_count(), 0);
    for (int v : q) {
        check_vertex(v);
        in_q[v] = 1;
    }
    // q must induce a connected subgraph so the hole is a single region.
    {
        std::vector<char> seen(slot_count(), 0);
        std::deque<int> bfs{q[0]};
        seen[q[0]] = 1;
        int cnt = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            ++cnt;
            for (int u : rot_[v])
                if (in_q[u] && !seen[u]) {
                    seen[u] = 1;
                    bfs.push_back(u);
                }
        }
        if (cnt != static_cast<int>(q.size()))
            throw InvalidGraphError("removed set must be connected");
    }

    PlaneGraph g2(*this);
    g2.outer_.reset();
    for (int v : q) g2.remove_vertex(v);

    // Connected components of the remainder.
    std::vector<int> comp_of(slot_count(), -1);
    int ncomp = 0;
    for (int v : g2.vertices()) {
        if (comp_of[v] >= 0) continue;
        std::deque<int> bfs{v};
        comp_of[v] = ncomp;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop_front();
            for (int u : g2.rot_[x])
                if (comp_of[u] < 0) {
                    comp_of[u] = ncomp;
                    bfs.push_back(u);
                }
        }
        ++ncomp;
    }

    std::vector<HoleComponent> out(ncomp);
    std::vector<char> have_handle(ncomp, 0);
    for (int c = 0; c < ncomp; ++c) {
        PlaneGraph sub(g2);
        for (int v : g2.vertices())
            if (comp_of[v] != c) sub.remove_vertex(v);
        out[c].graph = std::move(sub);
        out[c].hole_half = {-1, -1};
    }
    // Handle: at a surviving neighbor x of q, the rotation gap left by the
    // removed run opens into the hole; the face through (x, next survivor)
    // borders it.
    for (int x = 0; x < slot_count(); ++x) {
        if (!alive_[x] || in_q[x]) continue;
        int c = comp_of[x];
        if (have_handle[c]) continue;
        const auto& old_rot = rot_[x];
        int m = static_cast<int>(old_rot.size());
        for (int i = 0; i < m; ++i) {
            if (!in_q[old_rot[i]]) continue;
            for (int step = 1; step < m; ++step) {
                int b = old_rot[(i + step) % m];
                if (!in_q[b]) {
                    out[c].hole_half = {x, b};
                    have_handle[c] = 1;
                    break;
                }
            }
            break;  // isolated-in-component x keeps {-1,-1}
        }
    }
    return out;
}

RegionSplit classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw InvalidGraphError("classify_cycle: cycle too short");
    std::vector<char> on_cycle(g.slot_count(), 0);
    for (int v : cycle) {
        if (!g.alive(v) || on_cycle[v])
            throw InvalidGraphError("classify_cycle: bad cycle vertex");
        on_cycle[v] = 1;
    }
    std::unordered_map<long long, char> cyc_edge;
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % k];
        if (!g.has_edge(u, v)) throw InvalidGraphError("classify_cycle: missing cycle edge");
        cyc_edge[half_key(u, v)] = 1;
        cyc_edge[half_key(v, u)] = 1;
    }

    RegionSplit rs;
    rs.faces = g.faces();
    if (rs.faces.outer < 0) throw InvalidGraphError("classify_cycle: outer face required");
    rs.face_side.assign(rs.faces.size(), RegionSplit::kInside);
    std::deque<int> bfs{rs.faces.outer};
    rs.face_side[rs.faces.outer] = RegionSplit::kOutside;
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop_front();
        for (const auto& [u, v] : rs.faces.walks[f]) {
            if (cyc_edge.count(half_key(u, v))) continue;
            int f2 = rs.faces.face_of(v, u);
            if (rs.face_side[f2] == RegionSplit::kInside) {
                rs.face_side[f2] = RegionSplit::kOutside;
                bfs.push_back(f2);
            }
        }
    }

    rs.vertex_side.assign(g.slot_count(), RegionSplit::kOutside);
    for (int v : g.vertices()) {
        if (on_cycle[v]) {
            rs.vertex_side[v] = RegionSplit::kOnCycle;
            continue;
        }
        if (g.degree(v) == 0)
            throw InvalidGraphError("classify_cycle: isolated vertex unclassifiable");
        int f = rs.faces.face_of(v, g.rotation(v)[0]);
        rs.vertex_side[v] = rs.face_side[f];
        if (rs.vertex_side[v] == RegionSplit::kInside)
            ++rs.inside_vertex_count;
        else
            ++rs.outside_vertex_count;
    }
    return rs;
}

namespace {

struct BlockFinder {
    const Graph& g;
    BlockDecomposition& out;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    int timer = 0;

    BlockFinder(const Graph& g_, BlockDecomposition& o)
        : g(g_), out(o), num(g_.slot_count(), -1), low(g_.slot_count(), 0) {}

    void pop_block(std::pair<int, int> until) {
        BlockDecomposition::Block b;
        std::vector<char> seen(g.slot_count(), 0);
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            for (int v : {e.first, e.second})
                if (!seen[v]) {
                    seen[v] = 1;
                    b.vertices.push_back(v);
                }
            if (e == until) break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        for (int v : b.vertices) out.blocks_of[v].push_back(static_cast<int>(out.blocks.size()));
        out.blocks.push_back(std::move(b));
    }

    void dfs(int v, int parent) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) {
                parent = -2;  // skip the tree edge once; parallel edges impossible
                continue;
            }
            if (num[u] < 0) {
                ++children;
                stack.push_back({v, u});
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= num[v]) {
                    if (num[v] > 0 || children > 1) out.is_cut[v] = 1;
                    pop_block({v, u});
                }
            } else if (num[u] < num[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], num[u]);
            }
        }
    }
};

}  // namespace

BlockDecomposition biconnected_blocks(const Graph& g) {
    BlockDecomposition out;
    out.is_cut.assign(g.slot_count(), 0);
    out.blocks_of.assign(g.slot_count(), {});
    BlockFinder bf(g, out);
    for (int v : g.vertices())
        if (bf.num[v] < 0) bf.dfs(v, -1);
    return out;
}

}  // namespace crosscolor
