#include "crosscolor/planar_colorer.hpp"

#include <algorithm>
#include <deque>

#include "crosscolor/trace.hpp"

namespace crosscolor {

namespace {

int walk_index_of(const std::vector<int>& walk, int v) {
    for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == v) return static_cast<int>(i);
    return -1;
}

// Splits a 2-connected plane graph along a chord (u,v) of its outer cycle.
// Each side keeps the chord edge; outer faces are set so the side's boundary
// is its arc plus the chord.
struct ChordSides {
    PlaneGraph first;   // side containing the outer arc from u to v
    PlaneGraph second;  // the other side
};

ChordSides split_at_chord(const PlaneGraph& b, int u, int v) {
    auto C = b.outer_walk();
    int m = static_cast<int>(C.size());
    int iu = walk_index_of(C, u), iv = walk_index_of(C, v);
    if (iu < 0 || iv < 0) throw InternalError("chord endpoints must be on the outer cycle");

    auto arc = [&](int from, int to) {
        std::vector<int> out;
        for (int i = from; ; i = (i + 1) % m) {
            out.push_back(C[i]);
            if (i == to) break;
        }
        return out;
    };

    auto carve = [&](const std::vector<int>& cyc) {
        RegionSplit rs = classify_cycle(b, cyc);
        std::vector<std::pair<int, int>> keep;
        for (auto [p, q] : b.edges()) {
            int f1 = rs.faces.face_of(p, q), f2 = rs.faces.face_of(q, p);
            bool inside = rs.face_side[f1] == RegionSplit::kInside ||
                          rs.face_side[f2] == RegionSplit::kInside;
            bool on_cyc = rs.vertex_side[p] == RegionSplit::kOnCycle &&
                          rs.vertex_side[q] == RegionSplit::kOnCycle;
            if (inside) {
                keep.emplace_back(p, q);
            } else if (on_cyc) {
                // cycle edges have exactly one inside face, except when the
                // inside is a single face: then only boundary edges qualify
                int a = walk_index_of(cyc, p), c = walk_index_of(cyc, q);
                int k = static_cast<int>(cyc.size());
                if ((a + 1) % k == c || (c + 1) % k == a) keep.emplace_back(p, q);
            }
        }
        PlaneGraph side = b.restricted_to_edges(keep);
        // The chord closes the cycle; its face outside the carved region is
        // the side's outer face.
        int f_uv = rs.faces.face_of(u, v);
        if (rs.face_side[f_uv] == RegionSplit::kOutside)
            side.set_outer({u, v});
        else
            side.set_outer({v, u});
        return side;
    };

    std::vector<int> cyc1 = arc(iu, iv);
    std::vector<int> cyc2 = arc(iv, iu);
    ChordSides out{carve(cyc1), carve(cyc2)};
    return out;
}

struct Engine {
    Coloring& phi;

    explicit Engine(Coloring& p) : phi(p) {}

    int pick(const ColorList& l, const ColorList& avoid, const char* who) {
        return smallest_avoiding(l, avoid, who);
    }

    // ---- suitable engine: b 2-connected inner triangulation, anchors x,y
    // adjacent on the outer cycle, both already colored (distinct). ----
    void rec_pair(PlaneGraph b, ListAssignment L, int x, int y) {
        if (phi[x] == kUncolored || phi[y] == kUncolored || phi[x] == phi[y])
            throw InternalError("pair engine anchors must be precolored distinctly");
        int n = b.alive_count();
        if (n <= 2) return;
        auto C = b.outer_walk();
        int m = static_cast<int>(C.size());
        std::vector<int> pos(b.slot_count(), -1);
        for (int i = 0; i < m; ++i) {
            if (pos[C[i]] >= 0) throw InternalError("outer cycle of a block not simple");
            pos[C[i]] = i;
        }

        // Chord selection: the anchor edge first if it is a chord, else the
        // lexicographically smallest chord.
        auto consecutive = [&](int a, int c) {
            int d = std::abs(pos[a] - pos[c]);
            return d == 1 || d == m - 1;
        };
        std::pair<int, int> chord{-1, -1};
        if (!consecutive(x, y)) {
            chord = {x, y};
        } else {
            for (auto [p, q] : b.edges()) {
                if (pos[p] < 0 || pos[q] < 0 || consecutive(p, q)) continue;
                auto cand = std::minmax(p, q);
                std::pair<int, int> c2{cand.first, cand.second};
                if (chord.first < 0 || c2 < chord) chord = c2;
            }
        }

        if (chord.first >= 0) {
            auto [u, v] = chord;
            auto sides = split_at_chord(b, u, v);
            if (u == x && v == y) {
                rec_pair(std::move(sides.first), L, x, y);
                rec_pair(std::move(sides.second), L, x, y);
                return;
            }
            bool xy_in_first = sides.first.has_edge(x, y);
            PlaneGraph& with_xy = xy_in_first ? sides.first : sides.second;
            PlaneGraph& other = xy_in_first ? sides.second : sides.first;
            if (!xy_in_first && !sides.second.has_edge(x, y))
                throw InternalError("anchor edge lost during chord split");
            rec_pair(std::move(with_xy), L, x, y);
            rec_pair(std::move(other), L, u, v);
            return;
        }

        // Chordless: remove the outer neighbor w of y (w != x), reserving two
        // of its colors away from its interior fan.
        int iy = pos[y];
        int w = C[(iy + 1) % m] == x ? C[(iy + m - 1) % m] : C[(iy + 1) % m];
        int iw = pos[w];
        int uw = C[(iw + 1) % m] == y ? C[(iw + m - 1) % m] : C[(iw + 1) % m];
        ColorList reserve_from = list_minus(L[w], phi[y]);
        if (reserve_from.size() < 2)
            throw InvalidListsError("outer vertex " + std::to_string(w) +
                                    " needs 3 usable colors");
        int c1 = reserve_from[0], c2 = reserve_from[1];
        for (int z : b.rotation(w)) {
            if (z == y || z == uw) continue;
            if (pos[z] >= 0)
                throw InternalError("chordless cycle has a boundary-to-boundary fan edge");
            L[z] = list_minus(list_minus(L[z], c1), c2);
        }
        // Re-anchor the outer handle on a boundary halfedge that survives the
        // deletion: one of the two walk halfedges at y avoids w.
        int prev_y = C[(iy + m - 1) % m], next_y = C[(iy + 1) % m];
        HalfEdge h0 = prev_y == w ? HalfEdge{y, next_y} : HalfEdge{prev_y, y};
        b.remove_vertex(w);
        b.set_outer(h0);
        rec_pair(b, L, x, y);
        int cw = c1 == phi[uw] ? c2 : c1;
        phi[w] = cw;
    }

    // ---- three-anchor engine: b 2-connected inner triangulation, x,y,z on
    // the outer cycle, L(x) and L(y) true distinct singletons, |L(z)| >= 3,
    // other outer >= 4, interior >= 5.  Colors everything. ----
    void rec_correct(PlaneGraph b, ListAssignment L, int x, int y, int z) {
        int n = b.alive_count();
        if (n <= 3) {
            phi[x] = L[x][0];
            phi[y] = pick(L[y], {phi[x]}, "anchor");
            for (int v : b.vertices()) {
                if (v == x || v == y) continue;
                phi[v] = pick(residual_list(b.to_graph(), L, phi, v), {}, "base vertex");
            }
            return;
        }
        auto C = b.outer_walk();
        int m = static_cast<int>(C.size());
        std::vector<int> pos(b.slot_count(), -1);
        for (int i = 0; i < m; ++i) pos[C[i]] = i;
        auto consecutive = [&](int a, int c) {
            int d = std::abs(pos[a] - pos[c]);
            return d == 1 || d == m - 1;
        };

        // Chords at x only.
        int t_star = -1;
        for (int t : b.rotation(x))
            if (pos[t] >= 0 && !consecutive(x, t) && (t_star < 0 || t < t_star)) t_star = t;

        if (t_star >= 0) {
            trace::emit("PL4-chord");
            auto sides = split_at_chord(b, x, t_star);
            auto pick_special = [&](const PlaneGraph& side, int a1, int a2) {
                // smallest outer vertex of `side` distinct from the anchors
                int best = -1;
                for (int v2 : side.outer_walk())
                    if (v2 != a1 && v2 != a2 && (best < 0 || v2 < best)) best = v2;
                if (best < 0) throw InternalError("side without a third vertex");
                return best;
            };
            if (t_star == y) {
                bool z_in_first = sides.first.alive(z);
                PlaneGraph& with_z = z_in_first ? sides.first : sides.second;
                PlaneGraph& without = z_in_first ? sides.second : sides.first;
                int z2 = pick_special(without, x, y);
                rec_correct(std::move(with_z), L, x, y, z);
                rec_correct(std::move(without), L, x, y, z2);
                return;
            }
            bool y_in_first = sides.first.alive(y);
            PlaneGraph& with_y = y_in_first ? sides.first : sides.second;
            PlaneGraph& other = y_in_first ? sides.second : sides.first;
            // z keeps its role on the side it lives on; the chord end t_star
            // counts as living on the y-side (its list may be as small as 3,
            // which only the z slot tolerates).
            bool z_in_y_side = with_y.alive(z);
            int z1 = z_in_y_side ? z : pick_special(with_y, x, y);
            int z2 = !z_in_y_side && other.alive(z) ? z : pick_special(other, x, t_star);
            rec_correct(std::move(with_y), L, x, y, z1);
            ListAssignment L2 = L;
            L2[t_star] = {phi[t_star]};
            rec_correct(std::move(other), L2, x, t_star, z2);
            return;
        }

        // No chord at x: its neighbors besides the two on C form an interior
        // fan.  Remove x after shielding its color from all of them.
        int ix = pos[x];
        int u = C[(ix + m - 1) % m], v = C[(ix + 1) % m];
        int alpha_x = L[x][0];
        HalfEdge h0{v, C[(ix + 2) % m]};

        if (z != u && z != v) {
            trace::emit("PL4-fan");
            ListAssignment L2 = L;
            for (int w : b.rotation(x)) {
                if (w == y) continue;
                if (w != u && w != v && pos[w] >= 0)
                    throw InternalError("unexpected chord at x");
                L2[w] = list_minus(L2[w], alpha_x);
            }
            b.remove_vertex(x);
            b.set_outer(h0);
            auto C2 = b.outer_walk();
            int jy = walk_index_of(C2, y);
            if (jy < 0) throw InternalError("anchor fell off the boundary");
            int y2 = C2[(jy + 1) % C2.size()];
            phi[y] = L2[y][0];
            phi[y2] = pick(L2[y2], {phi[y]}, "fan support");
            rec_pair(std::move(b), L2, y, y2);
            phi[x] = alpha_x;
            return;
        }

        // z is an outer neighbor of x.
        trace::emit("PL4-fan-z");
        int o = z == u ? v : u;  // x's other boundary neighbor
        int alpha = pick(L[z], list_union(L[x], L[y]), "near anchor");
        ListAssignment L2 = L;
        L2[z] = {alpha};
        for (int w : b.rotation(x)) {
            if (w == y || w == z) continue;
            if (w != u && w != v && pos[w] >= 0)
                throw InternalError("unexpected chord at x");
            L2[w] = list_minus(L2[w], alpha_x);
        }
        b.remove_vertex(x);
        b.set_outer(h0);
        int z3;
        if (o != y) {
            z3 = o;
        } else {
            z3 = -1;
            for (int cv : b.outer_walk())
                if (cv != y && cv != z && (z3 < 0 || cv < z3)) z3 = cv;
            if (z3 < 0) throw InternalError("no third vertex after fan removal");
        }
        rec_correct(std::move(b), L2, y, z, z3);
        phi[x] = alpha_x;
    }
};

std::optional<std::string> structural_check(const PlaneGraph& g) {
    try {
        g.validate(true);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    if (!g.outer_set()) return "outer face not designated";
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_suitable(const PlaneGraph& g, int x, int y,
                                          const ListAssignment& in_lists) {
    if (auto r = structural_check(g)) return r;
    if (!g.alive(x) || !g.alive(y)) return "anchor vertex missing";
    if (static_cast<int>(in_lists.size()) < g.slot_count()) return "list assignment too short";
    ListAssignment lists = in_lists;
    normalize_lists(lists);
    if (g.alive_count() == 1) {
        if (x != y) return "distinct anchors in a one-vertex graph";
        if (lists[x].empty()) return "anchor list empty";
        return std::nullopt;
    }
    if (x == y) return "anchors must be distinct";
    if (!g.has_edge(x, y)) return "anchors must be adjacent";
    auto W = g.outer_walk();
    if (walk_index_of(W, x) < 0 || walk_index_of(W, y) < 0)
        return "anchors must lie on the outer walk";
    std::vector<char> on(g.slot_count(), 0);
    for (int v : W) on[v] = 1;
    if (lists[x].empty()) return "first anchor needs 1 color";
    if (lists[y].size() < 2) return "second anchor needs 2 colors";
    for (int v : g.vertices()) {
        if (v == x || v == y) continue;
        size_t need = on[v] ? 3 : 5;
        if (lists[v].size() < need)
            return "vertex " + std::to_string(v) + " needs " + std::to_string(need) +
                   " colors";
    }
    return std::nullopt;
}

std::optional<std::string> check_correct(const PlaneGraph& g, int x, int y, int z,
                                         const ListAssignment& in_lists) {
    if (auto r = structural_check(g)) return r;
    if (static_cast<int>(in_lists.size()) < g.slot_count()) return "list assignment too short";
    ListAssignment lists = in_lists;
    normalize_lists(lists);
    if (x == y || x == z || y == z) return "special vertices must be distinct";
    for (int v : {x, y, z})
        if (!g.alive(v)) return "special vertex missing";
    auto W = g.outer_walk();
    std::vector<char> on(g.slot_count(), 0);
    for (size_t i = 0; i < W.size(); ++i) {
        if (on[W[i]]) return "outer boundary must be a simple cycle";
        on[W[i]] = 1;
    }
    auto bd = biconnected_blocks(g.to_graph());
    if (bd.blocks.size() != 1) return "graph must be 2-connected";
    for (int v : {x, y, z})
        if (!on[v]) return "special vertices must lie on the outer cycle";
    if (lists[x].empty()) return "first anchor needs 1 color";
    ColorList rest = list_minus(lists[y], ColorList{lists[x][0]});
    if (rest.empty()) return "second anchor needs a color distinct from the first";
    if (lists[z].size() < 3) return "third special vertex needs 3 colors";
    for (int v : g.vertices()) {
        if (v == x || v == y || v == z) continue;
        size_t need = on[v] ? 4 : 5;
        if (lists[v].size() < need)
            return "vertex " + std::to_string(v) + " needs " + std::to_string(need) +
                   " colors";
    }
    return std::nullopt;
}

Coloring color_precolored_pair(const PlaneGraph& g, int x, int y, int cx, int cy,
                               const ListAssignment& in_lists) {
    Coloring phi(g.slot_count(), kUncolored);
    phi[x] = cx;
    phi[y] = cy;
    if (g.alive_count() <= 2) return phi;
    if (cx == cy) throw InvalidListsError("anchor colors must differ");
    ListAssignment lists = in_lists;
    normalize_lists(lists);

    Graph sg = g.to_graph();
    auto bd = biconnected_blocks(sg);
    int root = -1;
    for (size_t i = 0; i < bd.blocks.size(); ++i)
        for (auto [p, q] : bd.blocks[i].edges)
            if ((p == x && q == y) || (p == y && q == x)) root = static_cast<int>(i);
    if (root < 0) throw InvalidGraphError("anchor edge not found in any block");

    auto gouter = g.outer_walk();
    std::vector<char> on_outer(g.slot_count(), 0);
    std::vector<int> outer_next(g.slot_count(), -1);
    int wl = static_cast<int>(gouter.size());
    for (int i = wl - 1; i >= 0; --i) {
        on_outer[gouter[i]] = 1;
        outer_next[gouter[i]] = gouter[(i + 1) % wl];  // first occurrence wins
    }

    // BFS over the block-cut tree from the root block.
    std::vector<char> visited(bd.blocks.size(), 0);
    std::deque<std::pair<int, int>> queue;  // (block, attaching cut or -1)
    queue.push_back({root, -1});
    visited[root] = 1;
    Engine eng(phi);

    while (!queue.empty()) {
        auto [bi, attach] = queue.front();
        queue.pop_front();
        const auto& blk = bd.blocks[bi];

        for (int v : blk.vertices)
            if (bd.is_cut[v])
                for (int nb : bd.blocks_of[v])
                    if (!visited[nb]) {
                        visited[nb] = 1;
                        queue.push_back({nb, v});
                    }

        int ax, ay;
        if (bi == root) {
            ax = x;
            ay = y;
        } else {
            ax = attach;
            if (phi[ax] == kUncolored) throw InternalError("cut vertex uncolored");
            ay = -1;  // chosen after the block outer face is known
        }

        if (blk.edges.size() == 1) {
            auto [p, q] = blk.edges[0];
            int other = phi[p] == kUncolored ? p : (phi[q] == kUncolored ? q : -1);
            if (other >= 0)
                phi[other] = smallest_avoiding(
                    lists[other], {phi[other == p ? q : p]}, "bridge endpoint");
            continue;
        }

        PlaneGraph bplane = g.restricted_to_edges(blk.edges);
        // Outer face of the block: the face containing the global outer
        // region when the block touches it, else any face at the anchor.
        int touch = -1;
        for (int v : blk.vertices)
            if (on_outer[v]) {
                touch = v;
                break;
            }
        if (touch >= 0) {
            int w = outer_next[touch];
            const auto& r = g.rotation(touch);
            int start = g.rot_index(touch, w);
            if (start < 0) throw InternalError("outer successor missing from rotation");
            int nb = -1;
            for (size_t s = 0; s < r.size(); ++s) {
                int cand = r[(start + s) % r.size()];
                if (bplane.has_edge(touch, cand)) {
                    nb = cand;
                    break;
                }
            }
            if (nb < 0) throw InternalError("block vertex lost all block edges");
            bplane.set_outer({touch, nb});
        } else {
            // Enclosed block: its outer face is the one holding the rest of
            // the graph.  At the attaching cut, every foreign edge leaves into
            // that face, so the corner just clockwise of any foreign edge
            // identifies it.
            const auto& r = g.rotation(ax);
            int start = -1;
            for (size_t s = 0; s < r.size(); ++s)
                if (!bplane.has_edge(ax, r[s])) {
                    start = static_cast<int>(s);
                    break;
                }
            if (start < 0) throw InternalError("enclosed block with no foreign edge");
            int nb = -1;
            for (size_t s = 1; s <= r.size(); ++s) {
                int cand = r[(start + s) % r.size()];
                if (bplane.has_edge(ax, cand)) {
                    nb = cand;
                    break;
                }
            }
            if (nb < 0) throw InternalError("cut vertex with no block edge");
            bplane.set_outer({ax, nb});
        }

        auto bouter = bplane.outer_walk();
        if (bi == root) {
            if (walk_index_of(bouter, x) < 0 || walk_index_of(bouter, y) < 0)
                throw InternalError("anchors not on block boundary");
        } else {
            int ic = walk_index_of(bouter, ax);
            if (ic < 0) throw InternalError("cut vertex not on block boundary");
            ay = bouter[(ic + 1) % bouter.size()];
            if (phi[ay] != kUncolored) throw InternalError("block support already colored");
            phi[ay] = smallest_avoiding(lists[ay], {phi[ax]}, "block support");
        }

        bplane.triangulate_inner();
        eng.rec_pair(std::move(bplane), lists, ax, ay);
    }
    return phi;
}

Coloring color_suitable(const PlaneGraph& g, int x, int y, const ListAssignment& in_lists) {
    if (auto r = check_suitable(g, x, y, in_lists))
        throw InvalidListsError("not a suitable instance: " + *r);
    ListAssignment lists = in_lists;
    normalize_lists(lists);
    Coloring phi;
    if (g.alive_count() == 1) {
        phi.assign(g.slot_count(), kUncolored);
        phi[x] = lists[x][0];
    } else {
        int cx = lists[x][0];
        int cy = smallest_avoiding(lists[y], {cx}, "second anchor");
        phi = color_precolored_pair(g, x, y, cx, cy, lists);
    }
    verify_coloring(g.to_graph(), in_lists, phi);
    return phi;
}

Coloring color_correct(const PlaneGraph& g, int x, int y, int z,
                       const ListAssignment& lists) {
    if (auto r = check_correct(g, x, y, z, lists))
        throw InvalidListsError("not a correct-triple instance: " + *r);
    PlaneGraph b(g);
    b.triangulate_inner();
    ListAssignment L = lists;
    normalize_lists(L);
    L[x] = {L[x][0]};
    L[y] = {smallest_avoiding(L[y], L[x], "second anchor")};
    Coloring phi(g.slot_count(), kUncolored);
    Engine eng(phi);
    eng.rec_correct(std::move(b), L, x, y, z);
    verify_coloring(g.to_graph(), lists, phi);
    return phi;
}

Coloring color_plus_edge(const PlaneGraph& g, std::pair<int, int> extra,
                         const ListAssignment& in_lists) {
    auto [a, b] = extra;
    ListAssignment lists = in_lists;
    normalize_lists(lists);
    if (!g.alive(a) || !g.alive(b) || a == b)
        throw InvalidGraphError("extra edge endpoints invalid");
    if (g.has_edge(a, b)) throw InvalidGraphError("extra edge already present");
    g.validate(false);
    if (static_cast<int>(lists.size()) < g.slot_count())
        throw InvalidListsError("list assignment too short");
    for (int v : g.vertices())
        if (lists[v].size() < 5)
            throw InvalidListsError("vertex " + std::to_string(v) + " needs 5 colors");

    // Components (at most two, joined by the extra edge).
    Graph sg = g.to_graph();
    std::vector<int> comp(g.slot_count(), -1);
    int ncomp = 0;
    for (int v : g.vertices()) {
        if (comp[v] >= 0) continue;
        std::deque<int> bfs{v};
        comp[v] = ncomp;
        while (!bfs.empty()) {
            int w = bfs.front();
            bfs.pop_front();
            for (int u2 : sg.neighbors(w))
                if (comp[u2] < 0) {
                    comp[u2] = ncomp;
                    bfs.push_back(u2);
                }
        }
        ++ncomp;
    }
    if (ncomp > 2) throw InvalidGraphError("graph plus edge must be connected");
    if (ncomp == 2 && comp[a] == comp[b])
        throw InvalidGraphError("graph plus edge must be connected");

    auto color_component = [&](int which, Coloring& phi, const ListAssignment& L) {
        std::vector<int> verts;
        for (int v : g.vertices())
            if (comp[v] == which) verts.push_back(v);
        std::vector<std::pair<int, int>> es;
        for (auto [p, q] : g.edges())
            if (comp[p] == which) es.emplace_back(p, q);
        PlaneGraph cg = g.restricted_to_edges(es, verts);
        if (verts.size() == 1) {
            phi[verts[0]] = L[verts[0]][0];
            return;
        }
        int s = verts[0];
        cg.set_outer({s, cg.rotation(s)[0]});
        auto W = cg.outer_walk();
        Coloring sub = color_suitable(cg, W[0], W[1], L);
        for (int v : verts) phi[v] = sub[v];
    };

    Coloring phi(g.slot_count(), kUncolored);
    if (ncomp == 2) {
        trace::emit("PL3-bridge");
        color_component(comp[a], phi, lists);
        ListAssignment L2 = lists;
        L2[b] = list_minus(L2[b], phi[a]);
        color_component(comp[b], phi, L2);
    } else {
        PlaneGraph T(g);
        T.triangulate_all();
        int u = std::min(a, b), v2 = std::max(a, b);
        if (T.has_edge(u, v2)) {
            trace::emit("PL3-planar");
            int s = T.vertices()[0];
            T.set_outer({s, T.rotation(s)[0]});
            auto W = T.outer_walk();
            phi = color_suitable(T, W[0], W[1], lists);
        } else {
            trace::emit("PL3-apex");
            int alpha = lists[u][0], beta = lists[u][1];
            ListAssignment L2 = lists;
            for (int w : T.rotation(u))
                L2[w] = list_minus(list_minus(L2[w], alpha), beta);
            auto comps = T.remove_vertices_with_hole({u});
            if (comps.size() != 1 || comps[0].hole_half.first < 0)
                throw InternalError("apex removal fractured the triangulation");
            PlaneGraph Tm = std::move(comps[0].graph);
            Tm.set_outer(comps[0].hole_half);
            auto W = Tm.outer_walk();
            phi = color_suitable(Tm, W[0], W[1], L2);
            phi[u] = phi[v2] == alpha ? beta : alpha;
        }
    }

    // Final verification against the true graph (plane part plus the edge).
    Graph full = g.to_graph();
    full.add_edge(a, b);
    verify_coloring(full, lists, phi);
    return phi;
}

std::optional<std::pair<int, int>> find_suitable_pair(const PlaneGraph& g,
                                                      const ListAssignment& lists) {
    if (!g.outer_set()) return std::nullopt;
    auto W = g.outer_walk();
    int m = static_cast<int>(W.size());
    if (g.alive_count() == 1) {
        if (!check_suitable(g, W[0], W[0], lists)) return std::make_pair(W[0], W[0]);
        return std::nullopt;
    }
    for (int i = 0; i < m; ++i) {
        int x = W[i], y = W[(i + 1) % m];
        if (x == y) continue;
        if (!check_suitable(g, x, y, lists)) return std::make_pair(x, y);
        if (!check_suitable(g, y, x, lists)) return std::make_pair(y, x);
    }
    return std::nullopt;
}

}  // namespace crosscolor
