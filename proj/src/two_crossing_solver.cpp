// Coloring of drawings with up to two crossings from 5-lists.
//
// Strategy: reduce while possible (low-degree vertex, separating triangle
// with a crossing-free side, separated 4-cycle), then connect the two
// crossing regions with a shortest path, reshape it until its crowded
// neighborhoods are sparse, extend it one ring step into each crossing, and
// color the extended path so that the plane remainder splits into pieces the
// boundary colorer can finish.  Each certificate that the case analysis
// proposes is executed and verified; when one goes through, its tag is
// emitted.  When a branch's structural precondition fails we throw
// InternalCaseGap and the top level falls back to the exhaustive oracle,
// counting the event in SolveStats.

#include "crosscolor/two_crossing.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

#include "crosscolor/errors.hpp"
#include "crosscolor/graph.hpp"
#include "crosscolor/oracle.hpp"
#include "crosscolor/path_engine.hpp"
#include "crosscolor/planar_colorer.hpp"
#include "crosscolor/plane_graph.hpp"
#include "crosscolor/trace.hpp"

namespace crosscolor {

namespace {

SolveStats g_stats;

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::string ids_to_string(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(v[i]);
    }
    return s;
}

// The four crossed edge pairs (plus the extra edge in plus-edge mode); these
// never lie on a separating cycle and never appear inside the skeleton.
std::set<std::pair<int, int>> removed_diagonals(const TwoCrossingDrawing& d) {
    std::set<std::pair<int, int>> s;
    for (const auto& c : d.crossings) s.insert(norm_edge(c.v(), c.w()));
    if (d.mode == DrawingMode::PlusEdge) s.insert(norm_edge(d.extra_edge.first, d.extra_edge.second));
    return s;
}

std::set<std::pair<int, int>> crossed_edges(const TwoCrossingDrawing& d) {
    auto s = removed_diagonals(d);
    for (const auto& c : d.crossings) s.insert(norm_edge(c.t(), c.u()));
    return s;
}

bool in_some_cluster(const TwoCrossingDrawing& d, int v) {
    for (const auto& c : d.crossings)
        if (v == c.v() || v == c.u() || v == c.w() || v == c.t()) return true;
    return false;
}

// The two cluster vertices joined to x by ring edges (never by a crossed
// diagonal).  x must be one of the four cluster vertices.
std::array<int, 2> ring_neighbors(const Crossing& c, int x) {
    if (x == c.v() || x == c.w()) return {c.u(), c.t()};
    if (x == c.u() || x == c.t()) return {c.v(), c.w()};
    throw InternalError("ring_neighbors: vertex not in the cluster");
}

// One way of naming a cluster's corners: a 4-cycle v-u-w-t of ring edges
// with diagonals v-w and u-t.  Relabelings that preserve the ring keep that
// structure, so every handler may fix roles up to the eight choices below.
struct SideLabel {
    int v, u, w, t;
};

std::vector<SideLabel> side_labelings(const Crossing& c) {
    std::array<int, 4> ring{c.v(), c.u(), c.w(), c.t()};
    std::vector<SideLabel> out;
    out.reserve(8);
    for (int dir : {1, 3})
        for (int s = 0; s < 4; ++s)
            out.push_back(SideLabel{ring[s % 4], ring[(s + dir) % 4], ring[(s + 2 * dir) % 4],
                                    ring[(s + 3 * dir) % 4]});
    return out;
}

// Text snapshot of an instance for the fallback diagnostics.
std::string dump_instance(const TwoCrossingDrawing& d, const ListAssignment& lists) {
    std::ostringstream os;
    Graph full = d.full_graph();
    os << "v " << full.slot_count() << "\n";
    for (auto [a, b] : full.edges()) os << "e " << a << " " << b << "\n";
    for (int v = 0; v < d.skeleton.slot_count(); ++v) {
        if (!d.skeleton.alive(v)) continue;
        os << "rot " << v;
        for (int u : d.skeleton.rotation(v)) os << " " << u;
        os << "\n";
    }
    for (const auto& c : d.crossings)
        os << "cross " << c.v() << " " << c.w() << " " << c.t() << " " << c.u() << "\n";
    if (d.mode == DrawingMode::PlusEdge)
        os << "extra " << d.extra_edge.first << " " << d.extra_edge.second << "\n";
    for (int v = 0; v < static_cast<int>(lists.size()) && v < full.slot_count(); ++v) {
        if (!full.alive(v)) continue;
        os << "list " << v;
        for (int col : lists[v]) os << " " << col;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Sub-instance rebuilding.  Vertex deletions leave holes in the id space and
// normalize() insists every id below n is a real vertex, so reduced drawings
// are re-serialized with compact ids and normalized from scratch.

struct SubInstance {
    TwoCrossingDrawing sub;
    std::vector<int> to_old;  // sub id -> parent id
};

SubInstance rebuild_compact(const PlaneGraph& sk, const std::vector<Crossing>& cs) {
    TwoCrossingDrawing tmp;
    tmp.mode = DrawingMode::TwoCross;  // as_raw reinserts diagonals for any crossing count
    tmp.skeleton = sk;
    tmp.skeleton.clear_outer();
    tmp.crossings = cs;
    RawDrawing r = tmp.as_raw();

    std::vector<int> to_old;
    std::vector<int> to_new(r.n, -1);
    for (int v = 0; v < r.n; ++v)
        if (sk.alive(v)) {
            to_new[v] = static_cast<int>(to_old.size());
            to_old.push_back(v);
        }

    RawDrawing c;
    c.n = static_cast<int>(to_old.size());
    c.has_rotations = true;
    c.rotations.resize(c.n);
    for (int nv = 0; nv < c.n; ++nv)
        for (int u : r.rotations[to_old[nv]]) c.rotations[nv].push_back(to_new[u]);
    for (auto [a, b] : r.edges) c.edges.push_back({to_new[a], to_new[b]});
    for (const auto& rc : r.crossings) {
        RawCrossing out;
        out.edge_a = {to_new[rc.edge_a.first], to_new[rc.edge_a.second]};
        out.edge_b = {to_new[rc.edge_b.first], to_new[rc.edge_b.second]};
        c.crossings.push_back(out);
    }
    c.has_crossings = !c.crossings.empty();

    SubInstance si;
    si.to_old = std::move(to_old);
    si.sub = normalize(c);
    return si;
}

ListAssignment remap_lists(const ListAssignment& lists, const std::vector<int>& to_old) {
    ListAssignment out(to_old.size());
    for (std::size_t i = 0; i < to_old.size(); ++i) out[i] = lists[to_old[i]];
    return out;
}

void merge_sub_coloring(Coloring& phi, const Coloring& sub, const std::vector<int>& to_old) {
    for (std::size_t i = 0; i < to_old.size(); ++i)
        if (sub[i] != kUncolored) phi[to_old[i]] = sub[i];
}

// ---------------------------------------------------------------------------
// Cycle classification with crossing placement.

struct CycleSplit {
    bool ok = false;
    std::array<std::vector<int>, 2> side_verts;       // [outside, inside]
    std::vector<int> crossing_side;                   // per crossing index
    std::array<bool, 2> crossing_on{false, false};
};

// Each crossing point sits in the flank region of its kept edge, so the side
// holding both flank faces of (t, u) is the crossing's side.  Cycles given
// here never use a crossed edge, hence the kept edge is strictly one side.
CycleSplit split_cycle(const TwoCrossingDrawing& d, const std::vector<int>& cycle) {
    CycleSplit out;
    RegionSplit rs;
    try {
        rs = classify_cycle(d.skeleton, cycle);
    } catch (const Error&) {
        return out;
    }
    for (int v : d.skeleton.vertices()) {
        int s = rs.vertex_side[v];
        if (s == RegionSplit::kOutside || s == RegionSplit::kInside) out.side_verts[s].push_back(v);
    }
    for (const auto& c : d.crossings) {
        int f1 = rs.faces.face_of(c.t(), c.u());
        int f2 = rs.faces.face_of(c.u(), c.t());
        if (f1 < 0 || f2 < 0) return out;
        int s1 = rs.face_side[f1], s2 = rs.face_side[f2];
        if (s1 != s2 || (s1 != RegionSplit::kOutside && s1 != RegionSplit::kInside)) return out;
        out.crossing_side.push_back(s1);
        out.crossing_on[s1] = true;
    }
    out.ok = true;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reduction search.

std::optional<Reduction> find_reduction(const TwoCrossingDrawing& d) {
    Graph full = d.full_graph();

    // Rung 1: a vertex of full degree at most four can always be colored last.
    for (int v : full.vertices())
        if (full.degree(v) <= 4) {
            Reduction r;
            r.kind = Reduction::Kind::LowDegreeDelete;
            r.v = v;
            return r;
        }

    if (d.mode != DrawingMode::TwoCross) return std::nullopt;

    auto crossed = crossed_edges(d);
    auto uncrossed = [&](int a, int b) {
        return d.skeleton.has_edge(a, b) && !crossed.count(norm_edge(a, b));
    };

    // Rung 2: separating triangle of uncrossed edges with a crossing-free side.
    const int n = d.skeleton.slot_count();
    for (int a = 0; a < n; ++a) {
        if (!d.skeleton.alive(a)) continue;
        for (int b = a + 1; b < n; ++b) {
            if (!d.skeleton.alive(b) || !uncrossed(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!d.skeleton.alive(c) || !uncrossed(a, c) || !uncrossed(b, c)) continue;
                auto sp = split_cycle(d, {a, b, c});
                if (!sp.ok) continue;
                if (sp.side_verts[0].empty() || sp.side_verts[1].empty()) continue;
                for (int s : {RegionSplit::kInside, RegionSplit::kOutside}) {
                    if (sp.crossing_on[s]) continue;
                    Reduction r;
                    r.kind = Reduction::Kind::TriangleSplit;
                    r.cycle = {a, b, c};
                    r.inside = sp.side_verts[s];
                    return r;
                }
            }
        }
    }

    // Rungs 3 and 4: 4-cycle a-b-c-d of uncrossed edges, opposite corners
    // non-adjacent, one side crossing-free and nonempty.  If the crossing-free
    // side has no common neighbor of a and c we can rebuild along the cycle
    // (rung 3); otherwise the common neighbors form a fan (rung 4).  All rung-3
    // candidates win over any rung-4 one.
    std::optional<Reduction> fan;
    for (int a = 0; a < n; ++a) {
        if (!d.skeleton.alive(a)) continue;
        for (int c = a + 1; c < n; ++c) {
            if (!d.skeleton.alive(c) || full.has_edge(a, c)) continue;
            std::vector<int> common;
            for (int b : d.skeleton.rotation(a))
                if (uncrossed(a, b) && uncrossed(c, b)) common.push_back(b);
            std::sort(common.begin(), common.end());
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    int b = common[i], dd = common[j];
                    if (full.has_edge(b, dd)) continue;
                    auto sp = split_cycle(d, {a, b, c, dd});
                    if (!sp.ok) continue;
                    if (sp.side_verts[0].empty() || sp.side_verts[1].empty()) continue;
                    for (int s : {RegionSplit::kInside, RegionSplit::kOutside}) {
                        if (sp.crossing_on[s]) continue;
                        std::vector<int> common_in;
                        for (int z : sp.side_verts[s])
                            if (full.has_edge(z, a) && full.has_edge(z, c)) common_in.push_back(z);
                        if (common_in.empty()) {
                            Reduction r;
                            r.kind = Reduction::Kind::FourCycleInterior;
                            r.cycle = {a, b, c, dd};
                            r.inside = sp.side_verts[s];
                            return r;
                        }
                        if (!fan) {
                            Reduction r;
                            r.kind = Reduction::Kind::FourCycleFan;
                            r.cycle = {a, b, c, dd};
                            r.inside = sp.side_verts[s];
                            r.common_neighbors = common_in;
                            fan = r;
                        }
                    }
                }
            }
        }
    }
    return fan;
}

// ---------------------------------------------------------------------------
// Reduction application.

namespace {

using Recurse = std::function<Coloring(const TwoCrossingDrawing&, const ListAssignment&)>;

Coloring apply_low_degree(const TwoCrossingDrawing& d, int v, const ListAssignment& lists,
                          const Recurse& recurse) {
    PlaneGraph sk = d.skeleton;
    std::vector<Crossing> surviving;
    // (diagonal endpoints, corner vertex) for the kept-edge deletions that
    // force the old diagonal back as a plain chord
    std::vector<std::array<int, 3>> chords;
    for (const auto& c : d.crossings) {
        if (v == c.v() || v == c.w()) continue;  // crossing dies with its diagonal
        if (v == c.t() || v == c.u()) {
            int m = (v == c.t()) ? c.u() : c.t();
            chords.push_back({c.v(), c.w(), m});
            continue;
        }
        surviving.push_back(c);
    }
    sk.remove_vertex(v);
    for (auto [a, b, m] : chords) {
        // deleting the kept endpoint leaves a and b consecutive around m
        if (sk.succ(m, a) == b)
            sk.add_chord_in_face(a, m, b);
        else if (sk.succ(m, b) == a)
            sk.add_chord_in_face(b, m, a);
        else
            throw InternalCaseGap("C10-delete",
                                  "diagonal endpoints are not a face corner after deletion");
    }

    SubInstance si = rebuild_compact(sk, surviving);
    Coloring sub = recurse(si.sub, remap_lists(lists, si.to_old));

    Coloring phi(d.skeleton.slot_count(), kUncolored);
    merge_sub_coloring(phi, sub, si.to_old);

    Graph full = d.full_graph();
    ColorList free = lists[v];
    for (int u : full.neighbors(v))
        free.erase(std::remove(free.begin(), free.end(), phi[u]), free.end());
    if (free.empty())
        throw InternalError("low-degree vertex has no free color left");
    phi[v] = free[0];
    verify_coloring(full, lists, phi);
    trace::emit("C10-delete", "v=" + std::to_string(v));
    return phi;
}

Coloring apply_triangle_split(const TwoCrossingDrawing& d, const Reduction& r,
                              const ListAssignment& lists, const Recurse& recurse) {
    // Color the crossing side first (recursively), then redo the crossing-free
    // side as a plane instance whose three boundary vertices are forced to the
    // colors already chosen.
    auto comps1 = PlaneGraph(d.skeleton).remove_vertices_with_hole(r.inside);
    if (comps1.size() != 1)
        throw InternalCaseGap("C11-split", "crossing side of the triangle is disconnected");
    SubInstance si = rebuild_compact(comps1[0].graph, d.crossings);
    Coloring sub = recurse(si.sub, remap_lists(lists, si.to_old));
    Coloring phi(d.skeleton.slot_count(), kUncolored);
    merge_sub_coloring(phi, sub, si.to_old);

    std::vector<int> cross_side;
    for (int u : d.skeleton.vertices())
        if (!contains(r.cycle, u) && !contains(r.inside, u)) cross_side.push_back(u);
    auto comps2 = PlaneGraph(d.skeleton).remove_vertices_with_hole(cross_side);
    if (comps2.size() != 1)
        throw InternalCaseGap("C11-split", "crossing-free side of the triangle is disconnected");
    PlaneGraph inner = std::move(comps2[0].graph);
    inner.set_outer(comps2[0].hole_half);

    std::vector<int> t = r.cycle;
    std::sort(t.begin(), t.end());
    ListAssignment l2 = lists;
    l2[t[0]] = {phi[t[0]]};
    l2[t[1]] = {phi[t[0]], phi[t[1]]};
    l2[t[2]] = {phi[t[0]], phi[t[1]], phi[t[2]]};
    Coloring sub2 = color_suitable(inner, t[0], t[1], l2);
    for (int u : t)
        if (sub2[u] != phi[u])
            throw InternalError("triangle boundary colors diverged between the two sides");
    for (int u : inner.vertices()) phi[u] = sub2[u];

    verify_coloring(d.full_graph(), lists, phi);
    trace::emit("C11-split", "cycle=" + ids_to_string(r.cycle));
    return phi;
}

Coloring apply_four_cycle(const TwoCrossingDrawing& d, const Reduction& r,
                          const ListAssignment& lists, const Recurse& recurse) {
    int a = r.cycle[0], b = r.cycle[1], c = r.cycle[2], dd = r.cycle[3];
    Graph full = d.full_graph();
    if (full.has_edge(a, c) || full.has_edge(b, dd))
        throw InternalCaseGap("C12-chord", "separated 4-cycle has a chord");

    // Outside piece: remove the crossing-free side and pin b-d with a chord so
    // the two fan centers get distinct colors.
    auto comps1 = PlaneGraph(d.skeleton).remove_vertices_with_hole(r.inside);
    if (comps1.size() != 1)
        throw InternalCaseGap("C12-chord", "outside of the 4-cycle is disconnected");
    PlaneGraph g1 = std::move(comps1[0].graph);
    bool placed = false;
    for (auto [x, apex, y] : {std::array<int, 3>{b, a, dd}, std::array<int, 3>{dd, a, b},
                              std::array<int, 3>{b, c, dd}, std::array<int, 3>{dd, c, b}}) {
        if (g1.succ(apex, x) == y) {
            g1.add_chord_in_face(x, apex, y);
            placed = true;
            break;
        }
    }
    if (!placed)
        throw InternalCaseGap("C12-chord", "4-cycle corners do not bound the hole");
    SubInstance si = rebuild_compact(g1, d.crossings);
    Coloring sub = recurse(si.sub, remap_lists(lists, si.to_old));
    Coloring phi(d.skeleton.slot_count(), kUncolored);
    merge_sub_coloring(phi, sub, si.to_old);

    // Inside piece: keep the crossing-free side plus b and d.  Its outer cycle
    // runs b, the neighbors of a, d, the neighbors of c; vertices adjacent to
    // the erased corner a (resp. c) lose that corner's color.
    std::vector<int> strip;
    for (int u : d.skeleton.vertices())
        if (u != b && u != dd && !contains(r.inside, u)) strip.push_back(u);
    auto comps2 = PlaneGraph(d.skeleton).remove_vertices_with_hole(strip);
    if (comps2.size() != 1)
        throw InternalCaseGap("C12-chord", "inside of the 4-cycle is disconnected");
    PlaneGraph g2 = std::move(comps2[0].graph);
    g2.set_outer(comps2[0].hole_half);

    ListAssignment l2 = lists;
    auto walk = g2.outer_walk();
    for (int u : walk) {
        if (u == b || u == dd) continue;
        ColorList cl = lists[u];
        if (d.skeleton.has_edge(u, a))
            cl.erase(std::remove(cl.begin(), cl.end(), phi[a]), cl.end());
        if (d.skeleton.has_edge(u, c))
            cl.erase(std::remove(cl.begin(), cl.end(), phi[c]), cl.end());
        l2[u] = cl;
    }
    l2[b] = {phi[b]};
    l2[dd] = {phi[dd]};
    int z = -1;
    for (int u : walk)
        if (u != b && u != dd) {
            z = u;
            break;
        }
    if (z < 0)
        throw InternalCaseGap("C12-chord", "4-cycle interior has no boundary vertex");
    Coloring sub2 = color_correct(g2, b, dd, z, l2);
    for (int u : g2.vertices())
        if (u != b && u != dd) phi[u] = sub2[u];

    verify_coloring(full, lists, phi);
    trace::emit("C12-rebuild", "cycle=" + ids_to_string(r.cycle));
    return phi;
}

}  // namespace

Coloring apply_reduction(const TwoCrossingDrawing& d, const Reduction& r,
                         const ListAssignment& lists, const Recurse& recurse) {
    switch (r.kind) {
        case Reduction::Kind::LowDegreeDelete:
            return apply_low_degree(d, r.v, lists, recurse);
        case Reduction::Kind::TriangleSplit:
            return apply_triangle_split(d, r, lists, recurse);
        case Reduction::Kind::FourCycleInterior:
            return apply_four_cycle(d, r, lists, recurse);
        case Reduction::Kind::FourCycleFan:
            // A fan reduction is only reported when the 4-cycle also fails the
            // interior test; the structural analysis rules that out, so any
            // arrival here is an inconsistency worth flagging.
            throw InternalCaseGap("C13-fan", "fan 4-cycle survived the earlier rungs");
    }
    throw InternalError("unknown reduction kind");
}

// ---------------------------------------------------------------------------
// Connecting path machinery.

std::vector<int> shortest_cc_path(const TwoCrossingDrawing& d) {
    if (d.crossings.size() != 2)
        throw BadInputError("shortest_cc_path needs a drawing with two crossings");
    Graph full = d.full_graph();
    auto crossed = crossed_edges(d);

    std::vector<int> sources = d.crossings[0].cluster();
    std::vector<int> targets = d.crossings[1].cluster();
    std::sort(sources.begin(), sources.end());
    std::sort(targets.begin(), targets.end());
    std::vector<char> is_target(full.slot_count(), 0);
    for (int t : targets) is_target[t] = 1;

    std::vector<int> parent(full.slot_count(), -2);
    std::deque<int> bfs;
    for (int s : sources)
        if (parent[s] == -2) {
            parent[s] = -1;
            bfs.push_back(s);
        }
    int hit = -1;
    for (int s : sources)
        if (is_target[s]) {
            hit = s;
            break;
        }
    while (hit < 0 && !bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        auto nb = full.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (int u : nb) {
            if (parent[u] != -2 || crossed.count(norm_edge(v, u))) continue;
            parent[u] = v;
            if (is_target[u]) {
                hit = u;
                break;
            }
            bfs.push_back(u);
        }
    }
    if (hit < 0)
        throw InternalCaseGap("C15-disconnected", "crossing regions are not joined");
    std::vector<int> path;
    for (int v = hit; v >= 0; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Vertices outside the path adjacent to all three of a window around center i.
std::vector<int> window_cover(const Graph& g, const std::vector<int>& path, int i) {
    std::vector<char> on(g.slot_count(), 0);
    for (int v : path) on[v] = 1;
    std::vector<int> out;
    for (int z : g.vertices()) {
        if (on[z]) continue;
        if (g.has_edge(z, path[i - 1]) && g.has_edge(z, path[i]) && g.has_edge(z, path[i + 1]))
            out.push_back(z);
    }
    return out;
}

std::vector<int> crowd_set(const Graph& g, const std::vector<int>& q) {
    std::vector<char> on(g.slot_count(), 0);
    for (int v : q) on[v] = 1;
    std::vector<int> out;
    for (int z : g.vertices())
        if (!on[z] && g.degree_into(z, q) >= 3) out.push_back(z);
    return out;
}

}  // namespace

std::vector<int> nicify_path(const TwoCrossingDrawing& d, std::vector<int> path) {
    Graph full = d.full_graph();
    const int p = static_cast<int>(path.size());
    if (p < 3) return path;

    bool changed = false;
    int guard = 4 * p * p + 16;
    while (guard-- > 0) {
        std::vector<std::vector<int>> cover(p);
        for (int i = 1; i + 1 < p; ++i) {
            cover[i] = window_cover(full, path, i);
            if (cover[i].size() > 2)
                throw InternalCaseGap("C16-stuck", "window covered three times");
        }
        // a doubly covered window is bad when its flanks are not starved
        std::vector<int> heavy_pairs, lone_heavy;
        for (int i = 1; i + 1 < p; ++i) {
            if (cover[i].size() != 2) continue;
            if (i + 2 < p && cover[i + 1].size() == 2) heavy_pairs.push_back(i);
            int flank = 0;
            if (i - 1 >= 1) flank += static_cast<int>(cover[i - 1].size());
            if (i + 2 < p) flank += static_cast<int>(cover[i + 1].size());
            if (flank >= 2 && !(i + 2 < p && cover[i + 1].size() == 2) &&
                !(i - 1 >= 1 && cover[i - 1].size() == 2))
                lone_heavy.push_back(i);
        }
        if (heavy_pairs.empty() && lone_heavy.empty()) break;

        auto exchange = [&](int pos, const std::vector<int>& cands, auto&& accept) -> bool {
            for (int z : cands) {
                if (in_some_cluster(d, z))
                    throw InternalCaseGap("C16-stuck", "exchange vertex sits in a cluster");
                std::vector<int> next = path;
                next[pos] = z;
                if (full.degree_into(z, {next[pos - 1], next[pos + 1]}) != 2) continue;
                bool induced = true;
                for (int k = 0; k < p && induced; ++k)
                    if (k != pos && std::abs(k - pos) != 1 && full.has_edge(z, next[k]))
                        induced = false;
                if (!induced) continue;
                if (accept(next)) {
                    path = std::move(next);
                    return true;
                }
            }
            return false;
        };

        if (!lone_heavy.empty()) {
            // swap the center of the doubly covered window against one of its
            // two cover vertices; the first bad index must strictly move right
            int i = lone_heavy[0];
            auto min_bad = [&](const std::vector<int>& cand) {
                int best = p;
                for (int k = 1; k + 1 < p; ++k) {
                    auto ck = window_cover(full, cand, k);
                    if (ck.size() != 2) continue;
                    int flank = 0;
                    if (k - 1 >= 1) flank += static_cast<int>(window_cover(full, cand, k - 1).size());
                    if (k + 2 < p) flank += static_cast<int>(window_cover(full, cand, k + 1).size());
                    if (flank >= 2) best = std::min(best, k);
                }
                return best;
            };
            if (exchange(i, cover[i], [&](const std::vector<int>& cand) { return min_bad(cand) > i; })) {
                changed = true;
                trace::emit("C16-J", "i=" + std::to_string(i));
                continue;
            }
            throw InternalCaseGap("C16-stuck", "no exchange clears the doubly covered window");
        }

        int i = heavy_pairs[0];
        auto min_pair = [&](const std::vector<int>& cand) {
            int best = p;
            for (int k = 1; k + 2 < p; ++k)
                if (window_cover(full, cand, k).size() == 2 &&
                    window_cover(full, cand, k + 1).size() == 2)
                    best = std::min(best, k);
            return best;
        };
        if (exchange(i + 1, cover[i + 1],
                     [&](const std::vector<int>& cand) { return min_pair(cand) > i; })) {
            changed = true;
            trace::emit("C16-K", "i=" + std::to_string(i));
            continue;
        }
        throw InternalCaseGap("C16-stuck", "no exchange splits adjacent doubly covered windows");
    }
    if (guard <= 0)
        throw InternalCaseGap("C16-stuck", "path reshaping did not converge");

    PathAnalysis check = analyze_path(full, path);
    if (!check.nice)
        throw InternalCaseGap("C16-stuck", "reshaped path is still not nice");
    if (!changed) trace::emit("C16-nice", ids_to_string(path));
    return path;
}

std::vector<int> build_q(const TwoCrossingDrawing& d, const std::vector<int>& path_in) {
    if (d.crossings.size() != 2)
        throw BadInputError("build_q needs a drawing with two crossings");
    Graph full = d.full_graph();
    std::vector<int> path = path_in;
    const int p0 = static_cast<int>(path.size());
    if (p0 < 2) throw BadInputError("build_q needs a path with at least two vertices");

    auto cluster_of = [&](int x) -> const Crossing& {
        for (const auto& c : d.crossings)
            if (x == c.v() || x == c.u() || x == c.w() || x == c.t()) return c;
        throw BadInputError("path endpoint is not a cluster vertex");
    };

    int guard = p0 + 6;
    while (guard-- > 0) {
        const int p = static_cast<int>(path.size());
        const Crossing& c1 = cluster_of(path.front());
        const Crossing& c2 = cluster_of(path.back());

        // endpoint candidates: ring neighbors that keep the extension induced
        auto end_candidates = [&](int x1, int x2, const Crossing& c) {
            std::vector<int> out;
            for (int h : ring_neighbors(c, x1)) {
                if (full.has_edge(h, x2)) continue;
                bool induced = true;
                for (int k = 0; k < p && induced; ++k)
                    if (path[k] != x1 && full.has_edge(h, path[k])) induced = false;
                if (induced) out.push_back(h);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto heads = end_candidates(path[0], path[1], c1);
        auto tails = end_candidates(path[p - 1], path[p - 2], c2);
        if (heads.empty() || tails.empty())
            throw InternalCaseGap("C18-stuck", "no induced ring extension at a path end");

        // a chosen end is valid when at most one crowd vertex reaches across it
        auto long_reach = [&](const std::vector<int>& q, int aa, int bb) {
            int count = 0;
            for (int z : crowd_set(full, q))
                if (full.has_edge(z, aa) && full.has_edge(z, bb)) ++count;
            return count;
        };

        struct Pick {
            std::vector<int> q;
            int head = -1, tail = -1;
            bool head_ok = false, tail_ok = false;
            int score = -1;
        };
        Pick best;
        for (int h : heads) {
            for (int t : tails) {
                if (h == t || full.has_edge(h, t)) continue;
                std::vector<int> q;
                q.push_back(h);
                q.insert(q.end(), path.begin(), path.end());
                q.push_back(t);
                Pick cand;
                cand.q = q;
                cand.head = h;
                cand.tail = t;
                cand.head_ok = long_reach(q, q[0], q[3]) <= 1;
                cand.tail_ok = long_reach(q, q[p - 2], q[p + 1]) <= 1;
                cand.score = (cand.head_ok ? 1 : 0) + (cand.tail_ok ? 1 : 0);
                if (cand.score > best.score) best = cand;
            }
        }
        if (best.score < 0)
            throw InternalCaseGap("C18-stuck", "ring extensions collide at both ends");

        if (best.score == 2) {
            // both ends valid; confirm the doubled-window property before use
            const auto& q = best.q;
            const int qs = static_cast<int>(q.size());
            std::vector<std::vector<int>> cover(qs);
            for (int i = 1; i + 1 < qs; ++i) cover[i] = window_cover(full, q, i);
            for (int i = 1; i + 1 < qs; ++i) {
                if (cover[i].size() < 2) continue;
                for (int j = i + 1; j + 1 < qs; ++j) {
                    if (cover[j].size() < 2) continue;
                    std::set<int> between;
                    for (int z : cover[i + 1]) between.insert(z);
                    if (j - 1 != i + 1)
                        for (int z : cover[j - 1]) between.insert(z);
                    if (between.size() > 1)
                        throw InternalCaseGap("C18-P4", "doubled windows fail the inner bound");
                }
            }
            trace::emit("C18-pick", ids_to_string(q));
            return q;
        }

        // An end stays invalid only when the alternative ring neighbor is
        // blocked by an adjacency to the second path vertex; sliding the path
        // one step onto that neighbor repairs it, so run the slide and retry.
        auto slide_ok = [&](const std::vector<int>& next) {
            try {
                return analyze_path(full, next).nice;
            } catch (const BadInputError&) {
                return false;
            }
        };
        bool shifted = false;
        if (!best.head_ok) {
            for (int h : ring_neighbors(c1, path[0]))
                if (!contains(heads, h) && full.has_edge(h, path[1])) {
                    std::vector<int> next;
                    next.push_back(h);
                    next.insert(next.end(), path.begin() + 1, path.end());
                    if (!slide_ok(next))
                        throw InternalCaseGap("C18-stuck", "head slide broke the path shape");
                    path = std::move(next);
                    trace::emit("C18-shift", "head=" + std::to_string(h));
                    shifted = true;
                    break;
                }
        }
        if (!shifted && !best.tail_ok) {
            for (int t : ring_neighbors(c2, path[p - 1]))
                if (!contains(tails, t) && full.has_edge(t, path[p - 2])) {
                    std::vector<int> next(path.begin(), path.end() - 1);
                    next.push_back(t);
                    if (!slide_ok(next))
                        throw InternalCaseGap("C18-stuck", "tail slide broke the path shape");
                    path = std::move(next);
                    trace::emit("C18-shift", "tail=" + std::to_string(t));
                    shifted = true;
                    break;
                }
        }
        if (!shifted)
            throw InternalCaseGap("C18-stuck", "invalid end with no slide available");
    }
    throw InternalCaseGap("C18-stuck", "end repair did not converge");
}

// ---------------------------------------------------------------------------
// Certificate execution: color the extended path in the weakened graph, then
// finish the plane remainder pieces.

namespace {

std::optional<Coloring> run_certificate(const TwoCrossingDrawing& d, const Graph& full,
                                        const ListAssignment& lists, const std::vector<int>& q,
                                        const std::vector<int>& del_v,
                                        const std::vector<std::pair<int, int>>& del_e,
                                        const std::string& tag) {
    for (int v : del_v)
        if (contains(q, v)) return std::nullopt;
    for (auto [a, b] : del_e)
        if (!full.has_edge(a, b) || (contains(q, a) && contains(q, b))) return std::nullopt;

    Graph ambient = full;
    for (int v : del_v) ambient.remove_vertex(v);
    for (auto [a, b] : del_e)
        if (ambient.alive(a) && ambient.alive(b) && ambient.has_edge(a, b))
            ambient.remove_edge(a, b);

    Coloring phi(full.slot_count(), kUncolored);
    if (q.size() <= 2) {
        // a one- or two-vertex path leaves everyone with three colors, any
        // proper choice works
        phi[q[0]] = lists[q[0]][0];
        if (q.size() == 2) {
            ColorList cl = lists[q[1]];
            cl.erase(std::remove(cl.begin(), cl.end(), phi[q[0]]), cl.end());
            if (cl.empty()) return std::nullopt;
            phi[q[1]] = cl[0];
        }
    } else {
        PathAnalysis an;
        try {
            an = analyze_path(ambient, q);
        } catch (const BadInputError&) {
            return std::nullopt;
        }
        if (!an.good) return std::nullopt;
        Coloring on_q = color_good(ambient, an, lists);
        for (int v : q) phi[v] = on_q[v];
    }

    // leftover colors measured against the unweakened graph
    ListAssignment res = lists;
    for (int v : full.vertices()) {
        if (contains(q, v)) {
            res[v] = {phi[v]};
            continue;
        }
        ColorList cl = lists[v];
        for (int u : q)
            if (full.has_edge(v, u))
                cl.erase(std::remove(cl.begin(), cl.end(), phi[u]), cl.end());
        res[v] = cl;
    }

    std::vector<PlaneGraph> comps;
    try {
        comps = planarize_minus_path(d, q);
    } catch (const BadInputError&) {
        return std::nullopt;
    }

    for (auto& comp : comps) {
        auto verts = comp.vertices();
        if (verts.size() == 1) {
            if (res[verts[0]].empty()) return std::nullopt;
            phi[verts[0]] = res[verts[0]][0];
            continue;
        }
        std::vector<int> deficient;
        for (int v : verts)
            if (res[v].size() < 3) deficient.push_back(v);
        std::sort(deficient.begin(), deficient.end());

        std::vector<std::pair<int, int>> anchors;
        if (deficient.empty()) {
            auto pr = find_suitable_pair(comp, res);
            if (!pr) return std::nullopt;
            anchors.push_back(*pr);
        } else if (deficient.size() == 1) {
            int a = deficient[0];
            auto nb = comp.rotation(a);
            std::sort(nb.begin(), nb.end());
            for (int b : nb) {
                anchors.push_back({a, b});
                anchors.push_back({b, a});
            }
        } else if (deficient.size() == 2) {
            anchors.push_back({deficient[0], deficient[1]});
            anchors.push_back({deficient[1], deficient[0]});
        } else {
            return std::nullopt;
        }

        bool done = false;
        for (auto [x, y] : anchors) {
            if (check_suitable(comp, x, y, res)) continue;
            Coloring sub = color_suitable(comp, x, y, res);
            for (int v : verts) phi[v] = sub[v];
            done = true;
            break;
        }
        if (!done) return std::nullopt;
    }

    if (!verify_coloring(full, lists, phi, false)) return std::nullopt;
    trace::emit(tag, "q=" + ids_to_string(q));
    return phi;
}

// A certificate candidate queue: first one that goes through wins.
struct Certificate {
    std::vector<int> q;
    std::vector<int> del_v;
    std::vector<std::pair<int, int>> del_e;
    std::string tag;
};

std::optional<Coloring> run_first(const TwoCrossingDrawing& d, const Graph& full,
                                  const ListAssignment& lists,
                                  const std::vector<Certificate>& cands) {
    for (const auto& c : cands) {
        if (auto phi = run_certificate(d, full, lists, c.q, c.del_v, c.del_e, c.tag)) return phi;
        // a certificate also counts when read from the other end of the path
        std::vector<int> rq(c.q.rbegin(), c.q.rend());
        if (auto phi = run_certificate(d, full, lists, rq, c.del_v, c.del_e, c.tag)) return phi;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Distance 0: the clusters share a vertex.

Coloring handle_dist0(const TwoCrossingDrawing& d, const Graph& full,
                      const ListAssignment& lists) {
    // The eight relabelings per cluster move every corner through the v slot
    // and both of its ring neighbors through the u slot, so the pairs below
    // run over all two-step paths through every shared vertex.
    auto labs1 = side_labelings(d.crossings[0]);
    auto labs2 = side_labelings(d.crossings[1]);
    for (const auto& l1 : labs1) {
        for (const auto& l2 : labs2) {
            if (l1.v != l2.v) continue;  // a shared vertex, one per side of the path
            std::vector<Certificate> cands;
            if (l1.u == l2.u) {
                cands.push_back({{l1.u, l1.v}, {}, {}, "C15-share"});
            } else if (!full.has_edge(l1.u, l2.u)) {
                cands.push_back({{l1.u, l1.v, l2.u}, {}, {}, "C15-vee"});
            }
            if (auto phi = run_first(d, full, lists, cands)) return *phi;
        }
    }
    throw InternalCaseGap("C15", "no certificate for touching crossings");
}

// ---------------------------------------------------------------------------
// Distance 1: an edge joins the clusters.

Coloring handle_dist1(const TwoCrossingDrawing& d, const Graph& full,
                      const ListAssignment& lists) {
    for (int s : {0, 1}) {
        const Crossing& ca = d.crossings[s];
        const Crossing& cb = d.crossings[1 - s];
        for (const auto& l1 : side_labelings(ca)) {
            for (const auto& l2 : side_labelings(cb)) {
                if (!full.has_edge(l1.v, l2.v)) continue;
                if (full.has_edge(l1.u, l2.v) || full.has_edge(l2.u, l1.v)) continue;
                if (full.has_edge(l1.u, l2.u)) continue;
                std::vector<int> q{l1.u, l1.v, l2.v, l2.u};
                std::vector<Certificate> cands;
                cands.push_back({q, {}, {}, "C17-direct"});

                std::vector<int> crowd = crowd_set(full, q);
                std::vector<int> out_hubs;
                for (int z : crowd)
                    if (!in_some_cluster(d, z) && full.has_edge(z, l1.u) && full.has_edge(z, l2.u))
                        out_hubs.push_back(z);
                std::sort(out_hubs.begin(), out_hubs.end());

                if (!out_hubs.empty()) {
                    for (int z : out_hubs) {
                        if (!full.has_edge(z, l1.v)) continue;  // mirrored by the side swap
                        // When the triangle z-u1-v1 separates this side's
                        // crossing from the far cluster, the path can swing
                        // over to the other kept endpoint and dodge z.
                        auto sp = split_cycle(d, {z, l1.u, l1.v});
                        if (sp.ok) {
                            int side_of_far = -1;
                            for (int side : {0, 1})
                                if (contains(sp.side_verts[side], l2.v)) side_of_far = side;
                            int cross_side = sp.crossing_side[s];
                            if (side_of_far >= 0 && cross_side != side_of_far &&
                                !full.has_edge(l1.t, l2.v) && !full.has_edge(l1.t, l2.u)) {
                                cands.push_back({{l1.t, l1.v, l2.v, l2.u}, {}, {}, "C17-far"});
                                continue;
                            }
                        }
                        cands.push_back({q, {l2.t}, {}, "C17-hub"});
                        cands.push_back({q, {l1.t}, {}, "C17-hub"});
                    }
                } else if (contains(crowd, l1.w)) {
                    cands.push_back({q, {l1.w, l1.t}, {}, "C17-wing"});
                } else {
                    cands.push_back({q, {l2.t}, {}, "C17-tail"});
                    cands.push_back({q, {l1.t}, {}, "C17-tail"});
                }
                if (auto phi = run_first(d, full, lists, cands)) return *phi;
            }
        }
    }
    throw InternalCaseGap("C17", "no certificate for adjacent crossings");
}

// ---------------------------------------------------------------------------
// Distance 2 and beyond.

Coloring handle_dist_far(const TwoCrossingDrawing& d, const Graph& full,
                         const ListAssignment& lists, const std::vector<int>& shortest) {
    std::vector<int> path = nicify_path(d, shortest);
    std::vector<int> q = build_q(d, path);
    const int p = static_cast<int>(q.size()) - 2;  // inner path length

    std::vector<int> crowd = crowd_set(full, q);
    auto reach_both = [&](int a, int b) {
        std::vector<int> out;
        for (int z : crowd)
            if (full.has_edge(z, a) && full.has_edge(z, b)) out.push_back(z);
        return out;
    };

    // a crowd vertex spanning the whole extension exists only at distance two
    std::vector<int> span = p == 3 ? reach_both(q[0], q[4]) : std::vector<int>{};

    if (span.size() >= 3)
        throw InternalCaseGap("C19-span", "three vertices span the whole extension");

    if (span.size() == 2) {
        // constructive variant of the pair case: the two spanners are
        // adjacent, the lighter one is deleted and its mate loses one end edge
        int z1 = span[0], z2 = span[1];
        if (!full.has_edge(z1, z2))
            throw InternalCaseGap("C19-pair", "spanning pair is not adjacent");
        if (degree_into(full, z2, q) == 5) std::swap(z1, z2);
        if (degree_into(full, z2, q) == 5)
            throw InternalCaseGap("C19-pair", "both spanning vertices touch all of the path");
        std::vector<Certificate> cands{
            {q, {z2}, {{z1, q[4]}}, "C19-pair"},
            {q, {z2}, {{z1, q[0]}}, "C19-pair"},
            {q, {z2}, {{z1, q[0]}, {z1, q[4]}}, "C19-pair"},
        };
        if (auto phi = run_first(d, full, lists, cands)) return *phi;
        throw InternalCaseGap("C19-pair", "spanning pair certificates all failed");
    }

    if (span.size() == 1) {
        int z = span[0];
        trace::emit("C19-unique-z", "z=" + std::to_string(z));
        if (degree_into(full, z, q) == 5) {
            std::vector<Certificate> cands{{q, {}, {{z, q[0]}, {z, q[4]}}, "C19-big"}};
            if (auto phi = run_first(d, full, lists, cands)) return *phi;
            throw InternalCaseGap("C19-big", "full spanner certificate failed");
        }
        // at most one other crowd vertex reaches three apart
        std::vector<int> others;
        for (int zp : reach_both(q[0], q[3]))
            if (zp != z) others.push_back(zp);
        for (int zp : reach_both(q[1], q[4]))
            if (zp != z && !contains(others, zp)) others.push_back(zp);
        if (others.size() > 1)
            throw InternalCaseGap("C19-small", "two long reaches beside the spanner");
        std::vector<Certificate> cands;
        cands.push_back({q, {z}, {}, "C19-small"});
        if (!others.empty()) {
            int zp = others[0];
            int end = full.has_edge(zp, q[0]) ? q[0] : q[4];
            cands.push_back({q, {z}, {{zp, end}}, "C19-small"});
        }
        if (auto phi = run_first(d, full, lists, cands)) return *phi;
        throw InternalCaseGap("C19-small", "unique spanner certificates all failed");
    }

    // no spanner: long reaches exist only across an extension end
    std::vector<int> zs = reach_both(q[0], q[3]);
    std::vector<int> ze = reach_both(q[p - 2], q[p + 1]);
    if (zs.size() > 1 || ze.size() > 1)
        throw InternalCaseGap("C19", "two long reaches across one end");

    std::vector<Certificate> cands;
    cands.push_back({q, {}, {}, "C14-finish"});

    auto push_end_pack = [&](const std::vector<int>& qq, int z) {
        // z reaches across the start of qq; the blockers live near its far end
        const int pp = static_cast<int>(qq.size()) - 2;
        cands.push_back({qq, {z}, {}, "C19-end"});
        auto far_win = window_cover(full, qq, pp);
        std::sort(far_win.begin(), far_win.end());
        for (int y : far_win)
            if (y != z) cands.push_back({qq, {y, z}, {}, "C19-end"});
        auto prev_win = window_cover(full, qq, pp - 1);
        std::sort(prev_win.begin(), prev_win.end());
        if (prev_win.size() == 2 && full.has_edge(prev_win[0], prev_win[1]) &&
            prev_win[0] != z && prev_win[1] != z)
            cands.push_back({qq, {prev_win[0], prev_win[1]}, {}, "C19-end"});
    };

    if (!zs.empty() && !ze.empty()) {
        cands.push_back({q, {ze[0]}, {}, "C19-far"});
        cands.push_back({q, {zs[0]}, {}, "C19-far"});
        cands.push_back({q, {zs[0], ze[0]}, {}, "C19-far"});
    } else if (!zs.empty()) {
        push_end_pack(q, zs[0]);
    } else if (!ze.empty()) {
        std::vector<int> rq(q.rbegin(), q.rend());
        push_end_pack(rq, ze[0]);
    } else {
        auto first_win = window_cover(full, q, 1);
        auto last_win = window_cover(full, q, p);
        std::sort(first_win.begin(), first_win.end());
        std::sort(last_win.begin(), last_win.end());
        for (int y : last_win) cands.push_back({q, {y}, {}, "C19-mid"});
        for (int w : first_win) cands.push_back({q, {w}, {}, "C19-mid"});
        for (int y : last_win)
            for (int w : first_win)
                if (y != w) cands.push_back({q, {y, w}, {}, "C19-mid"});
        for (int center : {p - 1, 2}) {
            if (center < 1 || center + 1 >= p + 2) continue;
            auto win = window_cover(full, q, center);
            if (win.size() == 2 && full.has_edge(win[0], win[1]))
                cands.push_back({q, {win[0], win[1]}, {}, "C19-mid"});
        }
    }

    if (auto phi = run_first(d, full, lists, cands)) return *phi;
    throw InternalCaseGap("C19", "no certificate for separated crossings");
}

// ---------------------------------------------------------------------------
// Mode dispatch.

Coloring solve_impl(const TwoCrossingDrawing& d, const ListAssignment& lists, int depth);

Coloring solve_planar(const PlaneGraph& g_in, const ListAssignment& lists) {
    Graph plain = g_in.to_graph();
    Coloring phi(g_in.slot_count(), kUncolored);

    // split into connected components; each is a plane graph of its own
    std::vector<int> comp(g_in.slot_count(), -1);
    std::vector<std::vector<int>> comps;
    for (int v0 : g_in.vertices()) {
        if (comp[v0] >= 0) continue;
        comp[v0] = static_cast<int>(comps.size());
        comps.push_back({v0});
        std::deque<int> bfs{v0};
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u : plain.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = comp[v0];
                    comps.back().push_back(u);
                    bfs.push_back(u);
                }
        }
    }

    for (auto& verts : comps) {
        std::sort(verts.begin(), verts.end());
        if (verts.size() == 1) {
            phi[verts[0]] = lists[verts[0]][0];
            continue;
        }
        PlaneGraph sub = g_in;
        if (comps.size() > 1) {
            std::vector<std::pair<int, int>> keep;
            for (auto [a, b] : g_in.edges())
                if (comp[a] == comp[verts[0]]) keep.push_back({a, b});
            sub = g_in.restricted_to_edges(keep, verts);
        }
        if (!sub.outer_set()) sub.set_outer({verts[0], sub.rotation(verts[0])[0]});
        auto pr = find_suitable_pair(sub, lists);
        if (!pr) throw InternalError("no anchor edge on the outer face");
        Coloring sub_phi = color_suitable(sub, pr->first, pr->second, lists);
        for (int v : verts) phi[v] = sub_phi[v];
    }
    return phi;
}

Coloring solve_two(const TwoCrossingDrawing& d, const ListAssignment& lists, int depth) {
    if (auto r = find_reduction(d)) {
        Recurse recurse = [depth](const TwoCrossingDrawing& sub, const ListAssignment& sl) {
            return solve_impl(sub, sl, depth + 1);
        };
        return apply_reduction(d, *r, lists, recurse);
    }
    Graph full = d.full_graph();
    std::vector<int> path = shortest_cc_path(d);
    if (path.size() == 1) return handle_dist0(d, full, lists);
    if (path.size() == 2) return handle_dist1(d, full, lists);
    return handle_dist_far(d, full, lists, path);
}

Coloring solve_impl(const TwoCrossingDrawing& d, const ListAssignment& lists, int depth) {
    if (depth > 200) throw InternalError("reduction recursion exceeded its depth bound");
    try {
        switch (d.mode) {
            case DrawingMode::Planar: {
                Coloring phi = solve_planar(d.skeleton, lists);
                verify_coloring(d.full_graph(), lists, phi);
                return phi;
            }
            case DrawingMode::PlusEdge: {
                Coloring phi = color_plus_edge(d.skeleton, d.extra_edge, lists);
                verify_coloring(d.full_graph(), lists, phi);
                return phi;
            }
            case DrawingMode::TwoCross: {
                if (d.degenerate) {
                    // clusters sharing two vertices collapse to the touching
                    // case; the reduction ladder assumes distinct corners
                    return handle_dist0(d, d.full_graph(), lists);
                }
                Coloring phi = solve_two(d, lists, depth);
                verify_coloring(d.full_graph(), lists, phi);
                return phi;
            }
        }
        throw InternalError("unknown drawing mode");
    } catch (const InternalCaseGap& gap) {
        ++g_stats.case_gap_fallbacks;
        g_stats.gap_tags.push_back(gap.tag());
        g_stats.last_gap_instance = dump_instance(d, lists);
        trace::emit("solver-gap", gap.tag());
        auto phi = oracle_color(d.full_graph(), lists);
        if (!phi)
            throw InternalError(std::string("fallback found no coloring after gap ") + gap.what());
        return *phi;
    }
}

}  // namespace

std::optional<Coloring> magic_finish(const TwoCrossingDrawing& d, const MagicPathCertificate& cert,
                                     const ListAssignment& lists_in) {
    ListAssignment lists = lists_in;
    normalize_lists(lists);
    return run_certificate(d, d.full_graph(), lists, cert.q, cert.deleted_vertices,
                           cert.deleted_edges, "C14-finish");
}

const SolveStats& solve_stats() { return g_stats; }

void reset_solve_stats() { g_stats = SolveStats{}; }

Coloring solve(const TwoCrossingDrawing& d, const ListAssignment& lists_in) {
    Graph full = d.full_graph();
    if (static_cast<int>(lists_in.size()) < full.slot_count())
        throw InvalidListsError("list assignment is shorter than the vertex range");
    ListAssignment lists = lists_in;
    normalize_lists(lists);
    for (int v : full.vertices())
        if (lists[v].size() < 5)
            throw InvalidListsError("vertex " + std::to_string(v) + " has fewer than five colors");
    return solve_impl(d, lists, 0);
}

}  // namespace crosscolor
