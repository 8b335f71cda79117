#include "crosscolor/drawing.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace crosscolor {

namespace {

using I128 = __int128;

constexpr long long kMaxCoord = 1'000'000'000LL;

struct Pt {
    long long x = 0;
    long long y = 0;
};

Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }

I128 cross_p(Pt a, Pt b) { return static_cast<I128>(a.x) * b.y - static_cast<I128>(a.y) * b.x; }

I128 dot_p(Pt a, Pt b) { return static_cast<I128>(a.x) * b.x + static_cast<I128>(a.y) * b.y; }

int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient(Pt a, Pt b, Pt c) { return sgn(cross_p(sub(b, a), sub(c, a))); }

// p assumed collinear with segment ab
bool on_segment(Pt a, Pt b, Pt p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int half_of(Pt d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

// strict counterclockwise-angle order starting at the +x axis
bool ccw_before(Pt a, Pt b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross_p(a, b) > 0;
}

// Clockwise neighbor order from labeled direction vectors; equal directions
// mean overlapping edges and are rejected.
std::vector<int> cw_order(std::vector<std::pair<int, Pt>> dirs, const std::string& where) {
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return ccw_before(a.second, b.second); });
    for (size_t i = 0; i + 1 < dirs.size(); ++i) {
        Pt a = dirs[i].second, b = dirs[i + 1].second;
        if (half_of(a) == half_of(b) && cross_p(a, b) == 0)
            throw InvalidGraphError("two edges leave " + where + " in the same direction");
    }
    std::vector<int> out;
    for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) out.push_back(it->first);
    return out;
}

I128 floordiv(I128 a, I128 b) {  // b > 0
    I128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Compares a/b against c/d (b, d > 0) without overflow.
int cmp_frac(I128 a, I128 b, I128 c, I128 d) {
    int s = 1;
    while (true) {
        I128 qa = floordiv(a, b), qc = floordiv(c, d);
        if (qa != qc) return (qa < qc ? -1 : 1) * s;
        a -= qa * b;
        c -= qc * d;
        if (a == 0 && c == 0) return 0;
        if (a == 0) return -s;
        if (c == 0) return s;
        std::swap(a, b);
        std::swap(c, d);
        s = -s;
    }
}

struct CrossPoint {
    I128 nx = 0, ny = 0, den = 1;  // point (nx/den, ny/den), den > 0
};

CrossPoint cross_point(Pt p, Pt q, Pt r, Pt s) {
    Pt dq = sub(q, p), ds = sub(s, r);
    I128 den = cross_p(dq, ds);
    I128 tn = cross_p(sub(r, p), ds);
    if (den < 0) {
        den = -den;
        tn = -tn;
    }
    return {static_cast<I128>(p.x) * den + tn * dq.x,
            static_cast<I128>(p.y) * den + tn * dq.y, den};
}

bool same_point(const CrossPoint& a, const CrossPoint& b) {
    return cmp_frac(a.nx, a.den, b.nx, b.den) == 0 && cmp_frac(a.ny, a.den, b.ny, b.den) == 0;
}

std::pair<int, int> norm_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::pair<int, int> norm_pair(std::pair<int, int> e) { return norm_pair(e.first, e.second); }

// Degenerate position patterns are rejected up front so every later test can
// use strict signs only.
void check_positions(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<Pt>& pos) {
    for (int v = 0; v < n; ++v)
        if (std::llabs(pos[v].x) > kMaxCoord || std::llabs(pos[v].y) > kMaxCoord)
            throw BadInputError("coordinate of vertex " + std::to_string(v) +
                                " exceeds the 1e9 limit");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pos[a].x == pos[b].x && pos[a].y == pos[b].y)
                throw InvalidGraphError("vertices " + std::to_string(a) + " and " +
                                        std::to_string(b) + " share a position");
    for (auto [p, q] : edges)
        for (int z = 0; z < n; ++z) {
            if (z == p || z == q) continue;
            if (orient(pos[p], pos[q], pos[z]) == 0 && on_segment(pos[p], pos[q], pos[z]))
                throw InvalidGraphError("vertex " + std::to_string(z) + " lies on edge " +
                                        std::to_string(p) + "-" + std::to_string(q));
        }
}

// Proper pairwise crossings of the straight-line drawing.  Touching contacts,
// overlaps and coincident crossing points are all rejected as ties.
std::vector<RawCrossing> detect_crossings(const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<Pt>& pos) {
    std::vector<RawCrossing> found;
    std::vector<CrossPoint> points;
    int m = static_cast<int>(edges.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            Pt p = pos[a], q = pos[b], r = pos[c], s = pos[d];
            if (a == c || a == d || b == c || b == d) {
                // shared endpoint: only collinear overlap is a problem
                int z = (a == c || a == d) ? a : b;
                int e1 = (z == a) ? b : a, e2 = (z == c) ? d : c;
                Pt d1 = sub(pos[e1], pos[z]), d2 = sub(pos[e2], pos[z]);
                if (cross_p(d1, d2) == 0 && dot_p(d1, d2) > 0)
                    throw InvalidGraphError("edges overlap at vertex " + std::to_string(z));
                continue;
            }
            int o1 = orient(p, q, r), o2 = orient(p, q, s);
            int o3 = orient(r, s, p), o4 = orient(r, s, q);
            auto touch = [&](int o, Pt u1, Pt u2, Pt w) { return o == 0 && on_segment(u1, u2, w); };
            if (touch(o1, p, q, r) || touch(o2, p, q, s) || touch(o3, r, s, p) ||
                touch(o4, r, s, q))
                throw InvalidGraphError("edges touch without properly crossing");
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                CrossPoint x = cross_point(p, q, r, s);
                for (const auto& other : points)
                    if (same_point(x, other))
                        throw InvalidGraphError("two crossings coincide at one point");
                points.push_back(x);
                found.push_back({edges[i], edges[j]});
            }
        }
    return found;
}

std::vector<std::vector<int>> rotations_from_positions(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<Pt>& pos) {
    std::vector<std::vector<std::pair<int, Pt>>> dirs(n);
    for (auto [a, b] : edges) {
        dirs[a].push_back({b, sub(pos[b], pos[a])});
        dirs[b].push_back({a, sub(pos[a], pos[b])});
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        rot[v] = cw_order(std::move(dirs[v]), "vertex " + std::to_string(v));
    return rot;
}

// Per-component Euler check; a rotation system passing it is a plane
// embedding of each component.
void check_component_euler(const PlaneGraph& g, const std::string& context) {
    int n = g.slot_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        if (!g.alive(v0) || comp[v0] >= 0) continue;
        comp[v0] = ncomp;
        std::deque<int> bfs{v0};
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u : g.rotation(v))
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    bfs.push_back(u);
                }
        }
        ++ncomp;
    }
    std::vector<int> V(ncomp, 0), E2(ncomp, 0), F(ncomp, 0);
    for (int v = 0; v < n; ++v)
        if (g.alive(v)) {
            ++V[comp[v]];
            E2[comp[v]] += g.degree(v);
        }
    FaceSet fs = g.faces();
    for (const auto& walk : fs.walks) ++F[comp[walk[0].first]];
    for (int c = 0; c < ncomp; ++c) {
        if (V[c] == 1) continue;  // isolated vertex bounds no face walk
        if (V[c] - E2[c] / 2 + F[c] != 2)
            throw InvalidGraphError(context + ": rotation system is not planar");
    }
}

bool cyclic_equal(const std::vector<int>& walk, const std::vector<int>& want) {
    int k = static_cast<int>(walk.size());
    if (k != static_cast<int>(want.size())) return false;
    for (int s = 0; s < k; ++s) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = walk[(s + i) % k] == want[i];
        if (ok) return true;
    }
    return false;
}

// Designates the outer face from an optional vertex-walk hint.  Without a
// hint the face at the smallest vertex's first slot is used.
void resolve_outer(PlaneGraph& g, const std::vector<int>& hint) {
    if (g.edge_count() == 0) {
        if (!hint.empty()) throw InvalidGraphError("outer hint given for an edgeless graph");
        return;
    }
    if (hint.empty()) {
        for (int v = 0; v < g.slot_count(); ++v)
            if (g.alive(v) && g.degree(v) > 0) {
                g.set_outer({v, g.rotation(v)[0]});
                return;
            }
        return;
    }
    if (hint.size() < 2) throw InvalidGraphError("outer hint needs at least two vertices");
    int a = hint[0], b = hint[1];
    if (!g.has_edge(a, b)) throw InvalidGraphError("outer hint is not a face boundary");
    if (cyclic_equal(g.face_vertices({a, b}), hint)) {
        g.set_outer({a, b});
        return;
    }
    std::vector<int> rev(hint.rbegin(), hint.rend());
    if (cyclic_equal(g.face_vertices({b, a}), rev)) {
        g.set_outer({b, a});
        return;
    }
    throw InvalidGraphError("outer hint does not bound a face");
}

std::vector<std::pair<int, int>> edge_diff(std::vector<std::pair<int, int>> after,
                                           std::vector<std::pair<int, int>> before) {
    std::sort(after.begin(), after.end());
    std::sort(before.begin(), before.end());
    std::vector<std::pair<int, int>> out;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(out));
    return out;
}

// Canonical labels for one crossing.  v is the removed edge's first listed
// endpoint; u is chosen so v, u, w, t run clockwise around the crossing
// exactly when want_cw is set.
Crossing make_labels(const PlaneGraph& planarized, int X, std::pair<int, int> ea,
                     std::pair<int, int> eb, bool want_cw) {
    int v = ea.first;
    int u = want_cw ? planarized.succ(X, v) : planarized.pred(X, v);
    int t = (u == eb.first) ? eb.second : eb.first;
    return Crossing{{v, ea.second}, {t, u}, want_cw};
}

// Rewires one planarized crossing into its cluster 4-cycle: the removed
// edge's slots become corridor slots for the cycle edges, the kept edge is
// smoothed straight through, and the dummy vertex disappears.  A cluster
// pair equal to the other crossing's kept edge is left entirely alone.
void cluster_surgery(PlaneGraph& P, int X, const Crossing& c,
                     std::optional<std::pair<int, int>> other_kept, const Graph& original,
                     std::vector<std::pair<int, int>>& added,
                     std::vector<std::pair<int, int>>& redrawn) {
    const int v = c.v(), w = c.w(), t = c.t(), u = c.u();
    const bool f = c.clockwise;
    auto skip = [&](int a, int b) {
        return other_kept && norm_pair(a, b) == norm_pair(*other_kept);
    };
    const std::array<std::pair<int, int>, 4> ring{{{v, u}, {u, w}, {w, t}, {t, v}}};
    for (auto [a, b] : ring) {
        if (skip(a, b)) continue;
        if (P.has_edge(a, b)) {
            P.remove_edge(a, b);
            if (original.has_edge(a, b)) redrawn.push_back(norm_pair(a, b));
        } else if (original.has_edge(a, b)) {
            redrawn.push_back(norm_pair(a, b));
        } else {
            added.push_back(norm_pair(a, b));
        }
    }
    auto corridor = [&](int end, int first, int second) {
        int i = P.rot_index(end, X);
        P.erase_neighbor(end, X);
        int at = i;
        if (!skip(end, first)) P.insert_neighbor_at(end, at++, first);
        if (!skip(end, second)) P.insert_neighbor_at(end, at, second);
    };
    if (f) {
        corridor(v, u, t);
        corridor(w, t, u);
    } else {
        corridor(v, t, u);
        corridor(w, u, t);
    }
    auto flank = [&](int end, int before_n, int after_n) {
        if (!skip(end, before_n)) P.insert_neighbor_before(end, X, before_n);
        if (!skip(end, after_n)) P.insert_neighbor_after(end, X, after_n);
    };
    if (f) {
        flank(u, w, v);
        flank(t, v, w);
    } else {
        flank(u, v, w);
        flank(t, w, v);
    }
    {
        int i = P.rot_index(t, X);
        P.erase_neighbor(t, X);
        P.insert_neighbor_at(t, i, u);
    }
    {
        int i = P.rot_index(u, X);
        P.erase_neighbor(u, X);
        P.insert_neighbor_at(u, i, t);
    }
    for (int z : {v, w, t, u}) P.erase_neighbor(X, z);
    P.remove_vertex(X);
}

void sort_unique(std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Graph TwoCrossingDrawing::full_graph() const {
    Graph g = skeleton.to_graph();
    for (const auto& c : crossings)
        if (!g.has_edge(c.v(), c.w())) g.add_edge(c.v(), c.w());
    if (extra_edge.first >= 0 && !g.has_edge(extra_edge.first, extra_edge.second))
        g.add_edge(extra_edge.first, extra_edge.second);
    return g;
}

RawDrawing TwoCrossingDrawing::as_raw() const {
    RawDrawing r;
    r.n = skeleton.slot_count();
    r.has_rotations = true;
    r.rotations.resize(r.n);
    for (int v = 0; v < r.n; ++v)
        if (skeleton.alive(v)) r.rotations[v] = skeleton.rotation(v);
    r.edges = skeleton.edges();
    if (mode == DrawingMode::PlusEdge) {
        auto [a, b] = extra_edge;
        r.edges.push_back({a, b});
        r.rotations[a].insert(r.rotations[a].begin(), b);
        r.rotations[b].insert(r.rotations[b].begin(), a);
        // any skeleton edge serves as the recorded crossing partner
        r.crossings.push_back({extra_edge, skeleton.edges().front()});
        r.has_crossings = true;
    }
    for (const auto& c : crossings) {
        r.edges.push_back({c.v(), c.w()});
        auto reinsert = [&](int end, int far, int first, int second) {
            auto& rot = r.rotations[end];
            auto it = std::find(rot.begin(), rot.end(), first);
            if (it == rot.end()) it = std::find(rot.begin(), rot.end(), second);
            if (it == rot.end())
                rot.push_back(far);
            else
                rot.insert(it + 1, far);
        };
        if (c.clockwise) {
            reinsert(c.v(), c.w(), c.u(), c.t());
            reinsert(c.w(), c.v(), c.t(), c.u());
        } else {
            reinsert(c.v(), c.w(), c.t(), c.u());
            reinsert(c.w(), c.v(), c.u(), c.t());
        }
        r.crossings.push_back({{c.v(), c.w()}, {c.t(), c.u()}});
        r.has_crossings = true;
    }
    if (skeleton.outer_set()) r.outer_hint = skeleton.outer_walk();
    return r;
}

TwoCrossingDrawing normalize(const RawDrawing& raw) {
    const int n = raw.n;
    if (n < 1) throw BadInputError("drawing has no vertices");

    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : raw.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw BadInputError("edge endpoint out of range");
        if (a == b) throw BadInputError("self loop rejected");
        if (!edge_set.insert(norm_pair(a, b)).second)
            throw BadInputError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    Graph original(n);
    for (auto [a, b] : raw.edges) original.add_edge(a, b);

    const bool has_rot = raw.has_rotations && !raw.rotations.empty();
    const bool has_pos = raw.has_positions && !raw.positions.empty();
    if (!has_rot && !has_pos)
        throw BadInputError("drawing needs rotations or coordinates");

    std::vector<Pt> pos;
    if (has_pos) {
        if (static_cast<int>(raw.positions.size()) != n)
            throw BadInputError("positions must cover every vertex");
        for (auto [x, y] : raw.positions) pos.push_back({x, y});
        check_positions(n, raw.edges, pos);
    }

    std::vector<std::vector<int>> rot0;
    if (has_rot) {
        if (static_cast<int>(raw.rotations.size()) != n)
            throw BadInputError("rotations must cover every vertex");
        rot0 = raw.rotations;
        for (int v = 0; v < n; ++v) {
            std::vector<int> got = rot0[v];
            std::sort(got.begin(), got.end());
            if (std::adjacent_find(got.begin(), got.end()) != got.end())
                throw BadInputError("rotation of " + std::to_string(v) + " repeats a neighbor");
            std::vector<int> want = original.neighbors(v);
            if (got != want)
                throw BadInputError("rotation of " + std::to_string(v) +
                                    " does not list exactly its neighbors");
        }
    } else {
        rot0 = rotations_from_positions(n, raw.edges, pos);
    }

    std::vector<RawCrossing> crossings;
    if (raw.has_crossings || !raw.crossings.empty()) {
        for (const auto& c : raw.crossings) {
            for (auto e : {c.edge_a, c.edge_b})
                if (!original.has_edge(e.first, e.second))
                    throw BadInputError("crossing names a missing edge " +
                                        std::to_string(e.first) + "-" + std::to_string(e.second));
            if (norm_pair(c.edge_a) == norm_pair(c.edge_b))
                throw BadInputError("a crossing needs two distinct edges");
            for (const auto& prev : crossings) {
                bool same = (norm_pair(prev.edge_a) == norm_pair(c.edge_a) &&
                             norm_pair(prev.edge_b) == norm_pair(c.edge_b)) ||
                            (norm_pair(prev.edge_a) == norm_pair(c.edge_b) &&
                             norm_pair(prev.edge_b) == norm_pair(c.edge_a));
                if (same) throw BadInputError("the same pair of edges crosses twice");
            }
            crossings.push_back(c);
        }
    } else if (has_pos) {
        crossings = detect_crossings(raw.edges, pos);
    }

    if (crossings.size() > 2)
        throw InvalidGraphError("drawing has " + std::to_string(crossings.size()) +
                                " crossings; at most two are supported");

    TwoCrossingDrawing d;
    d.original = original;

    auto clean_pair = [&]() {
        if (crossings.size() != 2) return false;
        for (const auto& c : crossings) {
            std::set<int> vs{c.edge_a.first, c.edge_a.second, c.edge_b.first, c.edge_b.second};
            if (vs.size() != 4) return false;
        }
        std::set<std::pair<int, int>> e0{norm_pair(crossings[0].edge_a),
                                         norm_pair(crossings[0].edge_b)};
        return !e0.count(norm_pair(crossings[1].edge_a)) &&
               !e0.count(norm_pair(crossings[1].edge_b));
    };

    if (crossings.empty()) {
        d.mode = DrawingMode::Planar;
        d.skeleton = PlaneGraph::from_rotations(rot0);
        check_component_euler(d.skeleton, "drawing");
        resolve_outer(d.skeleton, raw.outer_hint);
        auto before = d.skeleton.edges();
        if (d.skeleton.outer_set()) d.skeleton.triangulate_inner();
        d.added_edges = edge_diff(d.skeleton.edges(), before);
    } else if (!clean_pair()) {
        // one crossing, or crossing patterns a single removed edge resolves
        std::optional<std::pair<int, int>> killer;
        for (auto e : {crossings[0].edge_a, crossings[0].edge_b}) {
            bool in_all = true;
            for (const auto& c : crossings)
                in_all = in_all && (norm_pair(e) == norm_pair(c.edge_a) ||
                                    norm_pair(e) == norm_pair(c.edge_b));
            if (in_all) {
                killer = norm_pair(e);
                break;
            }
        }
        if (!killer)
            throw InvalidGraphError("crossing pattern is outside the supported forms");
        auto rot = rot0;
        auto& ra = rot[killer->first];
        auto& rb = rot[killer->second];
        ra.erase(std::find(ra.begin(), ra.end(), killer->second));
        rb.erase(std::find(rb.begin(), rb.end(), killer->first));
        d.mode = DrawingMode::PlusEdge;
        d.extra_edge = *killer;
        d.skeleton = PlaneGraph::from_rotations(rot);
        check_component_euler(d.skeleton, "drawing minus the crossed edge");
        resolve_outer(d.skeleton, raw.outer_hint);
        auto before = d.skeleton.edges();
        if (d.skeleton.outer_set()) d.skeleton.triangulate_inner({*killer});
        d.added_edges = edge_diff(d.skeleton.edges(), before);
    } else {
        d.mode = DrawingMode::TwoCross;
        // planarize both crossings through dummy vertices
        std::vector<std::vector<int>> base = rot0;
        base.resize(n + 2);
        for (int j = 0; j < 2; ++j) {
            int X = n + j;
            for (auto [a, b] : {crossings[j].edge_a, crossings[j].edge_b}) {
                auto& rota = base[a];
                auto& rotb = base[b];
                *std::find(rota.begin(), rota.end(), b) = X;
                *std::find(rotb.begin(), rotb.end(), a) = X;
            }
        }
        std::vector<std::vector<std::vector<int>>> orders(2);
        if (!has_rot) {
            for (int j = 0; j < 2; ++j) {
                auto [a, b] = crossings[j].edge_a;
                auto [c, cc] = crossings[j].edge_b;
                std::vector<std::pair<int, Pt>> dirs{{a, sub(pos[a], pos[b])},
                                                     {b, sub(pos[b], pos[a])},
                                                     {c, sub(pos[c], pos[cc])},
                                                     {cc, sub(pos[cc], pos[c])}};
                orders[j] = {cw_order(std::move(dirs), "a crossing point")};
            }
        } else {
            for (int j = 0; j < 2; ++j) {
                auto [a, b] = crossings[j].edge_a;
                auto [c, cc] = crossings[j].edge_b;
                orders[j] = {{a, c, b, cc}, {a, cc, b, c}};
            }
        }
        std::optional<PlaneGraph> planarized;
        for (const auto& o0 : orders[0]) {
            for (const auto& o1 : orders[1]) {
                auto cand = base;
                cand[n] = o0;
                cand[n + 1] = o1;
                try {
                    PlaneGraph P = PlaneGraph::from_rotations(cand);
                    P.validate(true);
                    planarized = std::move(P);
                } catch (const InvalidGraphError&) {
                }
                if (planarized) break;
            }
            if (planarized) break;
        }
        if (!planarized)
            throw InvalidGraphError(
                "crossing data is inconsistent with a connected planar drawing");
        PlaneGraph& P = *planarized;

        Crossing c0 = make_labels(P, n, crossings[0].edge_a, crossings[0].edge_b, false);
        Crossing c1 = make_labels(P, n + 1, crossings[1].edge_a, crossings[1].edge_b, true);
        {
            std::set<int> s0{c0.v(), c0.u(), c0.w(), c0.t()};
            int shared = 0;
            for (int z : {c1.v(), c1.u(), c1.w(), c1.t()}) shared += s0.count(z);
            d.degenerate = shared >= 2;
        }
        cluster_surgery(P, n, c0, std::make_pair(c1.t(), c1.u()), original, d.added_edges,
                        d.redrawn_edges);
        cluster_surgery(P, n + 1, c1, std::make_pair(c0.t(), c0.u()), original, d.added_edges,
                        d.redrawn_edges);

        std::vector<std::vector<int>> final_rot(n);
        for (int v = 0; v < n; ++v) final_rot[v] = P.rotation(v);
        d.skeleton = PlaneGraph::from_rotations(final_rot);
        d.crossings = {c0, c1};
        resolve_outer(d.skeleton, raw.outer_hint);
        auto before = d.skeleton.edges();
        d.skeleton.triangulate_all({norm_pair(c0.edge_a), norm_pair(c1.edge_a)});
        auto fill = edge_diff(d.skeleton.edges(), before);
        d.added_edges.insert(d.added_edges.end(), fill.begin(), fill.end());
        d.skeleton.validate(true);
    }

    sort_unique(d.added_edges);
    sort_unique(d.redrawn_edges);
    validate_drawing(d);
    return d;
}

void validate_drawing(const TwoCrossingDrawing& d) {
    const PlaneGraph& g = d.skeleton;
    for (auto [a, b] : d.added_edges)
        if (d.original.has_edge(a, b))
            throw InvalidGraphError("added edge duplicates an original edge");
    for (auto [a, b] : d.redrawn_edges)
        if (!d.original.has_edge(a, b))
            throw InvalidGraphError("redrawn edge is not an original edge");
    Graph full = d.full_graph();
    for (auto [a, b] : d.original.edges())
        if (!full.has_edge(a, b))
            throw InvalidGraphError("an original edge was lost by normalization");

    switch (d.mode) {
        case DrawingMode::Planar:
            if (!d.crossings.empty() || d.extra_edge.first >= 0)
                throw InvalidGraphError("planar drawing carries crossing residue");
            g.validate(false);
            check_component_euler(g, "skeleton");
            break;
        case DrawingMode::PlusEdge: {
            if (!d.crossings.empty())
                throw InvalidGraphError("plus-edge drawing still lists crossings");
            auto [a, b] = d.extra_edge;
            if (!g.alive(a) || !g.alive(b) || a == b)
                throw InvalidGraphError("extra edge endpoints invalid");
            if (g.has_edge(a, b))
                throw InvalidGraphError("extra edge still embedded in the skeleton");
            if (!d.original.has_edge(a, b))
                throw InvalidGraphError("extra edge is not an original edge");
            g.validate(false);
            check_component_euler(g, "skeleton");
            break;
        }
        case DrawingMode::TwoCross: {
            if (d.crossings.size() != 2)
                throw InvalidGraphError("two-crossing drawing needs exactly two crossings");
            if (d.crossings[0].clockwise || !d.crossings[1].clockwise)
                throw InvalidGraphError("crossing orientation convention violated");
            g.validate(true);
            if (!g.outer_set()) throw InvalidGraphError("outer face not designated");
            if (!g.all_faces_triangulated())
                throw InvalidGraphError("skeleton is not fully triangulated");
            std::set<std::pair<int, int>> kept;
            for (const auto& c : d.crossings) {
                std::set<int> vs{c.v(), c.u(), c.w(), c.t()};
                if (vs.size() != 4)
                    throw InvalidGraphError("crossing endpoints not distinct");
                if (!kept.insert(norm_pair(c.edge_b)).second ||
                    !kept.insert(norm_pair(c.edge_a)).second)
                    throw InvalidGraphError("crossings share an edge");
                if (!g.has_edge(c.t(), c.u()))
                    throw InvalidGraphError("kept crossed edge missing from the skeleton");
                const std::array<std::pair<int, int>, 4> ring{
                    {{c.v(), c.u()}, {c.u(), c.w()}, {c.w(), c.t()}, {c.t(), c.v()}}};
                for (auto [a, b] : ring)
                    if (!g.has_edge(a, b))
                        throw InvalidGraphError("cluster 4-cycle edge missing");
                if (!d.degenerate) {
                    if (g.has_edge(c.v(), c.w()))
                        throw InvalidGraphError("removed crossed edge still embedded");
                    auto side = [&](int x, int y) {
                        auto fv = g.face_vertices({x, y});
                        if (fv.size() != 3)
                            throw InvalidGraphError("kept edge face is not a triangle");
                        for (int z : fv)
                            if (z != x && z != y) return z;
                        throw InvalidGraphError("kept edge face malformed");
                    };
                    int s1 = side(c.t(), c.u()), s2 = side(c.u(), c.t());
                    if (std::set<int>{s1, s2} != std::set<int>{c.v(), c.w()})
                        throw InvalidGraphError(
                            "crossing region faces do not flank the kept edge");
                }
            }
            break;
        }
    }
}

std::vector<PlaneGraph> planarize_minus_path(const TwoCrossingDrawing& d,
                                             const std::vector<int>& q) {
    if (q.empty()) throw BadInputError("path is empty");
    const PlaneGraph& g = d.skeleton;
    std::vector<char> in_q(g.slot_count(), 0);
    for (int v : q) {
        if (!g.alive(v)) throw BadInputError("path vertex out of range");
        if (in_q[v]) throw BadInputError("path repeats a vertex");
        in_q[v] = 1;
    }
    auto hits = [&](std::pair<int, int> e) { return in_q[e.first] || in_q[e.second]; };
    for (const auto& c : d.crossings)
        if (!hits(c.edge_a) || !hits(c.edge_b))
            throw BadInputError("path must contain an endpoint of every crossed edge");
    if (d.mode == DrawingMode::PlusEdge && !hits(d.extra_edge))
        throw BadInputError("path must contain an endpoint of the extra edge");
    {
        std::vector<char> seen(g.slot_count(), 0);
        std::deque<int> bfs{q[0]};
        seen[q[0]] = 1;
        int cnt = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            ++cnt;
            for (int u : g.rotation(v))
                if (in_q[u] && !seen[u]) {
                    seen[u] = 1;
                    bfs.push_back(u);
                }
        }
        if (cnt != static_cast<int>(q.size()))
            throw BadInputError("path is not connected in the planar skeleton");
    }
    if (static_cast<int>(q.size()) == g.alive_count()) return {};
    auto comps = g.remove_vertices_with_hole(q);
    std::vector<PlaneGraph> out;
    for (auto& hc : comps) {
        if (hc.hole_half.first >= 0)
            hc.graph.set_outer(hc.hole_half);
        else
            hc.graph.clear_outer();
        out.push_back(std::move(hc.graph));
    }
    return out;
}

}  // namespace crosscolor
