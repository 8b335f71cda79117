// Path classification and the safe-coloring procedures built on it.
//
// Terminology used below: a "window" is three consecutive path vertices; a
// vertex off the path crowding a window is a "helper" in the comments (it
// helps itself to path colors).  The coloring routines work case by case on
// how many helpers sit on the early windows; every branch either colors a
// prefix directly or delegates a suffix to the recursion.  Branches guard the
// facts they rely on and throw InternalCaseGap when one fails, so a logic gap
// surfaces as a diagnosable error instead of a bad coloring.
//
// All choices ("a color in S") take the smallest candidate, so outputs are
// deterministic and can be frozen in tests.

#include "crosscolor/path_engine.hpp"

#include <algorithm>
#include <string>

#include "crosscolor/errors.hpp"
#include "crosscolor/trace.hpp"

namespace crosscolor {

namespace {

void require_path_induced(const Graph& g, const std::vector<int>& path) {
    const int p = static_cast<int>(path.size());
    for (int i = 0; i < p; ++i) {
        if (!g.alive(path[i]))
            throw BadInputError("path vertex " + std::to_string(path[i]) + " not in graph");
        for (int j = i + 1; j < p; ++j) {
            if (path[i] == path[j]) throw BadInputError("path repeats a vertex");
            const bool adj = g.has_edge(path[i], path[j]);
            if (j == i + 1 && !adj)
                throw BadInputError("consecutive path vertices must be adjacent");
            if (j > i + 1 && adj) throw BadInputError("path has a chord; not induced");
        }
    }
}

// Vertices adjacent to all of path[i-1], path[i], path[i+1]; ascending ids.
std::vector<int> window_neighbors(const Graph& g, const std::vector<int>& path, int i) {
    std::vector<int> out;
    for (int v : g.vertices()) {
        if (v == path[i - 1] || v == path[i] || v == path[i + 1]) continue;
        if (g.has_edge(v, path[i - 1]) && g.has_edge(v, path[i]) && g.has_edge(v, path[i + 1]))
            out.push_back(v);
    }
    return out;
}

std::string vc_detail(int v, int c) {
    return "vertex=" + std::to_string(v) + " color=" + std::to_string(c);
}

void decide(Coloring& phi, const char* tag, int v, int c) {
    phi[v] = c;
    trace::emit(tag, vc_detail(v, c));
}

int first_or_gap(const ColorList& list, const char* tag, const char* what) {
    if (list.empty()) throw InternalCaseGap(tag, what);
    return list[0];
}

void require_equal_lists(const ColorList& a, const ColorList& b, const char* tag) {
    if (a != b) throw InternalCaseGap(tag, "expected identical five-color lists");
}

ColorList pair_list(int a, int b) {
    if (a == b) return {a};
    if (a > b) std::swap(a, b);
    return {a, b};
}

std::vector<int> tail_from(const std::vector<int>& q, int s) {
    return std::vector<int>(q.begin() + s, q.end());
}

// q[k], q[k-1], ..., q[0]
std::vector<int> reversed_prefix(const std::vector<int>& q, int k) {
    std::vector<int> out(q.begin(), q.begin() + k + 1);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

PathAnalysis analyze_impl(const Graph& g, const std::vector<int>& path, bool with_good) {
    require_path_induced(g, path);
    PathAnalysis a;
    a.path = path;
    const int p = static_cast<int>(path.size());

    std::vector<char> on(g.slot_count(), 0);
    for (int v : path) on[v] = 1;
    for (int v : g.vertices())
        if (!on[v] && g.degree_into(v, path) >= 3) a.z_set.push_back(v);

    a.window_adj.assign(p, {});
    for (int i = 1; i + 1 < p; ++i) a.window_adj[i] = window_neighbors(g, path, i);

    // nice (a): every crowded vertex covers exactly one window
    bool nice = true;
    for (int z : a.z_set) {
        std::vector<int> nz;
        for (int u : path)
            if (g.has_edge(z, u)) nz.push_back(u);
        bool is_window = false;
        if (nz.size() == 3)
            for (int i = 1; i + 1 < p && !is_window; ++i)
                if (nz[0] == path[i - 1] && nz[1] == path[i] && nz[2] == path[i + 1])
                    is_window = true;
        if (!is_window) {
            nice = false;
            break;
        }
    }

    // vertices on the two windows flanking window i
    auto flank = [&](int i) {
        std::vector<int> u;
        if (i - 1 >= 1) u = a.window_adj[i - 1];
        if (i + 2 < p) u = sorted_union(std::move(u), a.window_adj[i + 1]);
        return u;
    };

    // nice (b): windows hold at most two vertices, and a full window starves
    // its flanks
    for (int i = 1; nice && i + 1 < p; ++i) {
        if (a.window_adj[i].size() > 2) nice = false;
        else if (a.window_adj[i].size() == 2 && flank(i).size() > 1) nice = false;
    }
    a.nice = nice;

    // great (c): two full windows starve the region between them
    bool great = nice;
    for (int i = 1; great && i + 1 < p; ++i) {
        if (a.window_adj[i].size() != 2) continue;
        for (int j = i + 1; great && j + 1 < p; ++j) {
            if (a.window_adj[j].size() != 2) continue;
            std::vector<int> between;
            if (i + 2 < p) between = a.window_adj[i + 1];
            between = sorted_union(std::move(between), a.window_adj[j - 1]);
            if (between.size() > 1) great = false;
        }
    }
    a.great = great;

    a.good = great;
    if (with_good && !a.good && p >= 4) {
        for (int z : a.z_set) {
            if (!g.has_edge(z, path[0]) || !g.has_edge(z, path[3])) continue;
            std::vector<int> nz;
            bool inside = true;
            for (int u : path)
                if (g.has_edge(z, u)) nz.push_back(u);
            for (int u : nz)
                if (u != path[0] && u != path[1] && u != path[2] && u != path[3]) inside = false;
            if (!inside) continue;

            Graph cut = g;
            cut.remove_edge(z, path[0]);
            if (!analyze_impl(cut, path, false).great) continue;

            auto others = [&](int i) {
                int c = 0;
                for (int w : a.window_adj[i])
                    if (w != z) ++c;
                return c;
            };
            std::vector<int> nz_sorted = nz;
            std::sort(nz_sorted.begin(), nz_sorted.end());
            std::vector<int> skip2 = {path[0], path[2], path[3]};
            std::vector<int> skip3 = {path[0], path[1], path[3]};
            std::sort(skip2.begin(), skip2.end());
            std::sort(skip3.begin(), skip3.end());

            bool ok = true;
            if (others(1) >= 2 && !(nz_sorted == skip2 && a.window_adj[2].empty())) ok = false;
            if (ok && others(2) >= 2 && !(nz_sorted == skip3 && a.window_adj[1].empty())) ok = false;
            if (ok) {
                a.good = true;
                a.good_witness = {z, nz_sorted};
                break;
            }
        }
    }
    return a;
}

void trim_to_five(ListAssignment& lists, const std::vector<int>& vs) {
    for (int v : vs) {
        if (lists[v].size() < 5)
            throw InvalidListsError("vertex " + std::to_string(v) +
                                    " needs a list of at least five colors");
        lists[v].resize(5);
    }
}

// Final audit of a produced coloring: proper along the path, from-list, and
// every crowded vertex keeps three usable colors.  Failures are bugs.
void verify_path_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                          const std::vector<int>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (phi[v] == kUncolored) throw InternalError("path vertex left uncolored");
        if (!list_contains(lists[v], phi[v])) throw InternalError("path color off its list");
        if (i > 0 && phi[v] == phi[path[i - 1]])
            throw InternalError("adjacent path vertices share a color");
    }
    const int bad = safety_violation(g, lists, phi, path);
    if (bad != -1)
        throw InternalError("vertex " + std::to_string(bad) +
                            " lost too many colors to the path");
}

struct PathColorer {
    ListAssignment lt;  // trimmed working lists
    Coloring phi;

    // Safe coloring of the (great) path q starting with alpha on q[0].
    // seed_tag labels the q[0] assignment when no earlier step made it.
    void rec(const Graph& g, const std::vector<int>& q, int alpha, const char* seed_tag) {
        const int m = static_cast<int>(q.size());
        if (phi[q[0]] == kUncolored) decide(phi, seed_tag, q[0], alpha);
        else
            phi[q[0]] = alpha;
        if (m == 1) return;
        if (m == 2) {
            decide(phi, "L7-base", q[1],
                   smallest_avoiding(lt[q[1]], {alpha}, "second path vertex"));
            return;
        }
        const auto a1 = window_neighbors(g, q, 1);
        if (a1.empty()) {
            const int beta = smallest_avoiding(lt[q[1]], {alpha}, "second path vertex");
            decide(phi, "L7-1", q[1], beta);
            rec(g, tail_from(q, 1), beta, "L7-1");
        } else if (a1.size() == 1) {
            case_two(g, q, alpha, a1[0]);
        } else if (a1.size() == 2) {
            case_three(g, q, alpha, a1);
        } else {
            throw InternalCaseGap("L7", "first window crowded by three vertices");
        }
    }

    // One helper z on the first window.
    void case_two(const Graph& g, const std::vector<int>& q, int alpha, int z) {
        const int m = static_cast<int>(q.size());
        if (!list_contains(lt[z], alpha)) {
            // z keeps alpha whatever the path does; proceed as if unconstrained
            const int beta = smallest_avoiding(lt[q[1]], {alpha}, "second path vertex");
            decide(phi, "L7-2-clear", q[1], beta);
            rec(g, tail_from(q, 1), beta, "L7-2-clear");
            return;
        }
        const ColorList escape = list_minus(list_minus(lt[q[1]], lt[z]), alpha);
        if (!escape.empty()) {
            decide(phi, "L7-2-beta", q[1], escape[0]);
            rec(g, tail_from(q, 1), escape[0], "L7-2-beta");
            return;
        }
        require_equal_lists(lt[q[1]], lt[z], "L7-2");
        // With matching lists, give q2 either alpha again or a color foreign
        // to the shared list; either way z loses at most one fresh color on
        // q0..q2 no matter what q1 receives.
        int gamma;
        if (list_contains(lt[q[2]], alpha)) gamma = alpha;
        else
            gamma = first_or_gap(list_minus(lt[q[2]], lt[q[1]]), "L7-2",
                                 "no color of the third list escapes the shared list");
        const auto a2 = m >= 4 ? window_neighbors(g, q, 2) : std::vector<int>{};
        if (a2.empty()) {
            decide(phi, "L7-2.1", q[2], gamma);
            rec(g, tail_from(q, 2), gamma, "L7-2.1");
            decide(phi, "L7-2.1", q[1],
                   smallest_avoiding(lt[q[1]], pair_list(alpha, gamma), "second path vertex"));
            return;
        }
        if (a2.size() == 1) {
            const int t = a2[0];
            decide(phi, "L7-2.2", q[2], gamma);
            rec(g, tail_from(q, 2), gamma, "L7-2.2");
            const int c4 = phi[q[3]];
            if (!(list_contains(lt[t], gamma) && list_contains(lt[t], c4))) {
                decide(phi, "L7-2.2a", q[1],
                       smallest_avoiding(lt[q[1]], pair_list(alpha, gamma), "second path vertex"));
            } else {
                const ColorList esc = list_minus(list_minus(lt[q[1]], lt[t]), alpha);
                if (!esc.empty()) {
                    decide(phi, "L7-2.2b", q[1], esc[0]);
                } else {
                    // here L(t) must be the second list with alpha traded for gamma,
                    // which forces the fourth color back into the second list
                    if (!list_contains(lt[q[1]], c4) || c4 == alpha || c4 == gamma)
                        throw InternalCaseGap("L7-2.2",
                                              "fourth color unusable on the second vertex");
                    decide(phi, "L7-2.2c", q[1], c4);
                }
            }
            return;
        }
        if (a2.size() != 2) throw InternalCaseGap("L7-2", "second window crowded by three");
        // Two helpers on the second window; the third window must be clear.
        const int t1 = a2[0], t2 = a2[1];
        if (m >= 5 && !window_neighbors(g, q, 3).empty())
            throw InternalCaseGap("L7-2.3", "third window should be clear");
        const ColorList both =
            list_minus(list_intersect(lt[q[1]], lt[q[3]]), pair_list(alpha, gamma));
        if (!both.empty()) {
            decide(phi, "L7-2.3a", q[1], both[0]);
            decide(phi, "L7-2.3a", q[2], gamma);
            rec(g, tail_from(q, 3), both[0], "L7-2.3a");
            return;
        }
        if (!list_intersect(list_minus(lt[q[3]], gamma), list_minus(lt[q[1]], alpha)).empty())
            throw InternalCaseGap("L7-2.3", "residual lists of q2 and q4 should be disjoint");
        int beta = -1, delta = -1;
        for (int b : list_minus(lt[q[1]], pair_list(alpha, gamma))) {
            for (int d : list_minus(lt[q[3]], gamma)) {
                const bool bad1 = list_contains(lt[t1], b) && list_contains(lt[t1], gamma) &&
                                  list_contains(lt[t1], d);
                const bool bad2 = list_contains(lt[t2], b) && list_contains(lt[t2], gamma) &&
                                  list_contains(lt[t2], d);
                if (!bad1 && !bad2) {
                    beta = b;
                    delta = d;
                    break;
                }
            }
            if (beta != -1) break;
        }
        if (beta == -1)
            throw InternalCaseGap("L7-2.3", "no color pair spares both helpers");
        decide(phi, "L7-2.3b", q[1], beta);
        decide(phi, "L7-2.3b", q[2], gamma);
        rec(g, tail_from(q, 3), delta, "L7-2.3b");
    }

    // Colors q1 and q2 so that the path stays proper and the one helper on
    // the first window (if any still matters) keeps three colors.
    void start_triple(const std::vector<int>& q, int alpha, int z, const char* tag) {
        if (z < 0 || !list_contains(lt[z], alpha)) {
            const int b = smallest_avoiding(lt[q[1]], {alpha}, "second path vertex");
            decide(phi, tag, q[1], b);
            decide(phi, tag, q[2], smallest_avoiding(lt[q[2]], {b}, "third path vertex"));
            return;
        }
        const ColorList esc = list_minus(list_minus(lt[q[1]], lt[z]), alpha);
        if (!esc.empty()) {
            decide(phi, tag, q[1], esc[0]);
            decide(phi, tag, q[2],
                   smallest_avoiding(lt[q[2]], {esc[0]}, "third path vertex"));
            return;
        }
        require_equal_lists(lt[q[1]], lt[z], tag);
        int gamma;
        if (list_contains(lt[q[2]], alpha)) gamma = alpha;
        else
            gamma = first_or_gap(list_minus(lt[q[2]], lt[q[1]]), tag,
                                 "no color of the third list escapes the shared list");
        decide(phi, tag, q[2], gamma);
        decide(phi, tag, q[1],
               smallest_avoiding(lt[q[1]], pair_list(alpha, gamma), "second path vertex"));
    }

    // Windows 1 and 3 both doubly crowded (window 2 single in between): the
    // one crowding pattern the forward walk below cannot absorb, since its
    // one free vertex per step cannot spare two helpers at once.  Window 4 is
    // then provably clear, so the first five vertices are solved directly and
    // the rest is delegated.
    void head_five(const Graph& g, const std::vector<int>& q, int alpha,
                   const std::vector<int>& zz, int t, const std::vector<int>& ww) {
        const int m = static_cast<int>(q.size());
        if (m >= 6 && !window_neighbors(g, q, 4).empty())
            throw InternalCaseGap("L7-3e", "window 4 should be clear");
        auto hits = [&](int v, int a, int b, int c) {
            ColorList cs = pair_list(a, b);
            cs = list_union(cs, {c});
            int n = 0;
            for (int col : cs)
                if (list_contains(lt[v], col)) ++n;
            return n;
        };
        for (int c2 : list_minus(lt[q[1]], alpha)) {
            for (int c3 : list_minus(lt[q[2]], c2)) {
                if (hits(zz[0], alpha, c2, c3) > 2 || hits(zz[1], alpha, c2, c3) > 2) continue;
                for (int c4 : list_minus(lt[q[3]], c3)) {
                    if (hits(t, c2, c3, c4) > 2) continue;
                    for (int c5 : list_minus(lt[q[4]], c4)) {
                        if (hits(ww[0], c3, c4, c5) > 2 || hits(ww[1], c3, c4, c5) > 2)
                            continue;
                        decide(phi, "L7-3e", q[1], c2);
                        decide(phi, "L7-3e", q[2], c3);
                        decide(phi, "L7-3e", q[3], c4);
                        decide(phi, "L7-3e", q[4], c5);
                        rec(g, tail_from(q, 4), c5, "L7-3e");
                        return;
                    }
                }
            }
        }
        throw InternalCaseGap("L7-3e", "no safe coloring of the first five vertices");
    }

    // Two helpers z1, z2 on the first window.
    void case_three(const Graph& g, const std::vector<int>& q, int alpha,
                    const std::vector<int>& zz) {
        const int m = static_cast<int>(q.size());
        const int z1 = zz[0], z2 = zz[1];
        const auto w2 = m >= 4 ? window_neighbors(g, q, 2) : std::vector<int>{};
        const auto w3 = m >= 5 ? window_neighbors(g, q, 3) : std::vector<int>{};
        if (w2.size() == 1 && w3.size() == 2) {
            head_five(g, q, alpha, zz, w2[0], w3);
            return;
        }
        if (!list_contains(lt[z1], alpha)) {
            start_triple(q, alpha, z2, "L7-3a");
        } else if (!list_contains(lt[z2], alpha)) {
            start_triple(q, alpha, z1, "L7-3a");
        } else {
            const ColorList esc1 = list_minus(lt[q[1]], lt[z1]);
            const ColorList esc2 = list_minus(lt[q[1]], lt[z2]);
            if (!esc1.empty()) {
                decide(phi, "L7-3b", q[1], esc1[0]);
                extend_one(g, lt, reversed_prefix(q, 2), 0, z2, phi);
            } else if (!esc2.empty()) {
                decide(phi, "L7-3c", q[1], esc2[0]);
                extend_one(g, lt, reversed_prefix(q, 2), 0, z1, phi);
            } else {
                require_equal_lists(lt[z1], lt[q[1]], "L7-3");
                require_equal_lists(lt[z2], lt[q[1]], "L7-3");
                // identical lists: making one helper safe makes both safe
                start_triple(q, alpha, z1, "L7-3d");
            }
        }
        // Walk forward one window at a time until a clear window, keeping the
        // single helper of each window safe as its third vertex is colored.
        int jc = m - 1;
        for (int c = 2; c + 1 < m; ++c)
            if (window_neighbors(g, q, c).empty()) {
                jc = c;
                break;
            }
        for (int c = 2; c < jc; ++c) {
            const auto zs = window_neighbors(g, q, c);
            if (zs.size() != 1)
                throw InternalCaseGap("L7-3", "expected exactly one helper per window");
            extend_one(g, lt, reversed_prefix(q, c + 1), 0, zs[0], phi);
        }
        rec(g, tail_from(q, jc), phi[q[jc]], "L7-3");
    }

    // Runs the great-path procedure on q after double-checking greatness;
    // used on derived paths and modified graphs inside the good-path cases.
    void great_sub(const Graph& g, const std::vector<int>& q, int alpha, const char* tag) {
        if (!analyze_impl(g, q, false).great)
            throw InternalCaseGap(tag, "derived path is not great");
        rec(g, q, alpha, tag);
    }

    // Good-but-not-great path: the witness z shares its list with q0 or loses
    // a color outright; the cases follow the witness neighborhood shape.
    void good_run(const Graph& g, const PathAnalysis& a) {
        const auto& p = a.path;
        const int z = a.good_witness->first;
        const auto& nz = a.good_witness->second;

        const ColorList free1 = list_minus(lt[p[0]], lt[z]);
        if (!free1.empty()) {
            // z never sees this color; cut the z edge at p0 and color greatly
            Graph cut = g;
            cut.remove_edge(z, p[0]);
            trace::emit("L8-free1", vc_detail(p[0], free1[0]));
            great_sub(cut, p, free1[0], "L8-free1");
            return;
        }
        require_equal_lists(lt[p[0]], lt[z], "L8");

        std::vector<int> nz_all = {p[0], p[1], p[2], p[3]};
        std::vector<int> nz_no2 = {p[0], p[2], p[3]};
        std::vector<int> nz_no3 = {p[0], p[1], p[3]};
        std::sort(nz_all.begin(), nz_all.end());
        std::sort(nz_no2.begin(), nz_no2.end());
        std::sort(nz_no3.begin(), nz_no3.end());

        if (nz == nz_all) good_case1(g, a, z);
        else if (nz == nz_no2) good_case2(g, a, z);
        else if (nz == nz_no3) good_case3(g, a, z);
        else throw InternalCaseGap("L8", "witness neighborhood has an unexpected shape");
    }

    // z adjacent to the first four path vertices.
    void good_case1(const Graph& g, const PathAnalysis& a, int z) {
        const auto& p = a.path;
        const int np = static_cast<int>(p.size());
        // at most one other vertex zp on window 1, by goodness
        int zp = -1;
        for (int w : a.window_adj[1])
            if (w != z) {
                if (zp != -1) throw InternalCaseGap("L8-1", "two extra vertices on window 1");
                zp = w;
            }
        std::vector<int> others3;
        for (int w : a.window_adj[2])
            if (w != z) others3.push_back(w);

        if (others3.empty()) {
            // 1.1: z alone on window 2
            const ColorList align = list_intersect(lt[z], lt[p[2]]);
            if (!align.empty()) {
                const int alpha = align[0];
                decide(phi, "L8-1.1a", p[0], alpha);
                great_sub(g, tail_from(p, 2), alpha, "L8-1.1a");
                extend_one(g, lt, tail_from(p, 1), 0, z, phi);
                // q0 and q2 share alpha, so anything on window 1 is safe
                return;
            }
            const ColorList esc = list_minus(lt[p[1]], lt[z]);
            if (!esc.empty()) {
                decide(phi, "L8-1.1b", p[1], esc[0]);
                great_sub(g, tail_from(p, 1), esc[0], "L8-1.1b");
                if (zp != -1) extend_one(g, lt, p, 0, zp, phi);
                else
                    decide(phi, "L8-1.1b", p[0],
                           smallest_avoiding(lt[p[0]], {phi[p[1]]}, "first path vertex"));
                return;
            }
            require_equal_lists(lt[p[1]], lt[z], "L8-1.1");
            if (!list_intersect(lt[p[1]], lt[p[2]]).empty())
                throw InternalCaseGap("L8-1.1", "second and third lists should be disjoint");
            // pick colors for q1 and q2 leaving zp at most one hit
            int ca = -1, cb = -1;
            for (int x : lt[p[1]]) {
                for (int y : lt[p[2]]) {
                    if (zp == -1 ||
                        !(list_contains(lt[zp], x) && list_contains(lt[zp], y))) {
                        ca = x;
                        cb = y;
                        break;
                    }
                }
                if (ca != -1) break;
            }
            if (ca == -1) throw InternalCaseGap("L8-1.1", "no color pair spares the extra vertex");
            great_sub(g, tail_from(p, 2), cb, "L8-1.1c");
            decide(phi, "L8-1.1c", p[1], ca);
            if (list_contains(lt[z], phi[p[3]]) && phi[p[3]] != ca)
                decide(phi, "L8-1.1c", p[0], phi[p[3]]);
            else
                decide(phi, "L8-1.1c", p[0],
                       smallest_avoiding(lt[p[0]], {ca}, "first path vertex"));
            return;
        }

        if (others3.size() != 1) throw InternalCaseGap("L8-1.2", "two extra vertices on window 2");
        const int y = others3[0];
        const auto t4 = np >= 5 ? a.window_adj[3] : std::vector<int>{};

        if (!t4.empty()) {
            // 1.2a: someone on window 3, hence no zp
            if (t4.size() != 1 || zp != -1)
                throw InternalCaseGap("L8-1.2a", "window 3 occupant must be alone");
            const int t = t4[0];
            const ColorList esc2 = list_minus(lt[p[1]], lt[z]);
            if (!esc2.empty()) {
                great_sub(g, tail_from(p, 1), esc2[0], "L8-1.2a");
                if (list_contains(lt[z], phi[p[2]]))
                    decide(phi, "L8-1.2a", p[0], phi[p[2]]);
                else
                    decide(phi, "L8-1.2a", p[0],
                           smallest_avoiding(lt[p[0]], {phi[p[1]]}, "first path vertex"));
                return;
            }
            require_equal_lists(lt[p[1]], lt[z], "L8-1.2a");
            const ColorList align4 = list_intersect(lt[z], lt[p[3]]);
            if (!align4.empty()) {
                const int alpha = align4[0];
                decide(phi, "L8-1.2a", p[1], alpha);
                great_sub(g, tail_from(p, 3), alpha, "L8-1.2a");
                extend_one(g, lt, tail_from(p, 2), 0, t, phi);
                if (list_contains(lt[z], phi[p[2]]))
                    decide(phi, "L8-1.2a", p[0], phi[p[2]]);
                else
                    decide(phi, "L8-1.2a", p[0],
                           smallest_avoiding(lt[p[0]], {alpha}, "first path vertex"));
                return;
            }
            // q3's list misses all of L(z): cut the z edge at q3
            Graph cut = g;
            cut.remove_edge(z, p[3]);
            great_sub(cut, p, lt[p[0]][0], "L8-1.2a-cut");
            return;
        }

        // 1.2b: window 3 clear; color the first four, the rest extends
        const ColorList free4 = list_minus(lt[p[3]], lt[z]);
        if (!free4.empty()) {
            Graph cut = g;
            cut.remove_edge(z, p[3]);
            great_sub(cut, reversed_prefix(p, 3), free4[0], "L8-1.2b");
            great_sub(g, tail_from(p, 3), phi[p[3]], "L8-1.2b");
            return;
        }
        require_equal_lists(lt[p[3]], lt[z], "L8-1.2b");
        const ColorList hit2 = list_intersect(lt[p[1]], lt[z]);
        if (!hit2.empty()) {
            const int alpha = hit2[0];
            const ColorList esc3 = list_minus(lt[p[2]], lt[z]);
            if (!esc3.empty()) {
                decide(phi, "L8-1.2b-beta", p[1], alpha);
                decide(phi, "L8-1.2b-beta", p[2], esc3[0]);
                if (zp != -1) extend_one(g, lt, {p[0], p[1], p[2]}, 0, zp, phi);
                else
                    decide(phi, "L8-1.2b-beta", p[0],
                           smallest_avoiding(lt[p[0]], {alpha}, "first path vertex"));
            } else {
                require_equal_lists(lt[p[2]], lt[z], "L8-1.2b");
                const int c = smallest_avoiding(lt[z], {alpha}, "witness list");
                decide(phi, "L8-1.2b-twin", p[0], c);
                decide(phi, "L8-1.2b-twin", p[1], alpha);
                decide(phi, "L8-1.2b-twin", p[2], c);
            }
            great_sub(g, tail_from(p, 3), alpha, "L8-1.2b");
            return;
        }
        const ColorList hit3 = list_intersect(lt[p[2]], lt[z]);
        if (!hit3.empty()) {
            // mirror of the previous block: match q0 and q2 instead
            const int alpha = hit3[0];
            decide(phi, "L8-1.2b-mirror", p[0], alpha);
            decide(phi, "L8-1.2b-mirror", p[2], alpha);
            decide(phi, "L8-1.2b-mirror", p[1],
                   smallest_avoiding(lt[p[1]], {alpha}, "second path vertex"));
            extend_one(g, lt, {p[3], p[2], p[1]}, 0, y, phi);
            great_sub(g, tail_from(p, 3), phi[p[3]], "L8-1.2b");
            return;
        }
        // q1 and q2 both miss L(z) entirely: drop z and color the four greatly
        Graph drop = g;
        drop.remove_vertex(z);
        great_sub(drop, {p[0], p[1], p[2], p[3]}, lt[p[0]][0], "L8-1.2b-drop");
        great_sub(g, tail_from(p, 3), phi[p[3]], "L8-1.2b");
    }

    // z adjacent to q0, q2, q3.
    void good_case2(const Graph& g, const PathAnalysis& a, int z) {
        const auto& p = a.path;
        if (a.window_adj[1].empty()) {
            great_sub(g, tail_from(p, 1), lt[p[1]][0], "L8-2");
            if (list_contains(lt[z], phi[p[2]]))
                decide(phi, "L8-2", p[0], phi[p[2]]);
            else
                decide(phi, "L8-2", p[0],
                       smallest_avoiding(lt[p[0]], {phi[p[1]]}, "first path vertex"));
            return;
        }
        if (a.window_adj[2].size() > 1)
            throw InternalCaseGap("L8-2", "window 2 crowded beside the witness");
        const int u = a.window_adj[2].empty() ? -1 : a.window_adj[2][0];
        const ColorList align = list_intersect(lt[p[2]], lt[z]);
        if (align.empty()) {
            Graph cut = g;
            cut.remove_edge(z, p[0]);
            great_sub(cut, p, lt[p[0]][0], "L8-2-cut");
            return;
        }
        const int alpha = align[0];
        decide(phi, "L8-2-align", p[0], alpha);
        great_sub(g, tail_from(p, 2), alpha, "L8-2-align");
        if (u != -1) extend_one(g, lt, tail_from(p, 1), 0, u, phi);
        else
            decide(phi, "L8-2-align", p[1],
                   smallest_avoiding(lt[p[1]], {alpha}, "second path vertex"));
        // q0 and q2 share alpha, so anything on window 1 is safe
    }

    // z adjacent to q0, q1, q3.
    void good_case3(const Graph& g, const PathAnalysis& a, int z) {
        const auto& p = a.path;
        const int np = static_cast<int>(p.size());
        if (a.window_adj[1].empty()) {
            great_sub(g, tail_from(p, 1), lt[p[1]][0], "L8-3");
            if (list_contains(lt[z], phi[p[3]]) && phi[p[3]] != phi[p[1]])
                decide(phi, "L8-3", p[0], phi[p[3]]);
            else
                decide(phi, "L8-3", p[0],
                       smallest_avoiding(lt[p[0]], {phi[p[1]]}, "first path vertex"));
            return;
        }
        if (a.window_adj[1].size() != 1)
            throw InternalCaseGap("L8-3", "window 1 crowded beside the witness");
        const int u = a.window_adj[1][0];
        const ColorList esc2 = list_minus(lt[p[1]], lt[z]);
        if (!esc2.empty()) {
            great_sub(g, tail_from(p, 1), esc2[0], "L8-3-beta");
            extend_one(g, lt, p, 0, u, phi);
            return;
        }
        require_equal_lists(lt[p[1]], lt[z], "L8-3");
        const ColorList hit4 = list_intersect(lt[p[3]], lt[z]);
        if (hit4.empty()) {
            Graph drop = g;
            drop.remove_vertex(z);
            great_sub(drop, p, lt[p[0]][0], "L8-3-drop");
            return;
        }
        const int alpha = hit4[0];
        const auto s4 = np >= 5 ? a.window_adj[3] : std::vector<int>{};
        if (s4.size() <= 1) {
            decide(phi, "L8-3-one", p[1], alpha);
            great_sub(g, tail_from(p, 3), alpha, "L8-3-one");
            if (!s4.empty()) extend_one(g, lt, tail_from(p, 2), 0, s4[0], phi);
            else
                decide(phi, "L8-3-one", p[2],
                       smallest_avoiding(lt[p[2]], {alpha}, "third path vertex"));
            extend_one(g, lt, p, 0, u, phi);
            return;
        }
        if (s4.size() != 2) throw InternalCaseGap("L8-3", "window 3 crowded by three");
        const int s1 = s4[0], s2 = s4[1];
        if (!a.window_adj[2].empty()) {
            // helpers on windows 2 and 3 together force window 4 clear
            if (np >= 6 && !a.window_adj[4].empty())
                throw InternalCaseGap("L8-3-pair", "window 4 should be clear");
            decide(phi, "L8-3-pair", p[1], alpha);
            decide(phi, "L8-3-pair", p[3], alpha);
            // find a color one of s1, s2 misses: alpha first, then the rest
            // of q4's list
            int spare = -1, c5 = -1;
            ColorList cands = {alpha};
            for (int c : list_minus(lt[p[4]], alpha)) cands.push_back(c);
            for (int c : cands) {
                for (int s : {s1, s2})
                    if (!list_contains(lt[s], c)) {
                        spare = s == s1 ? s2 : s1;  // the one still at risk
                        c5 = c == alpha
                                 ? smallest_avoiding(lt[p[4]], {alpha}, "fifth path vertex")
                                 : c;
                        break;
                    }
                if (spare != -1) break;
            }
            if (spare != -1) {
                decide(phi, "L8-3-pair", p[4], c5);
                extend_one(g, lt, {p[2], p[3], p[4]}, 0, spare, phi);
            } else {
                // both reach everything, so their lists equal q4's list
                require_equal_lists(lt[s1], lt[p[4]], "L8-3-pair");
                require_equal_lists(lt[s2], lt[p[4]], "L8-3-pair");
                decide(phi, "L8-3-pair", p[4],
                       smallest_avoiding(lt[p[4]], {alpha}, "fifth path vertex"));
                extend_one(g, lt, {p[2], p[3], p[4]}, 0, s1, phi);
            }
            extend_one(g, lt, {p[0], p[1], p[2]}, 0, u, phi);
            great_sub(g, tail_from(p, 4), phi[p[4]], "L8-3-pair");
            return;
        }
        // two helpers on window 3, none on window 2
        great_sub(g, tail_from(p, 2), lt[p[2]][0], "L8-3-two");
        if (!list_contains(lt[z], phi[p[3]]))
            decide(phi, "L8-3-two", p[1],
                   smallest_avoiding(lt[p[1]], {phi[p[2]]}, "second path vertex"));
        else
            decide(phi, "L8-3-two", p[1], phi[p[3]]);
        extend_one(g, lt, p, 0, u, phi);
    }
};

}  // namespace

PathAnalysis analyze_path(const Graph& g, const std::vector<int>& path) {
    return analyze_impl(g, path, true);
}

int extend_one(const Graph& g, const ListAssignment& lists, const std::vector<int>& path,
               int idx, int x, Coloring& phi) {
    require_path_induced(g, path);
    const int p = static_cast<int>(path.size());
    if (idx < 0 || idx + 2 >= p)
        throw BadInputError("extend_one needs two path successors after the target");
    if (!g.alive(x)) throw BadInputError("extend_one helper vertex not in graph");
    for (int j = 0; j < p; ++j) {
        const bool want = j >= idx && j <= idx + 2;
        if (g.has_edge(x, path[j]) != want)
            throw BadInputError("extend_one helper must see exactly the target window");
    }
    for (int j = 0; j < p; ++j) {
        if (j == idx) continue;
        if (phi[path[j]] == kUncolored)
            throw BadInputError("extend_one needs the rest of the path colored");
        if (j + 1 < p && j + 1 != idx && phi[path[j]] == phi[path[j + 1]])
            throw BadInputError("extend_one given an improper path coloring");
    }
    if (idx > 0 && phi[path[idx - 1]] != phi[path[idx + 1]])
        throw BadInputError("extend_one needs equal colors around the target");

    ColorList li = lists[path[idx]];
    ColorList lx = lists[x];
    std::sort(li.begin(), li.end());
    li.erase(std::unique(li.begin(), li.end()), li.end());
    std::sort(lx.begin(), lx.end());
    lx.erase(std::unique(lx.begin(), lx.end()), lx.end());
    if (li.size() < 5 || lx.size() < 5)
        throw InvalidListsError("extend_one needs five colors on target and helper");
    li.resize(5);
    lx.resize(5);

    const int c1 = phi[path[idx + 1]];
    const int c2 = phi[path[idx + 2]];
    int c;
    const char* tag;
    if (!(list_contains(lx, c1) && list_contains(lx, c2))) {
        c = smallest_avoiding(li, {c1}, "extension target");
        tag = "L6-miss";
    } else if (list_contains(li, c2)) {
        c = c2;
        tag = "L6-repeat";
    } else {
        const ColorList rest = list_minus(li, lx);
        c = first_or_gap(rest, "L6", "five-color lists must differ somewhere");
        tag = "L6-avoid";
    }
    ColorList used = pair_list(c1, c2);
    used = list_union(used, {c});
    if (list_minus(lx, used).size() < 3)
        throw InternalCaseGap("L6", "helper vertex lost too many colors");
    decide(phi, tag, path[idx], c);
    return c;
}

Coloring color_great(const Graph& g, const PathAnalysis& analysis, const ListAssignment& lists,
                     int alpha) {
    if (analysis.path.empty()) throw BadInputError("empty path");
    const PathAnalysis a = analyze_impl(g, analysis.path, false);
    if (!a.great) throw BadInputError("color_great needs a great path");
    if (static_cast<int>(lists.size()) < g.slot_count())
        throw InvalidListsError("list assignment smaller than the vertex space");
    ListAssignment norm = lists;
    normalize_lists(norm);
    if (!list_contains(norm[a.path[0]], alpha))
        throw InvalidListsError("start color missing from the first list");

    PathColorer pc;
    pc.lt = norm;
    trim_to_five(pc.lt, sorted_union(a.path, a.z_set));
    pc.phi.assign(g.slot_count(), kUncolored);
    pc.rec(g, a.path, alpha, "L7-start");
    verify_path_coloring(g, norm, pc.phi, a.path);
    if (pc.phi[a.path[0]] != alpha) throw InternalError("start color was not kept");
    return pc.phi;
}

Coloring color_good(const Graph& g, const PathAnalysis& analysis, const ListAssignment& lists) {
    if (analysis.path.empty()) throw BadInputError("empty path");
    const PathAnalysis a = analyze_impl(g, analysis.path, true);
    if (!a.good) throw BadInputError("color_good needs a good path");
    if (static_cast<int>(lists.size()) < g.slot_count())
        throw InvalidListsError("list assignment smaller than the vertex space");
    ListAssignment norm = lists;
    normalize_lists(norm);

    PathColorer pc;
    pc.lt = norm;
    trim_to_five(pc.lt, sorted_union(a.path, a.z_set));
    pc.phi.assign(g.slot_count(), kUncolored);
    if (a.great) {
        const int alpha = pc.lt[a.path[0]][0];
        pc.rec(g, a.path, alpha, "L8-great");
    } else {
        pc.good_run(g, a);
    }
    verify_path_coloring(g, norm, pc.phi, a.path);
    return pc.phi;
}

}  // namespace crosscolor
