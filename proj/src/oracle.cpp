#include "crosscolor/oracle.hpp"

#include <algorithm>
#include <map>

namespace crosscolor {

namespace {

struct Searcher {
    const Graph& g;
    const ListAssignment& lists;
    long long budget;
    long long nodes = 0;

    std::vector<int> order;        // alive vertices
    Coloring phi;
    std::vector<int> color_class;  // color -> equivalence class id
    std::vector<int> use_count;    // color -> #vertices currently colored with it
    int max_color = -1;

    Searcher(const Graph& g_, const ListAssignment& lists_, long long budget_)
        : g(g_), lists(lists_), budget(budget_) {
        order = g.vertices();
        phi.assign(g.slot_count(), kUncolored);
        for (int v : order)
            for (int c : lists[v]) max_color = std::max(max_color, c);
        color_class.assign(max_color + 1, 0);
        use_count.assign(max_color + 1, 0);
        // Two colors are interchangeable when they appear in exactly the same
        // lists; among unused interchangeable colors only the smallest needs
        // to be tried.
        std::map<std::vector<char>, int> classes;
        for (int c = 0; c <= max_color; ++c) {
            std::vector<char> member(order.size(), 0);
            for (size_t i = 0; i < order.size(); ++i)
                member[i] = list_contains(lists[order[i]], c) ? 1 : 0;
            auto [it, inserted] = classes.emplace(std::move(member), (int)classes.size());
            color_class[c] = it->second;
        }
    }

    // Smallest-residual-first vertex selection.
    int pick_vertex() const {
        int best = -1, best_size = INT32_MAX;
        for (int v : order) {
            if (phi[v] != kUncolored) continue;
            int avail = 0;
            for (int c : lists[v])
                if (feasible(v, c)) ++avail;
            if (avail < best_size) {
                best_size = avail;
                best = v;
            }
        }
        return best;
    }

    bool feasible(int v, int c) const {
        for (int u : g.neighbors(v))
            if (phi[u] == c) return false;
        return true;
    }

    bool redundant(int c) const {
        if (use_count[c] != 0) return false;
        for (int c2 = 0; c2 < c; ++c2)
            if (use_count[c2] == 0 && color_class[c2] == color_class[c]) return true;
        return false;
    }

    bool solve(int remaining) {
        if (remaining == 0) return true;
        if (++nodes > budget) throw InternalError("oracle node budget exhausted");
        int v = pick_vertex();
        for (int c : lists[v]) {
            if (!feasible(v, c) || redundant(c)) continue;
            phi[v] = c;
            ++use_count[c];
            if (solve(remaining - 1)) return true;
            --use_count[c];
            phi[v] = kUncolored;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> oracle_color(const Graph& g, const ListAssignment& lists,
                                     const OracleOptions& opts) {
    if (static_cast<int>(lists.size()) < g.slot_count())
        throw InvalidListsError("list assignment shorter than vertex id space");
    for (int v : g.vertices())
        if (lists[v].empty()) return std::nullopt;
    Searcher s(g, lists, opts.node_budget);
    if (s.solve(static_cast<int>(s.order.size()))) return s.phi;
    return std::nullopt;
}

bool oracle_colorable(const Graph& g, const ListAssignment& lists, const OracleOptions& opts) {
    return oracle_color(g, lists, opts).has_value();
}

namespace {

struct ChoosSearcher {
    const Graph& g;
    int k;
    const OracleOptions& opts;
    std::vector<int> verts;
    ListAssignment lists;
    ChoosabilityResult result;

    ChoosSearcher(const Graph& g_, int k_, const OracleOptions& o)
        : g(g_), k(k_), opts(o), verts(g_.vertices()) {
        lists.assign(g.slot_count(), {});
    }

    // Enumerate lists vertex by vertex.  A list mixes colors already in use
    // with fresh ones; fresh colors are forced to be the next consecutive
    // integers, which canonicalizes up to renaming of first appearance.
    bool descend(size_t idx, int used) {
        if (idx == verts.size()) {
            ++result.assignments_checked;
            if (!oracle_colorable(g, lists, opts)) {
                result.choosable = false;
                result.bad_lists = lists;
                return false;  // stop search, witness found
            }
            return true;
        }
        int v = verts[idx];
        // choose r = number of fresh colors, and a (k-r)-subset of the used ones
        for (int fresh = k; fresh >= 0; --fresh) {
            int reuse = k - fresh;
            if (reuse > used) continue;
            std::vector<int> pick(reuse);
            if (!choose_reused(idx, v, used, fresh, pick, 0, 0)) return false;
        }
        return true;
    }

    bool choose_reused(size_t idx, int v, int used, int fresh, std::vector<int>& pick,
                       int start, int depth) {
        if (depth == static_cast<int>(pick.size())) {
            ColorList l = pick;
            for (int f = 0; f < fresh; ++f) l.push_back(used + f);
            std::sort(l.begin(), l.end());
            lists[v] = std::move(l);
            bool cont = descend(idx + 1, used + fresh);
            lists[v].clear();
            return cont;
        }
        for (int c = start; c < used; ++c) {
            pick[depth] = c;
            if (!choose_reused(idx, v, used, fresh, pick, c + 1, depth + 1)) return false;
        }
        return true;
    }
};

}  // namespace

ChoosabilityResult oracle_choosable(const Graph& g, int k, const OracleOptions& opts) {
    if (k <= 0) throw BadInputError("choosability needs k >= 1");
    ChoosSearcher s(g, k, opts);
    s.descend(0, 0);
    return s.result;
}

}  // namespace crosscolor
