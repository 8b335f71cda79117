#include "crosscolor/lists.hpp"

#include <algorithm>

namespace crosscolor {

void normalize_lists(ListAssignment& lists) {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

bool list_contains(const ColorList& list, int color) {
    return std::binary_search(list.begin(), list.end(), color);
}

ColorList list_minus(const ColorList& a, const ColorList& b) {
    ColorList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColorList list_minus(const ColorList& a, int color) {
    ColorList out;
    out.reserve(a.size());
    for (int c : a)
        if (c != color) out.push_back(c);
    return out;
}

ColorList list_intersect(const ColorList& a, const ColorList& b) {
    ColorList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColorList list_union(const ColorList& a, const ColorList& b) {
    ColorList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int smallest_avoiding(const ColorList& list, const ColorList& avoid,
                      const std::string& required) {
    for (int c : list)
        if (!std::binary_search(avoid.begin(), avoid.end(), c)) return c;
    throw InvalidListsError("no admissible color for " + required);
}

bool proper(const Graph& g, const Coloring& phi) {
    for (auto [u, v] : g.edges())
        if (phi[u] != kUncolored && phi[u] == phi[v]) return false;
    return true;
}

bool respects_lists(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
    for (int v : g.vertices())
        if (phi[v] != kUncolored && !list_contains(lists[v], phi[v])) return false;
    return true;
}

bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                     bool throwing) {
    for (int v : g.vertices()) {
        if (phi[v] == kUncolored) {
            if (throwing)
                throw InvalidListsError("vertex " + std::to_string(v) + " left uncolored");
            return false;
        }
        if (!list_contains(lists[v], phi[v])) {
            if (throwing)
                throw InvalidListsError("vertex " + std::to_string(v) +
                                        " colored outside its list");
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (phi[u] == phi[v]) {
            if (throwing)
                throw InvalidGraphError("edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " monochromatic");
            return false;
        }
    }
    return true;
}

ColorList residual_list(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                        int v) {
    ColorList used;
    for (int u : g.neighbors(v))
        if (phi[u] != kUncolored) used.push_back(phi[u]);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return list_minus(lists[v], used);
}

std::vector<int> heavy_outside(const Graph& g, const std::vector<int>& h) {
    std::vector<char> in_h(g.slot_count(), 0);
    for (int v : h) in_h[v] = 1;
    std::vector<int> out;
    for (int z : g.vertices()) {
        if (in_h[z]) continue;
        int d = 0;
        for (int v : h)
            if (g.has_edge(z, v)) ++d;
        if (d >= 3) out.push_back(z);
    }
    return out;
}

int safety_violation(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                     const std::vector<int>& h) {
    for (int z : heavy_outside(g, h)) {
        ColorList used;
        for (int v : h)
            if (g.has_edge(z, v) && phi[v] != kUncolored) used.push_back(phi[v]);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        if (static_cast<int>(list_minus(lists[z], used).size()) < 3) return z;
    }
    return -1;
}

bool is_safe(const Graph& g, const ListAssignment& lists, const Coloring& phi,
             const std::vector<int>& h) {
    return safety_violation(g, lists, phi, h) == -1;
}

bool is_alpha_safe(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                   const std::vector<int>& path, int alpha) {
    if (path.empty() || phi[path.front()] != alpha) return false;
    return is_safe(g, lists, phi, path);
}

}  // namespace crosscolor
