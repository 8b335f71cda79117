// Plain undirected graph on a fixed id space with an alive mask.
//
// Vertex ids stay stable across vertex/edge deletions, which lets colorings
// computed on subgraphs be unioned without any relabeling bookkeeping.  Sizes
// in this library are small (tens of vertices), so the adjacency matrix
// representation is the simple and fast choice.

#pragma once

#include <algorithm>
#include <vector>

#include "crosscolor/errors.hpp"

namespace crosscolor {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), alive_(n, 1), adj_(n, std::vector<char>(n, 0)), degree_(n, 0) {}

    int slot_count() const { return n_; }  // size of the id space

    bool alive(int v) const { return v >= 0 && v < n_ && alive_[v]; }

    int alive_count() const {
        int c = 0;
        for (char a : alive_) c += a;
        return c;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

    bool has_edge(int u, int v) const {
        return u != v && alive(u) && alive(v) && adj_[u][v];
    }

    int degree(int v) const {
        check_vertex(v);
        return degree_[v];
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[v][u]) out.push_back(u);
        return out;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidGraphError("self loop rejected");
        if (adj_[u][v]) return;
        adj_[u][v] = adj_[v][u] = 1;
        ++degree_[u];
        ++degree_[v];
        ++edge_count_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        adj_[u][v] = adj_[v][u] = 0;
        --degree_[u];
        --degree_[v];
        --edge_count_;
    }

    void remove_vertex(int v) {
        check_vertex(v);
        for (int u = 0; u < n_; ++u)
            if (adj_[v][u]) remove_edge(v, u);
        alive_[v] = 0;
    }

    int edge_count() const { return edge_count_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u][v]) out.emplace_back(u, v);
        return out;
    }

    // Induced subgraph on `keep` (same id space; everything else removed).
    Graph induced(const std::vector<int>& keep) const {
        std::vector<char> mark(n_, 0);
        for (int v : keep) {
            check_vertex(v);
            mark[v] = 1;
        }
        Graph out(*this);
        for (int v = 0; v < n_; ++v)
            if (out.alive_[v] && !mark[v]) out.remove_vertex(v);
        return out;
    }

    // Number of neighbors of v inside `set` (vertices assumed alive).
    int degree_into(int v, const std::vector<int>& set) const {
        int c = 0;
        for (int u : set)
            if (has_edge(v, u)) ++c;
        return c;
    }

    bool connected() const {
        auto vs = vertices();
        if (vs.empty()) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{vs[0]};
        seen[vs[0]] = 1;
        int found = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++found;
            for (int u = 0; u < n_; ++u)
                if (adj_[v][u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        return found == static_cast<int>(vs.size());
    }

private:
    void check_vertex(int v) const {
        if (!alive(v)) throw InvalidGraphError("vertex " + std::to_string(v) + " not alive");
    }

    int n_ = 0;
    std::vector<char> alive_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> degree_;
    int edge_count_ = 0;
};

}  // namespace crosscolor
