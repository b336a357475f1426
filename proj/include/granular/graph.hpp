#pragma once

#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "granular/core.hpp"

namespace granular {

// Simple undirected graph with string labels. Vertex identity is the index;
// labels appear only at I/O boundaries.
struct graph {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> adj;

    int n() const { return static_cast<int>(labels.size()); }

    bool has_edge(vertex i, vertex j) const { return adj[i][j]; }

    void add_edge(vertex i, vertex j) {
        if (i == j) throw error("self-loop", "self-loop on vertex " + labels[i]);
        adj[i][j] = true;
        adj[j][i] = true;
    }

    int degree(vertex v) const {
        int d = 0;
        for (vertex w = 0; w < n(); ++w)
            if (adj[v][w]) ++d;
        return d;
    }

    vertex_subset neighbors(vertex v) const {
        vertex_subset out;
        for (vertex w = 0; w < n(); ++w)
            if (adj[v][w]) out.push_back(w);
        return out;
    }

    int edge_count() const {
        int m = 0;
        for (vertex i = 0; i < n(); ++i)
            for (vertex j = i + 1; j < n(); ++j)
                if (adj[i][j]) ++m;
        return m;
    }
};

inline graph make_graph(std::vector<std::string> labels) {
    graph g;
    g.adj.assign(labels.size(), std::vector<bool>(labels.size(), false));
    g.labels = std::move(labels);
    return g;
}

// Hop-count distance matrix. Construction rejects disconnected graphs, so
// off-diagonal entries are always >= 1.
struct distance_matrix {
    std::vector<std::vector<int>> d;

    int n() const { return static_cast<int>(d.size()); }
    int at(vertex i, vertex j) const { return d[i][j]; }

    int diameter() const {
        int m = 0;
        for (const auto& row : d)
            for (int v : row) m = std::max(m, v);
        return m;
    }
};

// One edge per line "LABEL LABEL"; '#' lines ignored; a lone token declares
// an isolated vertex. Vertices keep first-appearance order.
inline graph parse_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::map<std::string, vertex> index;
    std::vector<std::pair<vertex, vertex>> edges;

    auto intern = [&](const std::string& tok) -> vertex {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        vertex v = static_cast<vertex>(labels.size());
        labels.push_back(tok);
        index.emplace(tok, v);
        return v;
    };

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a) || a[0] == '#') continue;
        if (!(ls >> b)) {
            intern(a);  // isolated vertex declaration
            continue;
        }
        if (a == b) throw error("self-loop", "self-loop on " + a);
        const vertex u = intern(a);  // sequenced: keeps first-appearance order
        const vertex v = intern(b);
        edges.emplace_back(u, v);
    }
    if (labels.empty()) throw error("empty graph", "no vertices in edge list");

    graph g = make_graph(std::move(labels));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

enum class family { path, cycle, complete, complete_bipartite };

inline graph make_family(family f, const std::vector<int>& params) {
    auto numbered = [](const std::string& prefix, int count) {
        std::vector<std::string> out;
        for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
        return out;
    };
    switch (f) {
        case family::path: {
            int n = params.at(0);
            if (n < 1) throw error("bad family", "path needs n >= 1");
            graph g = make_graph(numbered("v", n));
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case family::cycle: {
            int n = params.at(0);
            if (n < 3) throw error("degenerate cycle", "cycle needs n >= 3");
            graph g = make_graph(numbered("v", n));
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case family::complete: {
            int n = params.at(0);
            if (n < 1) throw error("bad family", "complete needs n >= 1");
            graph g = make_graph(numbered("v", n));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case family::complete_bipartite: {
            int m = params.at(0), n = params.at(1);
            if (m < 1 || n < 1) throw error("bad family", "complete_bipartite needs m,n >= 1");
            auto labels = numbered("a", m);
            auto right = numbered("b", n);
            labels.insert(labels.end(), right.begin(), right.end());
            graph g = make_graph(std::move(labels));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
            return g;
        }
    }
    throw error("bad family", "unknown family");
}

// BFS-exact hop distances from every source. Throws "disconnected" if any
// pair is unreachable.
inline distance_matrix all_pairs_distances(const graph& g) {
    const int n = g.n();
    if (n == 0) throw error("empty graph", "cannot take distances of empty graph");
    distance_matrix dm;
    dm.d.assign(n, std::vector<int>(n, -1));
    for (vertex s = 0; s < n; ++s) {
        auto& dist = dm.d[s];
        dist[s] = 0;
        std::deque<vertex> queue{s};
        while (!queue.empty()) {
            vertex u = queue.front();
            queue.pop_front();
            for (vertex w = 0; w < n; ++w) {
                if (g.adj[u][w] && dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v : dist)
            if (v < 0) throw error("disconnected", "graph is not connected");
    }
    return dm;
}

inline int max_degree(const graph& g) {
    int d = 0;
    for (vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline int diameter(const distance_matrix& dm) { return dm.diameter(); }

// Brute-force automorphism group over all n! permutations, adjacency check.
// Only meant as a small-scale oracle; capped by default at n = 8.
inline std::vector<std::vector<vertex>> enumerate_automorphisms(const graph& g, int cap = 8) {
    const int n = g.n();
    if (n > cap) throw error("automorphism cap exceeded", "n = " + std::to_string(n) +
                                                              " exceeds cap " + std::to_string(cap));
    std::vector<vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<vertex>> out;
    do {
        bool ok = true;
        for (vertex i = 0; i < n && ok; ++i)
            for (vertex j = i + 1; j < n && ok; ++j)
                if (g.adj[i][j] != g.adj[perm[i]][perm[j]]) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;  // next_permutation yields lexicographic order
}

// Blocks of mutually distance-similar vertices: i ~ j iff d(i,w) = d(j,w)
// for every w outside {i,j}.
inline partition_t distance_similar_classes(const distance_matrix& dm) {
    const int n = dm.n();
    std::vector<int> cls(n, -1);
    std::vector<vertex_subset> blocks;
    for (vertex i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(blocks.size());
        blocks.push_back({i});
        for (vertex j = i + 1; j < n; ++j) {
            if (cls[j] >= 0) continue;
            bool similar = true;
            for (vertex w = 0; w < n && similar; ++w) {
                if (w == i || w == j) continue;
                if (dm.at(i, w) != dm.at(j, w)) similar = false;
            }
            if (similar) {
                cls[j] = cls[i];
                blocks[cls[i]].push_back(j);
            }
        }
    }
    return make_partition(std::move(blocks), n);
}

}  // namespace granular
