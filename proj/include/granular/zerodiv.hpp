#pragma once

#include <bit>
#include <numeric>

#include "granular/table.hpp"

namespace granular {

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Structure of Gamma(Z_n): vertex ring elements in index order, the gcd
// classes B_d = {v : gcd(v, n) = d}, and their sizes phi(n/d).
struct zn_graph_meta {
    int n = 0;
    std::vector<int> vertices;               // ring element per graph index
    std::map<int, std::vector<int>> divisor_classes;  // d -> ring elements
    std::map<int, int> class_sizes;
    bool trivial = false;  // single-vertex case (n = 4)

    int ring_element(vertex v) const { return vertices[v]; }
    vertex index_of(int element) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), element);
        if (it == vertices.end() || *it != element)
            throw error("no zero-divisor graph", std::to_string(element) + " is not a vertex");
        return static_cast<vertex>(it - vertices.begin());
    }
};

// Gamma(Z_n): vertices are the zero-divisors {v in [2, n-2] : gcd(v,n) > 1},
// labeled by their decimal value; edge iff the product vanishes mod n.
inline std::pair<graph, zn_graph_meta> gamma_zn(int n) {
    zn_graph_meta meta;
    meta.n = n;
    for (int v = 2; v <= n - 2; ++v)
        if (std::gcd(v, n) > 1) meta.vertices.push_back(v);
    if (meta.vertices.empty())
        throw error("no zero-divisor graph",
                    "Z_" + std::to_string(n) + " has no zero-divisors");
    meta.trivial = meta.vertices.size() == 1;

    for (int v : meta.vertices) meta.divisor_classes[std::gcd(v, n)].push_back(v);
    for (const auto& [d, members] : meta.divisor_classes)
        meta.class_sizes[d] = static_cast<int>(members.size());

    std::vector<std::string> labels;
    for (int v : meta.vertices) labels.push_back(std::to_string(v));
    graph g = make_graph(std::move(labels));
    const int count = static_cast<int>(meta.vertices.size());
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (static_cast<long long>(meta.vertices[i]) * meta.vertices[j] % n == 0) g.add_edge(i, j);
    return {std::move(g), std::move(meta)};
}

// Layer structure of Gamma(prod Z_2^k): weight classes T_1..T_{k-1}.
struct boolean_ring_meta {
    int k = 0;
    std::vector<unsigned> vertices;          // bit vector per graph index
    std::vector<vertex_subset> layers;       // layers[i] = indices of weight i+1
    std::vector<int> weights;                // popcount per graph index

    unsigned bits(vertex v) const { return vertices[v]; }
    vertex index_of(unsigned u) const { return static_cast<vertex>(u - 1); }
};

// Gamma over the product ring of k copies of Z_2: vertices are the non-zero,
// non-all-ones k-bit vectors labeled as bitstrings; edge iff coordinatewise
// AND is zero.
inline std::pair<graph, boolean_ring_meta> gamma_boolean(int k) {
    if (k < 2) throw error("no zero-divisor graph", "need k >= 2");
    const unsigned full = (1u << k) - 1;
    boolean_ring_meta meta;
    meta.k = k;
    meta.layers.assign(k - 1, {});

    std::vector<std::string> labels;
    for (unsigned u = 1; u < full; ++u) {
        meta.vertices.push_back(u);
        const int w = std::popcount(u);
        meta.weights.push_back(w);
        meta.layers[w - 1].push_back(static_cast<vertex>(meta.vertices.size() - 1));
        std::string label(k, '0');
        for (int b = 0; b < k; ++b)
            if (u & (1u << (k - 1 - b))) label[b] = '1';
        labels.push_back(std::move(label));
    }
    graph g = make_graph(std::move(labels));
    const int count = static_cast<int>(meta.vertices.size());
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if ((meta.vertices[i] & meta.vertices[j]) == 0) g.add_edge(i, j);
    return {std::move(g), std::move(meta)};
}

// For each weight layer T_i, whether the induced partition is discrete
// (i.e. T_i already separates every vertex pair).
inline std::vector<bool> layer_partition_check(const information_table& t,
                                               const boolean_ring_meta& meta) {
    std::vector<bool> out;
    out.reserve(meta.layers.size());
    for (const auto& layer : meta.layers) out.push_back(partition(t, layer).is_discrete());
    return out;
}

struct h_partition_report {
    partition_t pi;
    vertex_subset h1, h2, h3;  // vertices at uniform distance 1 / 2 / 3 from all of A
    bool decomposition_ok = false;
};

// Partition induced by a subset A of one gcd class: singletons of A plus the
// uniform-distance blocks H_1 | H_2 | H_3. decomposition_ok records whether
// pi_A is exactly that block structure.
inline h_partition_report h_partition_zn(const information_table& t, const zn_graph_meta& meta,
                                         const vertex_subset& attrs) {
    if (attrs.empty()) throw error("empty attribute set", "need a non-empty class subset");
    const int d0 = std::gcd(meta.ring_element(attrs.front()), meta.n);
    for (vertex a : attrs)
        if (std::gcd(meta.ring_element(a), meta.n) != d0)
            throw error("not class-contained", "attribute set spans multiple divisor classes");

    h_partition_report report;
    report.pi = partition(t, attrs);
    for (vertex w = 0; w < t.n(); ++w) {
        if (subset_contains(attrs, w)) continue;
        int uniform = t.at(w, attrs.front());
        for (vertex a : attrs)
            if (t.at(w, a) != uniform) {
                uniform = -1;
                break;
            }
        if (uniform == 1) report.h1.push_back(w);
        else if (uniform == 2) report.h2.push_back(w);
        else if (uniform == 3) report.h3.push_back(w);
    }

    std::vector<vertex_subset> expected;
    for (vertex a : attrs) expected.push_back({a});
    for (const auto* h : {&report.h1, &report.h2, &report.h3})
        if (!h->empty()) expected.push_back(*h);
    int covered = 0;
    for (const auto& b : expected) covered += static_cast<int>(b.size());
    report.decomposition_ok =
        covered == t.n() && make_partition(std::move(expected), t.n()) == report.pi;
    return report;
}

}  // namespace granular
