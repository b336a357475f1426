#pragma once

#include <cstdint>
#include <map>

#include "granular/graph.hpp"

namespace granular {

// The metric information table: objects and attributes are both the vertex
// set, F(v, a) = d(v, a). Values range over {0..diam}.
struct information_table {
    distance_matrix dm;

    int n() const { return dm.n(); }
    int at(vertex object, vertex attribute) const { return dm.at(object, attribute); }
};

inline information_table make_table(const graph& g) { return {all_pairs_distances(g)}; }

// Distance vector of v restricted to A, in A's sorted order.
inline std::vector<int> representation(const information_table& t, vertex v,
                                       const vertex_subset& attrs) {
    if (attrs.empty()) throw error("empty attribute set", "representation undefined for empty A");
    std::vector<int> out;
    out.reserve(attrs.size());
    for (vertex a : attrs) out.push_back(t.at(v, a));
    return out;
}

// Indiscernibility partition of V induced by A: blocks are equivalence
// classes of equal distance vectors. A = {} gives the single-block (coarsest)
// partition, A = V the discrete one.
inline partition_t partition(const information_table& t, const vertex_subset& attrs) {
    const int n = t.n();
    if (attrs.empty()) return make_partition({full_subset(n)}, n);
    std::map<std::vector<int>, vertex_subset> groups;
    for (vertex v = 0; v < n; ++v) groups[representation(t, v, attrs)].push_back(v);
    std::vector<vertex_subset> blocks;
    blocks.reserve(groups.size());
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    return make_partition(std::move(blocks), n);
}

// The A-granule of v: the block of partition(t, A) containing v.
inline vertex_subset granule(const information_table& t, vertex v, const vertex_subset& attrs) {
    const int n = t.n();
    if (attrs.empty()) return full_subset(n);
    const auto rep = representation(t, v, attrs);
    vertex_subset out;
    for (vertex w = 0; w < n; ++w)
        if (representation(t, w, attrs) == rep) out.push_back(w);
    return out;
}

// p refines q (p is finer, p <= q) iff every block of p sits inside a block of q.
inline bool refines(const partition_t& p, const partition_t& q) {
    if (p.ground_size != q.ground_size)
        throw error("ground-set mismatch", "partitions over different ground sets");
    for (const auto& block : p.blocks)
        if (!is_subset_of(block, q.block_of(block.front()))) return false;
    return true;
}

// Common refinement: pairwise block intersections.
inline partition_t meet(const partition_t& p, const partition_t& q) {
    if (p.ground_size != q.ground_size)
        throw error("ground-set mismatch", "partitions over different ground sets");
    std::vector<vertex_subset> blocks;
    for (const auto& a : p.blocks)
        for (const auto& b : q.blocks) {
            auto cut = subset_intersection(a, b);
            if (!cut.empty()) blocks.push_back(std::move(cut));
        }
    return make_partition(std::move(blocks), p.ground_size);
}

// Finest common coarsening: union-find over overlapping blocks.
inline partition_t join(const partition_t& p, const partition_t& q) {
    if (p.ground_size != q.ground_size)
        throw error("ground-set mismatch", "partitions over different ground sets");
    const int n = p.ground_size;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto* part : {&p, &q})
        for (const auto& block : part->blocks)
            for (std::size_t i = 1; i < block.size(); ++i) unite(block[0], block[i]);
    std::map<int, vertex_subset> groups;
    for (vertex v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<vertex_subset> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return make_partition(std::move(blocks), n);
}

// A ~ B iff they induce the same partition.
inline bool equivalent(const information_table& t, const vertex_subset& a, const vertex_subset& b) {
    return partition(t, a) == partition(t, b);
}

struct partitioner_report {
    vertex_subset max;                       // union over all B with pi_B = pi_A
    bool max_is_equivalent = false;          // whether pi_max = pi_A actually holds
    std::vector<vertex_subset> minimal;      // all minimal B with pi_B = pi_A
};

namespace detail {
inline vertex_subset mask_to_subset(std::uint32_t mask, int n) {
    vertex_subset out;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}
}  // namespace detail

// Exhaustive enumeration of the equivalence class of A under ~, returning
// the union (Max) and all minimal partitioners. Capped since the scan is
// over all 2^n subsets.
inline partitioner_report max_min_partitioners(const information_table& t, const vertex_subset& attrs,
                                               int cap = 16) {
    const int n = t.n();
    if (n > cap)
        throw error("enumeration cap",
                    "n = " + std::to_string(n) + " exceeds subset enumeration cap " + std::to_string(cap));
    const partition_t target = partition(t, attrs);

    std::vector<std::uint32_t> equivalent_masks;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (partition(t, detail::mask_to_subset(mask, n)) == target) equivalent_masks.push_back(mask);

    partitioner_report report;
    std::uint32_t union_mask = 0;
    for (auto m : equivalent_masks) union_mask |= m;
    report.max = detail::mask_to_subset(union_mask, n);
    report.max_is_equivalent = partition(t, report.max) == target;

    // one-element removal suffices for minimality: partitions only coarsen
    // as attributes are dropped
    for (auto m : equivalent_masks) {
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v) {
            if (!(m & (1u << v))) continue;
            if (partition(t, detail::mask_to_subset(m & ~(1u << v), n)) == target) minimal = false;
        }
        if (minimal) report.minimal.push_back(detail::mask_to_subset(m, n));
    }
    return report;
}

}  // namespace granular
