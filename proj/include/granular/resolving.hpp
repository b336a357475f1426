#pragma once

#include <bit>
#include <cstdint>

#include "granular/table.hpp"

namespace granular {

// A is resolving iff all distance vectors gamma(.|A) are pairwise distinct,
// i.e. the induced partition is discrete.
inline bool is_resolving(const information_table& t, const vertex_subset& attrs) {
    const int n = t.n();
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) {
            bool separated = false;
            for (vertex a : attrs)
                if (t.at(i, a) != t.at(j, a)) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

struct reduct_report {
    std::vector<vertex_subset> reducts;  // all minimal resolving sets, canonical order
    int metric_dimension = 0;
    int upper_dimension = 0;
    vertex_subset core;       // vertices in every reduct
    vertex_subset void_set;   // vertices in no reduct
};

namespace detail {

inline bool mask_is_resolving(const information_table& t, std::uint32_t mask) {
    const int n = t.n();
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) {
            bool separated = false;
            for (vertex a = 0; a < n; ++a)
                if ((mask & (1u << a)) && t.at(i, a) != t.at(j, a)) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

}  // namespace detail

// All minimal resolving sets. The search runs by increasing cardinality then
// lexicographic; the returned list is re-sorted into subset order.
// Candidates missing two or more vertices of any distance-similar class are
// pruned outright (such a set cannot resolve the class). Minimality check is
// just "no already-found reduct is a subset", valid under this search order.
inline reduct_report enumerate_reducts(const information_table& t, const partition_t& twin_classes,
                                       int cap = 20) {
    const int n = t.n();
    if (n > cap)
        throw error("enumeration cap",
                    "n = " + std::to_string(n) + " exceeds reduct enumeration cap " + std::to_string(cap));

    std::vector<std::uint32_t> class_masks;
    std::vector<int> class_sizes;
    for (const auto& block : twin_classes.blocks) {
        if (block.size() < 2) continue;
        std::uint32_t m = 0;
        for (vertex v : block) m |= 1u << v;
        class_masks.push_back(m);
        class_sizes.push_back(static_cast<int>(block.size()));
    }

    reduct_report report;
    std::vector<std::uint32_t> found_masks;

    std::vector<vertex> combo;
    auto admissible = [&](std::uint32_t mask) {
        for (std::size_t c = 0; c < class_masks.size(); ++c)
            if (std::popcount(mask & class_masks[c]) < class_sizes[c] - 1) return false;
        for (auto f : found_masks)
            if ((f & mask) == f) return false;
        return true;
    };

    for (int size = 1; size <= n; ++size) {
        // plain lexicographic k-combinations
        combo.assign(size, 0);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            std::uint32_t mask = 0;
            for (vertex v : combo) mask |= 1u << v;
            if (admissible(mask) && detail::mask_is_resolving(t, mask)) {
                report.reducts.push_back(combo);
                found_masks.push_back(mask);
            }
            // advance
            int i = size - 1;
            while (i >= 0 && combo[i] == n - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }

    if (report.reducts.empty()) throw error("internal", "no resolving set found (V always resolves)");
    std::sort(report.reducts.begin(), report.reducts.end());  // canonical output order
    report.metric_dimension = static_cast<int>(
        std::min_element(report.reducts.begin(), report.reducts.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); })
            ->size());
    report.upper_dimension = 0;
    vertex_subset everything = full_subset(n);
    report.core = everything;
    vertex_subset covered;
    for (const auto& r : report.reducts) {
        report.upper_dimension = std::max(report.upper_dimension, static_cast<int>(r.size()));
        report.core = subset_intersection(report.core, r);
        covered = subset_union(covered, r);
    }
    report.void_set = subset_difference(everything, covered);
    return report;
}

inline reduct_report enumerate_reducts(const information_table& t, int cap = 20) {
    return enumerate_reducts(t, distance_similar_classes(t.dm), cap);
}

// ceil(log3(x)) for x >= 1
inline int log3_ceil(int x) {
    int t = 0;
    long long pow3 = 1;
    while (pow3 < x) {
        pow3 *= 3;
        ++t;
    }
    return t;
}

struct reduct_bounds {
    vertex_subset reduct;
    bool log3_lower_ok = false;        // ceil(log3(maxdeg+1)) <= |A|
    bool n_minus_diam_ok = false;      // |A| <= n - diam
    bool dim_bounds_ok = false;        // dim <= |A| <= dim+
    bool n_minus_k_applicable = false; // only when some twin class has >= 2 members
    bool n_minus_k_ok = false;         // |A| <= n - k
};

struct bound_report {
    int log3_lower = 0;
    int n_minus_diam = 0;
    int class_count = 0;
    std::vector<reduct_bounds> per_reduct;
    bool all_ok = true;  // over applicable checks
};

// Verifies the dimension bounds for every reduct. Failures are data, not
// errors: the report records pass/fail per bound per reduct.
inline bound_report check_bounds(const graph& g, const distance_matrix& dm,
                                 const reduct_report& reducts) {
    bound_report out;
    out.log3_lower = log3_ceil(max_degree(g) + 1);
    out.n_minus_diam = dm.n() - dm.diameter();
    const partition_t classes = distance_similar_classes(dm);
    out.class_count = static_cast<int>(classes.blocks.size());
    const bool has_nontrivial_class =
        std::any_of(classes.blocks.begin(), classes.blocks.end(),
                    [](const vertex_subset& b) { return b.size() >= 2; });

    for (const auto& r : reducts.reducts) {
        reduct_bounds rb;
        rb.reduct = r;
        const int size = static_cast<int>(r.size());
        rb.log3_lower_ok = out.log3_lower <= size;
        rb.n_minus_diam_ok = size <= out.n_minus_diam;
        rb.dim_bounds_ok = reducts.metric_dimension <= size && size <= reducts.upper_dimension;
        rb.n_minus_k_applicable = has_nontrivial_class;
        rb.n_minus_k_ok = !has_nontrivial_class || size <= dm.n() - out.class_count;
        out.all_ok = out.all_ok && rb.log3_lower_ok && rb.n_minus_diam_ok && rb.dim_bounds_ok &&
                     (!rb.n_minus_k_applicable || rb.n_minus_k_ok);
        out.per_reduct.push_back(std::move(rb));
    }
    return out;
}

}  // namespace granular
