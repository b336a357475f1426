#pragma once

#include "granular/table.hpp"

namespace granular {

struct approximation_pair {
    vertex_subset lower;
    vertex_subset upper;
    bool exact = false;
};

// Lower/upper approximation of X with respect to the A-indiscernibility
// partition: union of blocks contained in / intersecting X.
inline approximation_pair approximate(const information_table& t, const vertex_subset& attrs,
                                      const vertex_subset& target) {
    approximation_pair out;
    for (const auto& block : partition(t, attrs).blocks) {
        if (is_subset_of(block, target)) out.lower = subset_union(out.lower, block);
        if (!subset_intersection(block, target).empty()) out.upper = subset_union(out.upper, block);
    }
    out.exact = out.lower == out.upper;
    return out;
}

// POS_B(A): vertices whose B-granule fits inside their A-granule. Argument
// order follows the subscript convention POS_B(A): `conditioning` is B,
// `target` is A.
inline vertex_subset positive_region(const information_table& t, const vertex_subset& conditioning,
                                     const vertex_subset& target) {
    const partition_t pi_b = partition(t, conditioning);
    const partition_t pi_a = partition(t, target);
    vertex_subset out;
    for (vertex v = 0; v < t.n(); ++v)
        if (is_subset_of(pi_b.block_of(v), pi_a.block_of(v))) out.push_back(v);
    return out;
}

// Dependency degree kappa_B(A) = |POS_B(A)| / |V|, exact.
inline rational dependency(const information_table& t, const vertex_subset& conditioning,
                           const vertex_subset& target) {
    return rational(static_cast<long long>(positive_region(t, conditioning, target).size()), t.n());
}

}  // namespace granular
