#pragma once

#include <random>

#include "granular/granular.hpp"

namespace testutil {

// Random connected graph: G(n, p) edges plus a random spanning chain to
// guarantee connectivity. Deterministic for a given seed.
inline granular::graph random_connected_graph(std::mt19937& rng, int n, double p = 0.4) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    granular::graph g = granular::make_graph(std::move(labels));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(order[i], order[pick(rng)]);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && coin(rng) < p) g.add_edge(i, j);
    return g;
}

inline granular::vertex_subset random_subset(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    granular::vertex_subset out;
    for (int v = 0; v < n; ++v)
        if (coin(rng) < 0.5) out.push_back(v);
    return out;
}

// Definitional essential-set search: E is essential iff removing the columns
// E changes the full partition and E is inclusion-minimal with that property.
// Exponential; test oracle only.
inline std::vector<granular::vertex_subset> essential_sets_by_definition(
    const granular::information_table& t) {
    const int n = t.n();
    const granular::partition_t full = granular::partition(t, granular::full_subset(n));
    std::vector<granular::vertex_subset> found;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        granular::vertex_subset e;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) e.push_back(v);
        const auto rest = granular::subset_complement(e, n);
        if (granular::partition(t, rest) == full) continue;
        bool minimal = true;
        for (granular::vertex v : e) {
            auto smaller = granular::subset_difference(e, {v});
            if (smaller.empty()) continue;
            if (granular::partition(t, granular::subset_complement(smaller, n)) != full) {
                minimal = false;
                break;
            }
        }
        // the empty-proper-subset case: removing nothing never changes pi
        if (minimal) found.push_back(std::move(e));
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace testutil
