#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "granular/table.hpp"

namespace granular {

// Pair-indexed map {i,j} -> set of vertices w with d(i,w) != d(j,w).
// Keys are ordered pairs with first < second.
struct discernibility_matrix_t {
    int n = 0;
    std::map<std::pair<vertex, vertex>, vertex_subset> entries;

    const vertex_subset& at(vertex i, vertex j) const {
        return entries.at(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    }
};

inline discernibility_matrix_t discernibility_matrix(const information_table& t) {
    const int n = t.n();
    discernibility_matrix_t out;
    out.n = n;
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) {
            vertex_subset entry;
            for (vertex w = 0; w < n; ++w)
                if (t.at(i, w) != t.at(j, w)) entry.push_back(w);
            out.entries.emplace(std::make_pair(i, j), std::move(entry));
        }
    return out;
}

// Same matrix via the layer route: entry(i,j) = V minus the union over t of
// X_t(i) n X_t(j), where X_t(v) = vertices at distance exactly t from v.
// Cross-check companion for discernibility_matrix.
inline discernibility_matrix_t discernibility_matrix_by_layers(const information_table& t) {
    const int n = t.n();
    const int diam = t.dm.diameter();
    // X_t per vertex, t in 0..diam (t = 0 is the vertex itself)
    std::vector<std::vector<vertex_subset>> layers(n, std::vector<vertex_subset>(diam + 1));
    for (vertex v = 0; v < n; ++v)
        for (vertex w = 0; w < n; ++w) layers[v][t.at(v, w)].push_back(w);

    discernibility_matrix_t out;
    out.n = n;
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) {
            vertex_subset agree;
            for (int level = 0; level <= diam; ++level)
                agree = subset_union(agree, subset_intersection(layers[i][level], layers[j][level]));
            out.entries.emplace(std::make_pair(i, j), subset_complement(agree, n));
        }
    return out;
}

// N(i,j) = |Delta(i,j)|
inline std::map<std::pair<vertex, vertex>, int> numerical_matrix(const discernibility_matrix_t& dm) {
    std::map<std::pair<vertex, vertex>, int> out;
    for (const auto& [key, entry] : dm.entries) out.emplace(key, static_cast<int>(entry.size()));
    return out;
}

// DISC(I): deduplicated entry sets in canonical order.
inline std::vector<vertex_subset> distinct_entries(const discernibility_matrix_t& dm) {
    std::set<vertex_subset> seen;
    for (const auto& [key, entry] : dm.entries) seen.insert(entry);
    return {seen.begin(), seen.end()};
}

struct essential_set_report {
    std::vector<vertex_subset> essential_sets;
    int essential_dimension = 0;
    std::map<int, int> counts_by_size;
};

// Essential sets = inclusion-minimal members of DISC(I).
inline essential_set_report essential_sets(const discernibility_matrix_t& dm) {
    const auto disc = distinct_entries(dm);
    essential_set_report report;
    for (const auto& candidate : disc) {
        bool minimal = true;
        for (const auto& other : disc)
            if (other != candidate && is_subset_of(other, candidate)) {
                minimal = false;
                break;
            }
        if (minimal) report.essential_sets.push_back(candidate);
    }
    report.essential_dimension = report.essential_sets.empty()
                                     ? 0
                                     : static_cast<int>(std::min_element(report.essential_sets.begin(),
                                                                         report.essential_sets.end(),
                                                                         [](const auto& a, const auto& b) {
                                                                             return a.size() < b.size();
                                                                         })
                                                            ->size());
    for (const auto& e : report.essential_sets) ++report.counts_by_size[static_cast<int>(e.size())];
    return report;
}

// Signature variant that keeps the table alongside the matrix; the minimal-
// entries route needs only the matrix, so the table is just carried context.
inline essential_set_report essential_sets(const information_table&, const discernibility_matrix_t& dm) {
    return essential_sets(dm);
}

// All minimal hitting sets of the clause family (the prime implicants of the
// discernibility function). Absorption first removes superset clauses, then a
// depth-first branch on the first uncovered clause enumerates candidates;
// each candidate is kept only if every element is necessary.
inline std::vector<vertex_subset> enumerate_reducts_transversal(const std::vector<vertex_subset>& disc,
                                                                int n) {
    for (const auto& clause : disc)
        if (clause.empty())
            throw error("unresolvable pair", "empty discernibility entry: two identical rows");
    if (disc.empty()) return {{}};

    auto to_mask = [](const vertex_subset& s) {
        std::uint32_t m = 0;
        for (vertex v : s) m |= 1u << v;
        return m;
    };

    // absorption: stream clauses in increasing cardinality, drop supersets
    std::vector<vertex_subset> sorted = disc;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::uint32_t> clauses;
    for (const auto& clause : sorted) {
        const std::uint32_t m = to_mask(clause);
        bool absorbed = false;
        for (auto kept : clauses)
            if ((kept & m) == kept) {
                absorbed = true;
                break;
            }
        if (!absorbed) clauses.push_back(m);
    }

    std::set<std::uint32_t> results;
    auto minimal = [&](std::uint32_t chosen) {
        for (int v = 0; v < n; ++v) {
            if (!(chosen & (1u << v))) continue;
            const std::uint32_t without = chosen & ~(1u << v);
            bool still_hits_all = true;
            for (auto c : clauses)
                if (!(c & without)) {
                    still_hits_all = false;
                    break;
                }
            if (still_hits_all) return false;  // v was redundant
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::uint32_t chosen, std::uint32_t banned) -> void {
        std::uint32_t open = 0;
        bool covered = true;
        for (auto c : clauses)
            if (!(c & chosen)) {
                open = c;
                covered = false;
                break;
            }
        if (covered) {
            if (minimal(chosen)) results.insert(chosen);
            return;
        }
        std::uint32_t permitted = open & ~banned;
        for (int v = 0; v < n; ++v) {
            if (!(permitted & (1u << v))) continue;
            self(self, chosen | (1u << v), banned);
            banned |= 1u << v;
        }
    };
    dfs(dfs, 0, 0);

    std::vector<vertex_subset> out;
    for (auto m : results) {
        vertex_subset s;
        for (int v = 0; v < n; ++v)
            if (m & (1u << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- closed forms for the two zero-divisor families ----------------------
//
// Both return sets of ring elements (not graph indices) so they can be
// validated independently of any particular vertex ordering.

namespace detail {

inline std::vector<int> zn_vertices(int n) {
    std::vector<int> out;
    for (int v = 2; v <= n - 2; ++v)
        if (std::gcd(v, n) > 1) out.push_back(v);
    return out;
}

// distance in Gamma(Z_n) from modular arithmetic alone: 1 when the product
// vanishes, 2 when a common annihilating vertex exists, else 3 (the family
// has diameter <= 3)
inline int zn_distance(int n, const std::vector<int>& verts, int u, int w) {
    if (u == w) return 0;
    if (static_cast<long long>(u) * w % n == 0) return 1;
    for (int x : verts) {
        if (x == u || x == w) continue;
        if (static_cast<long long>(x) * u % n == 0 && static_cast<long long>(x) * w % n == 0) return 2;
    }
    return 3;
}

// distance in Gamma(prod Z_2^k): 1 when supports are disjoint, 2 when the
// union of supports is not everything, else 3
inline int boolean_distance(int k, unsigned u, unsigned w) {
    const unsigned full = (1u << k) - 1;
    if (u == w) return 0;
    if ((u & w) == 0) return 1;
    if ((u | w) != full) return 2;
    return 3;
}

inline std::vector<int> boolean_neighborhood(int k, unsigned u) {
    const unsigned full = (1u << k) - 1;
    std::vector<int> out;
    for (unsigned w = 1; w < full; ++w)
        if (w != u && (w & u) == 0) out.push_back(static_cast<int>(w));
    return out;
}

}  // namespace detail

// Delta entry of Gamma(Z_n) for ring elements vi, vj. Distance-similar pairs
// (same gcd class) give {vi, vj}; the general case compares the arithmetic
// distances of every vertex to vi and vj.
inline std::vector<int> closed_form_delta_zn(int n, int vi, int vj) {
    auto is_zero_divisor = [n](int v) { return v >= 2 && v <= n - 2 && std::gcd(v, n) > 1; };
    if (!is_zero_divisor(vi) || !is_zero_divisor(vj))
        throw error("not a zero-divisor", std::to_string(vi) + " or " + std::to_string(vj) +
                                              " is not a zero-divisor of Z_" + std::to_string(n));
    if (vi == vj) return {};
    if (std::gcd(vi, n) == std::gcd(vj, n)) {
        std::vector<int> out{vi, vj};
        std::sort(out.begin(), out.end());
        return out;
    }
    const auto verts = detail::zn_vertices(n);
    std::vector<int> out;
    for (int w : verts)
        if (detail::zn_distance(n, verts, vi, w) != detail::zn_distance(n, verts, vj, w))
            out.push_back(w);
    return out;
}

// Delta entry of Gamma(prod Z_2^k) for bit-vector vertices u, v. Weight-1
// pairs reduce to the symmetric difference of neighborhoods, weight-(k-1)
// pairs to that of the complements; all remaining pairs compare the bitwise
// distances directly.
inline std::vector<int> closed_form_delta_boolean(int k, unsigned u, unsigned v) {
    const unsigned full = (1u << k) - 1;
    if (u == 0 || v == 0 || u >= full || v >= full)
        throw error("not a zero-divisor", "vertices must be non-zero, non-all-ones k-bit vectors");
    if (u == v) return {};
    const int tu = std::popcount(u), tv = std::popcount(v);
    auto symmetric_difference = [](std::vector<int> a, std::vector<int> b) {
        std::vector<int> out;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    if (tu == 1 && tv == 1)
        return symmetric_difference(detail::boolean_neighborhood(k, u),
                                    detail::boolean_neighborhood(k, v));
    if (tu == k - 1 && tv == k - 1)
        return symmetric_difference(detail::boolean_neighborhood(k, full ^ u),
                                    detail::boolean_neighborhood(k, full ^ v));
    std::vector<int> out;
    for (unsigned w = 1; w < full; ++w)
        if (detail::boolean_distance(k, u, w) != detail::boolean_distance(k, v, w))
            out.push_back(static_cast<int>(w));
    return out;
}

}  // namespace granular
