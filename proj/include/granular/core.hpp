#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace granular {

// Structured error: `code` is a short machine-readable tag ("self-loop",
// "disconnected", "enumeration cap", ...), `what()` carries the detail.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

using vertex = int;

// Canonical subset of vertex indices: strictly increasing, no duplicates.
using vertex_subset = std::vector<vertex>;

inline vertex_subset make_subset(std::vector<vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

inline bool subset_contains(const vertex_subset& s, vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset_of(const vertex_subset& a, const vertex_subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline vertex_subset subset_union(const vertex_subset& a, const vertex_subset& b) {
    vertex_subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_subset subset_intersection(const vertex_subset& a, const vertex_subset& b) {
    vertex_subset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_subset subset_difference(const vertex_subset& a, const vertex_subset& b) {
    vertex_subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_subset full_subset(int n) {
    vertex_subset out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

inline vertex_subset subset_complement(const vertex_subset& a, int n) {
    return subset_difference(full_subset(n), a);
}

// Partition of {0..n-1} into disjoint non-empty blocks. Canonical form:
// members ascending within a block, blocks ordered by minimum element,
// so equality of partitions is structural equality.
struct partition_t {
    std::vector<vertex_subset> blocks;
    int ground_size = 0;

    bool operator==(const partition_t&) const = default;

    bool is_discrete() const { return static_cast<int>(blocks.size()) == ground_size; }

    // index of the block containing v
    int block_index_of(vertex v) const {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (subset_contains(blocks[i], v)) return static_cast<int>(i);
        throw error("internal", "vertex not covered by partition");
    }

    const vertex_subset& block_of(vertex v) const { return blocks[block_index_of(v)]; }
};

inline partition_t make_partition(std::vector<vertex_subset> blocks, int ground_size) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const vertex_subset& a, const vertex_subset& b) { return a.front() < b.front(); });
    return partition_t{std::move(blocks), ground_size};
}

// Exact rational in lowest terms, denominator > 0.
struct rational {
    long long num = 0;
    long long den = 1;

    rational() = default;
    rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw error("internal", "zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const rational&) const = default;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace granular
