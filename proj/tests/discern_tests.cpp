#include <doctest.h>

#include "test_util.hpp"

using namespace granular;

TEST_CASE("discernibility matrix basics") {
    // K3: every entry is exactly the pair itself
    {
        const auto t = make_table(make_family(family::complete, {3}));
        const auto dm = discernibility_matrix(t);
        for (const auto& [key, entry] : dm.entries)
            CHECK(entry == vertex_subset{key.first, key.second});
    }
    // C4: the antipodal pair is distinguished only by itself
    {
        const auto t = make_table(make_family(family::cycle, {4}));
        const auto dm = discernibility_matrix(t);
        CHECK(dm.at(0, 2) == vertex_subset{0, 2});
        CHECK(dm.at(1, 3) == vertex_subset{1, 3});
    }
    // P4 entries
    {
        const auto t = make_table(make_family(family::path, {4}));
        const auto dm = discernibility_matrix(t);
        CHECK(dm.at(0, 2) == vertex_subset{0, 2, 3});
        CHECK(dm.at(1, 3) == vertex_subset{0, 1, 3});
        CHECK(dm.at(0, 1) == full_subset(4));
        CHECK(dm.at(0, 3) == full_subset(4));
    }
}

TEST_CASE("matrix entry structural invariants") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + trial % 6;
        const graph g = testutil::random_connected_graph(rng, n);
        const auto t = make_table(g);
        const auto dm = discernibility_matrix(t);
        for (const auto& [key, entry] : dm.entries) {
            CHECK(subset_contains(entry, key.first));
            CHECK(subset_contains(entry, key.second));
            CHECK(entry.size() >= 2);
            CHECK(entry.size() <= static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("layer route agrees with the direct route") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const graph g = testutil::random_connected_graph(rng, 4 + trial % 6);
        const auto t = make_table(g);
        CHECK(discernibility_matrix(t).entries == discernibility_matrix_by_layers(t).entries);
    }
    for (int n : {8, 12, 18}) {
        const auto t = make_table(gamma_zn(n).first);
        CHECK(discernibility_matrix(t).entries == discernibility_matrix_by_layers(t).entries);
    }
}

TEST_CASE("numerical matrix") {
    const auto t = make_table(make_family(family::path, {4}));
    const auto nums = numerical_matrix(discernibility_matrix(t));
    std::vector<int> values;
    for (const auto& [key, v] : nums) values.push_back(v);
    CHECK(values == std::vector<int>{4, 3, 4, 4, 3, 4});
    // the diametral pair attains n
    CHECK(nums.at({0, 3}) == 4);
}

TEST_CASE("minimum entry 2 attained exactly on twin-bearing graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const graph g = testutil::random_connected_graph(rng, 4 + trial % 6);
        const auto t = make_table(g);
        const auto nums = numerical_matrix(discernibility_matrix(t));
        int min_entry = t.n();
        for (const auto& [key, v] : nums) min_entry = std::min(min_entry, v);
        CHECK(min_entry >= 2);
        const auto classes = distance_similar_classes(t.dm);
        const bool twins = std::any_of(classes.blocks.begin(), classes.blocks.end(),
                                       [](const auto& b) { return b.size() >= 2; });
        if (twins) CHECK(min_entry == 2);
    }
}

TEST_CASE("distinct entries") {
    const auto t = make_table(make_family(family::complete, {3}));
    CHECK(distinct_entries(discernibility_matrix(t)) ==
          std::vector<vertex_subset>{{0, 1}, {0, 2}, {1, 2}});

    const auto tp = make_table(make_family(family::path, {4}));
    CHECK(distinct_entries(discernibility_matrix(tp)) ==
          std::vector<vertex_subset>{{0, 1, 2, 3}, {0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("entry/attribute interplay") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + trial % 6;
        const graph g = testutil::random_connected_graph(rng, n);
        const auto t = make_table(g);
        const auto dm = discernibility_matrix(t);
        const auto a = testutil::random_subset(rng, n);
        const auto pi = a.empty() ? make_partition({full_subset(n)}, n) : partition(t, a);
        for (const auto& [key, entry] : dm.entries) {
            const bool disjoint = subset_intersection(entry, a).empty();
            const bool same_block = pi.block_index_of(key.first) == pi.block_index_of(key.second);
            CHECK(disjoint == same_block);
            if (entry == a) {
                const auto rest = subset_complement(a, n);
                if (!rest.empty()) {
                    const auto pi_rest = partition(t, rest);
                    CHECK(pi_rest.block_index_of(key.first) == pi_rest.block_index_of(key.second));
                }
            }
        }
        // resolving iff hitting every entry
        bool hits_all = true;
        for (const auto& [key, entry] : dm.entries)
            if (subset_intersection(entry, a).empty()) hits_all = false;
        CHECK(is_resolving(t, a) == hits_all);
    }
}

TEST_CASE("entries commute with automorphisms") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const graph g = testutil::random_connected_graph(rng, 6);
        const auto t = make_table(g);
        const auto dm = discernibility_matrix(t);
        for (const auto& phi : enumerate_automorphisms(g))
            for (const auto& [key, entry] : dm.entries) {
                vertex_subset image;
                for (vertex v : entry) image.push_back(phi[v]);
                CHECK(dm.at(phi[key.first], phi[key.second]) == make_subset(std::move(image)));
            }
    }
}

TEST_CASE("essential sets") {
    // Gamma(Z_12): exactly the three twin pairs, E_dim 2
    {
        auto [g, meta] = gamma_zn(12);
        const auto t = make_table(g);
        const auto report = essential_sets(t, discernibility_matrix(t));
        std::vector<vertex_subset> expected{
            make_subset({meta.index_of(2), meta.index_of(10)}),
            make_subset({meta.index_of(3), meta.index_of(9)}),
            make_subset({meta.index_of(4), meta.index_of(8)})};
        std::sort(expected.begin(), expected.end());
        CHECK(report.essential_sets == expected);
        CHECK(report.essential_dimension == 2);
        CHECK(report.counts_by_size.at(2) == 3);
    }
    // P4 (twin-free): E_dim 3
    {
        const auto t = make_table(make_family(family::path, {4}));
        const auto report = essential_sets(discernibility_matrix(t));
        CHECK(report.essential_sets == std::vector<vertex_subset>{{0, 1, 3}, {0, 2, 3}});
        CHECK(report.essential_dimension == 3);
    }
    // K3: all three pairs
    {
        const auto t = make_table(make_family(family::complete, {3}));
        const auto report = essential_sets(discernibility_matrix(t));
        CHECK(report.essential_sets.size() == 3);
        CHECK(report.essential_dimension == 2);
    }
}

TEST_CASE("minimal entries match the definitional essential-set search") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const graph g = testutil::random_connected_graph(rng, 4 + trial % 5);
        const auto t = make_table(g);
        const auto fast = essential_sets(discernibility_matrix(t)).essential_sets;
        CHECK(fast == testutil::essential_sets_by_definition(t));
    }
}

TEST_CASE("minimal transversal enumeration") {
    CHECK(enumerate_reducts_transversal({{0, 1}}, 2) ==
          std::vector<vertex_subset>{{0}, {1}});

    // P4 clause family
    const auto t = make_table(make_family(family::path, {4}));
    const auto reducts = enumerate_reducts_transversal(
        distinct_entries(discernibility_matrix(t)), 4);
    CHECK(reducts == std::vector<vertex_subset>{{0}, {1, 2}, {3}});

    try {
        enumerate_reducts_transversal({{0, 1}, {}}, 2);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == "unresolvable pair");
    }
}

TEST_CASE("two enumeration algorithms agree") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + trial % 7;
        const graph g = testutil::random_connected_graph(rng, n);
        const auto t = make_table(g);
        const auto brute = enumerate_reducts(t).reducts;
        const auto trans =
            enumerate_reducts_transversal(distinct_entries(discernibility_matrix(t)), n);
        CHECK(brute == trans);
    }
}

TEST_CASE("closed form for Gamma(Z_n)") {
    // twin pair
    CHECK(closed_form_delta_zn(12, 2, 10) == std::vector<int>{2, 10});
    // diagonal
    CHECK(closed_form_delta_zn(12, 4, 4).empty());
    // general pairs match the generic matrix, all n in the validation set
    for (int n : {8, 12, 18, 20, 30}) {
        auto [g, meta] = gamma_zn(n);
        const auto t = make_table(g);
        const auto dm = discernibility_matrix(t);
        for (const auto& [key, entry] : dm.entries) {
            const auto cf = closed_form_delta_zn(n, meta.ring_element(key.first),
                                                 meta.ring_element(key.second));
            vertex_subset mapped;
            for (int e : cf) mapped.push_back(meta.index_of(e));
            CHECK(make_subset(std::move(mapped)) == entry);
        }
    }
    try {
        closed_form_delta_zn(12, 5, 6);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == "not a zero-divisor");
    }
}

TEST_CASE("closed form for the boolean family") {
    // weight-1 pair via neighborhood symmetric difference:
    // u=100, v=010 -> {010, 011, 100, 101}
    CHECK(closed_form_delta_boolean(3, 0b100, 0b010) == std::vector<int>{2, 3, 4, 5});
    CHECK(closed_form_delta_boolean(3, 0b110, 0b110).empty());

    for (int k : {3, 4, 5}) {
        auto [g, meta] = gamma_boolean(k);
        const auto t = make_table(g);
        const auto dm = discernibility_matrix(t);
        for (const auto& [key, entry] : dm.entries) {
            const auto cf =
                closed_form_delta_boolean(k, meta.bits(key.first), meta.bits(key.second));
            vertex_subset mapped;
            for (int e : cf) mapped.push_back(meta.index_of(static_cast<unsigned>(e)));
            CHECK(make_subset(std::move(mapped)) == entry);
        }
    }
    try {
        closed_form_delta_boolean(3, 0b111, 0b010);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == "not a zero-divisor");
    }
}
