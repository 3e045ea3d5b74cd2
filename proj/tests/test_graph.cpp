#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "secnet/graph.hpp"
#include "secnet/rng.hpp"

using namespace secnet;

TEST_CASE("K2 construction") {
    Network net(2, {{0, 1}});
    CHECK(net.size() == 2);
    CHECK(net.has_edge(0, 1));
    CHECK(net.has_edge(1, 0));
    CHECK(net.degree(0) == 1);
    CHECK(net.edge_count() == 1);
}

TEST_CASE("duplicate edges are deduplicated") {
    Network net(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(net.edge_count() == 2);
    CHECK(net.degree(1) == 2);
}

TEST_CASE("self-loops and bad indices are rejected") {
    CHECK_THROWS_AS(Network(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Network(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(Network(2, {{-1, 0}}), std::out_of_range);
}

TEST_CASE("six-node example network has the documented degrees") {
    Network net = example_six_node_network();
    CHECK(net.size() == 6);
    const int expected[] = {3, 2, 1, 2, 3, 1};
    for (int i = 0; i < 6; ++i) CHECK(net.degree(i) == expected[i]);
    CHECK(net.has_edge(0, 1));
    CHECK(net.has_edge(4, 5));
    CHECK_FALSE(net.has_edge(2, 5));
}

TEST_CASE("connected_without on the six-node network") {
    Network net = example_six_node_network();
    // removing node 4 separates 2 from 5
    CHECK_FALSE(net.connected_without(2, 5, {4}));
    // removing node 1 leaves the path 2-0-3-4-5
    CHECK(net.connected_without(2, 5, {1}));
    CHECK(net.connected_without(0, 1, {}));
    CHECK_THROWS_AS(net.connected_without(2, 5, {2}), std::invalid_argument);
}

TEST_CASE("connected_without false when all neighbors removed") {
    Network net = example_six_node_network();
    // node 5's only neighbor is 4
    for (int i = 0; i < 5; ++i) {
        if (i == 4) continue;
        CHECK_FALSE(net.connected_without(i, 5, {4}));
    }
}

TEST_CASE("tree generator sizes and degrees") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::Tree;
    spec.branching = 3;
    spec.levels = 4;
    Network t = generate_topology(spec);
    CHECK(t.size() == 121);  // 1 + 3 + 9 + 27 + 81
    CHECK(t.degree(0) == 3);
    CHECK(t.degree(120) == 1);
    CHECK(t.is_connected());
    CHECK(t.edge_count() == 120);

    spec.branching = 2;
    spec.levels = 1;
    Network star = generate_topology(spec);
    CHECK(star.size() == 3);
    CHECK(star.degree(0) == 2);
}

TEST_CASE("tree levels via bfs depth") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::Tree;
    spec.branching = 3;
    spec.levels = 3;
    Network t = generate_topology(spec);
    auto depth = t.bfs_depth(0);
    int per_level[4] = {0, 0, 0, 0};
    for (int d : depth) {
        REQUIRE(d >= 0);
        REQUIRE(d <= 3);
        ++per_level[d];
    }
    CHECK(per_level[0] == 1);
    CHECK(per_level[1] == 3);
    CHECK(per_level[2] == 9);
    CHECK(per_level[3] == 27);
}

TEST_CASE("erdos-renyi determinism") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::ErdosRenyi;
    spec.n = 100;
    spec.connectivity = 3.0;
    spec.seed = 7;
    Network a = generate_topology(spec);
    Network b = generate_topology(spec);
    CHECK(a.edges() == b.edges());
    spec.seed = 8;
    Network c = generate_topology(spec);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("erdos-renyi empirical mean degree is close to c") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::ErdosRenyi;
    spec.n = 200;
    spec.connectivity = 4.0;
    double total = 0.0;
    for (int g = 0; g < 50; ++g) {
        spec.seed = 1000 + g;
        Network net = generate_topology(spec);
        total += 2.0 * net.edge_count() / net.size();
    }
    const double mean_degree = total / 50.0;
    CHECK(mean_degree > 3.5);
    CHECK(mean_degree < 4.5);
}

TEST_CASE("erdos-renyi parameter validation") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::ErdosRenyi;
    spec.n = 10;
    spec.connectivity = 0.0;
    CHECK_THROWS_AS(generate_topology(spec), std::invalid_argument);
    spec.connectivity = 9.5;
    CHECK_THROWS_AS(generate_topology(spec), std::invalid_argument);
}

TEST_CASE("community generator: complete groups plus bridges") {
    TopologySpec spec;
    spec.variant = TopologySpec::Variant::Community;
    spec.group_sizes = {10, 10, 10};
    spec.bridges = {{9, 10}, {19, 20}};
    Network net = generate_topology(spec);
    CHECK(net.size() == 30);
    // complete within each group
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) CHECK(net.has_edge(i, j));
    CHECK(net.has_edge(9, 10));
    CHECK(net.has_edge(19, 20));
    CHECK_FALSE(net.has_edge(0, 10));
    CHECK(net.edge_count() == 3 * 45 + 2);
    CHECK(net.is_connected());

    spec.group_sizes = {0, 5};
    CHECK_THROWS_AS(generate_topology(spec), std::invalid_argument);
}

TEST_CASE("edge-list round trip") {
    Network net = example_six_node_network();
    const std::string text = to_edge_list(net);
    CHECK(text.substr(0, 3) == "n 6");
    Network back = from_edge_list(text);
    CHECK(back.size() == net.size());
    CHECK(back.edges() == net.edges());
}

TEST_CASE("component labels under removal") {
    Network net = example_six_node_network();
    auto labels = net.component_labels();
    for (int i = 0; i < 6; ++i) CHECK(labels[i] == labels[0]);
    auto cut = net.component_labels({4});
    CHECK(cut[4] == -1);
    CHECK(cut[5] != cut[0]);
    CHECK(cut[1] == cut[0]);
}

TEST_CASE("masked component labels match removal-based labels") {
    RngStream rng(42, 1);
    for (int trial = 0; trial < 20; ++trial) {
        TopologySpec spec;
        spec.variant = TopologySpec::Variant::ErdosRenyi;
        spec.n = 12;
        spec.connectivity = 3.0;
        spec.seed = 500 + trial;
        Network net = generate_topology(spec);
        std::vector<std::uint8_t> mask(net.size());
        std::vector<int> removed;
        for (int i = 0; i < net.size(); ++i) {
            mask[i] = rng.uniform() < 0.7;
            if (!mask[i]) removed.push_back(i);
        }
        CHECK(net.component_labels_masked(mask) == net.component_labels(removed));
    }
}
