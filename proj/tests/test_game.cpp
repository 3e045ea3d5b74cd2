#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/rng.hpp"

using namespace secnet;

namespace {

Network random_graph(int n, double p, std::uint64_t seed) {
    RngStream rng(seed, 99);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return Network(n, edges);
}

std::vector<double> random_simplex(int n, RngStream& rng) {
    std::vector<double> phi(n);
    double total = 0.0;
    for (double& v : phi) {
        v = -std::log(std::max(rng.uniform(), 1e-300));
        total += v;
    }
    for (double& v : phi) v /= total;
    return phi;
}

RiskSpec exact_spec() {
    RiskSpec spec;
    spec.variant = RiskSpec::Variant::Exact;
    return spec;
}

}  // namespace

TEST_CASE("defender cost closed forms") {
    CHECK(defender_cost(DefenseVector::zeros(3), CostKind::Quadratic) == 0.0);
    CHECK(defender_cost(DefenseVector({1.0, 1.0}), CostKind::Quadratic) == 1.0);
    CHECK(defender_cost(DefenseVector({0.5, 0.5}), CostKind::L1) == 1.0);
}

TEST_CASE("attacker utility closed forms") {
    Network n4(4, {{0, 1}, {1, 2}, {2, 3}});
    ValueProfiles zero{{0, 0, 0, 0}, {0, 0, 0, 0}};
    const double theta = 3.0;
    const double u0 = attacker_utility(n4, AttackVector::uniform(4), DefenseVector::zeros(4),
                                       zero, theta, exact_spec());
    CHECK(u0 == doctest::Approx(-theta * 0.5 * 4 * (0.25 * 0.25)).epsilon(1e-12));

    ValueProfiles ones{{1, 1, 1, 1}, {1, 1, 1, 1}};
    const double u1 = attacker_utility(n4, AttackVector::uniform(4),
                                       DefenseVector({1, 1, 1, 1}), ones, theta, exact_spec());
    CHECK(u1 == doctest::Approx(-theta / 8.0).epsilon(1e-12));

    Network k2(2, {{0, 1}});
    ValueProfiles k2p{{1, 1}, {1, 1}};
    const double u2 = attacker_utility(k2, AttackVector({1.0, 0.0}), DefenseVector::zeros(2),
                                       k2p, 1.0, exact_spec());
    CHECK(u2 == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("defender loss closed forms") {
    Network k2(2, {{0, 1}});
    ValueProfiles zero{{0, 0}, {0, 0}};
    CHECK(defender_loss(k2, DefenseVector::zeros(2), AttackVector({1.0, 0.0}), zero, 2.0,
                        CostKind::Quadratic, exact_spec()) == doctest::Approx(0.0));
    ValueProfiles ones{{1, 1}, {1, 1}};
    CHECK(defender_loss(k2, DefenseVector::zeros(2), AttackVector({1.0, 0.0}), ones, 2.0,
                        CostKind::Quadratic, exact_spec()) == doctest::Approx(2.0));
    CHECK(defender_loss(k2, DefenseVector({1.0, 1.0}), AttackVector({1.0, 0.0}), ones, 2.0,
                        CostKind::Quadratic, exact_spec()) == doctest::Approx(2.0));
}

TEST_CASE("weighted infection is linear in eta") {
    RngStream rng(61, 5);
    Network net = random_graph(8, 0.4, 202);
    std::vector<double> q(8);
    for (double& v : q) v = rng.uniform();
    std::vector<double> eta(8);
    for (double& v : eta) v = 2.0 * rng.uniform() - 0.5;  // mixed signs allowed
    RiskSpec spec = exact_spec();
    auto direct = weighted_infection(net, DefenseVector(q), eta, spec);
    std::vector<double> mix(8, 0.0);
    for (int s = 0; s < 8; ++s) {
        std::vector<double> es(8, 0.0);
        es[s] = 1.0;
        auto unit = weighted_infection(net, DefenseVector(q), es, spec);
        for (int i = 0; i < 8; ++i) mix[i] += eta[s] * unit[i];
    }
    for (int i = 0; i < 8; ++i) CHECK(direct[i] == doctest::Approx(mix[i]).epsilon(1e-10));
}

TEST_CASE("best response: huge theta gives uniform") {
    Network net = example_six_node_network();
    ValueProfiles p{std::vector<double>(6, 1.0), std::vector<double>(6, 1.0)};
    auto br = attacker_best_response(net, DefenseVector::zeros(6), p, 1e9, exact_spec());
    for (double v : br.phi.phi) CHECK(std::abs(v - 1.0 / 6.0) <= 1e-9);
    CHECK(br.interior);
}

TEST_CASE("best response: K2 hand example") {
    Network k2(2, {{0, 1}});
    ValueProfiles p{{1, 1}, {1, 0}};
    auto br = attacker_best_response(k2, DefenseVector({0.0, 0.5}), p, 1.0, exact_spec());
    CHECK(br.phi.phi[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(br.phi.phi[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("best response: symmetric instance gives uniform") {
    Network cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    ValueProfiles p{std::vector<double>(4, 1.0), std::vector<double>(4, 1.0)};
    auto br = attacker_best_response(cycle, DefenseVector({0.3, 0.3, 0.3, 0.3}), p, 2.0,
                                     exact_spec());
    for (double v : br.phi.phi) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("best response: simplex feasibility and dominance over random points") {
    RngStream rng(67, 5);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 5 + trial % 6;  // 5..10
        Network net = random_graph(n, 0.35, 3000 + trial);
        std::vector<double> q(n), eta(n), z(n, 1.0);
        for (double& v : q) v = rng.uniform();
        for (double& v : eta) v = rng.uniform() * 2.0;
        ValueProfiles p{z, eta};
        const double theta = 0.5 + 2.0 * rng.uniform();  // small enough to hit the boundary
        auto br = attacker_best_response(net, DefenseVector(q), p, theta, exact_spec());
        double sum = std::accumulate(br.phi.phi.begin(), br.phi.phi.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        for (double v : br.phi.phi) CHECK(v >= 0.0);

        const double best =
            attacker_utility(net, br.phi, DefenseVector(q), p, theta, exact_spec());
        for (int k = 0; k < 200; ++k) {
            auto cand = random_simplex(n, rng);
            const double u = attacker_utility(net, AttackVector(cand), DefenseVector(q), p,
                                              theta, exact_spec());
            CHECK(u <= best + 1e-9);
        }
    }
}

TEST_CASE("best response: interior formula matches active-set output") {
    RngStream rng(71, 5);
    Network net = random_graph(6, 0.5, 404);
    std::vector<double> q(6);
    for (double& v : q) v = 0.5 * rng.uniform();
    ValueProfiles p{std::vector<double>(6, 1.0), std::vector<double>(6, 1.0)};
    const double theta = 100.0;  // large theta keeps the solution interior
    auto br = attacker_best_response(net, DefenseVector(q), p, theta, exact_spec());
    REQUIRE(br.interior);
    auto probs = weighted_infection(net, DefenseVector(q), p.eta, exact_spec());
    const double mean = std::accumulate(probs.begin(), probs.end(), 0.0) / 6.0;
    for (int i = 0; i < 6; ++i)
        CHECK(br.phi.phi[i] ==
              doctest::Approx(1.0 / 6.0 + (probs[i] - mean) / theta).epsilon(1e-12));
}

TEST_CASE("profile presets") {
    Network net = example_six_node_network();
    auto unif = resolve_profile_preset("uniform", net);
    for (double v : unif) CHECK(v == doctest::Approx(1.0 / 6.0));
    auto ones = resolve_profile_preset("ones", net);
    for (double v : ones) CHECK(v == 1.0);
    auto ind = resolve_profile_preset("indicator:1,4", net);
    CHECK(ind == std::vector<double>{0, 1, 0, 0, 1, 0});

    TopologySpec spec;
    spec.variant = TopologySpec::Variant::Tree;
    spec.branching = 2;
    spec.levels = 2;
    Network t = generate_topology(spec);
    auto lvl = resolve_profile_preset("level:1", t);
    double total = 0.0;
    auto depth = t.bfs_depth(0);
    for (int i = 0; i < t.size(); ++i) {
        if (depth[i] == 1)
            CHECK(lvl[i] > 0.0);
        else
            CHECK(lvl[i] == 0.0);
        total += lvl[i];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(resolve_profile_preset("nope", net), std::invalid_argument);
}
