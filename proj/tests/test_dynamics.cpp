#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "secnet/dynamics.hpp"
#include "secnet/graph.hpp"
#include "secnet/risk.hpp"
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

DynamicsParams si_params(int horizon) {
    DynamicsParams p;
    p.beta = 1.0;
    p.gamma = 1.0;
    p.delta = 0.0;
    p.tau = 1.0;  // deterministic threshold: any pressure infects
    p.horizon = horizon;
    p.rescale_beta = false;
    return p;
}

}  // namespace

TEST_CASE("sample_initial: full defense blocks every seed") {
    Network net = example_six_node_network();
    DefenseVector q({1, 1, 1, 1, 1, 1});
    auto state = sample_initial(net, q, AttackVector::uniform(6), CounterRng(3));
    CHECK(std::accumulate(state.begin(), state.end(), 0) == 0);
}

TEST_CASE("sample_initial: certain infection and empirical frequency") {
    Network single(1, {});
    auto s = sample_initial(single, DefenseVector::zeros(1), AttackVector({1.0}), CounterRng(5));
    CHECK(s[0] == 1);

    // K2, phi = (1/2, 1/2), q = 0: each node infected with probability 1/2
    Network k2(2, {{0, 1}});
    const CounterRng base(777);
    const int trials = 20000;
    int hits = 0;
    for (int r = 0; r < trials; ++r) {
        auto st = sample_initial(k2, DefenseVector::zeros(2), AttackVector::uniform(2),
                                 base.derive(r));
        hits += st[0] + st[1];
    }
    CHECK(std::abs(hits / (2.0 * trials) - 0.5) < 0.01);
}

TEST_CASE("step: healthy network stays healthy") {
    Network net = example_six_node_network();
    std::vector<std::uint8_t> zeros(6, 0);
    auto next = step(net, zeros, DefenseVector::zeros(6), si_params(1), CounterRng(1));
    CHECK(next == zeros);
}

TEST_CASE("step: recovery follows the persistence probability exactly") {
    Network k2(2, {{0, 1}});
    std::vector<std::uint8_t> both(2, 1);
    DynamicsParams keep = si_params(1);
    auto stay = step(k2, both, DefenseVector::zeros(2), keep, CounterRng(9));
    CHECK(stay == both);  // gamma = 1 persists surely

    DynamicsParams drop = si_params(1);
    drop.gamma = 0.0;
    drop.beta = 0.0;  // suppress re-infection by the neighbor
    auto gone = step(k2, both, DefenseVector::zeros(2), drop, CounterRng(9));
    CHECK(std::accumulate(gone.begin(), gone.end(), 0) == 0);
}

TEST_CASE("step: deterministic threshold spread along a path") {
    Network path(3, {{0, 1}, {1, 2}});
    DynamicsParams p = si_params(2);
    std::vector<std::uint8_t> state = {1, 0, 0};
    state = step(path, state, DefenseVector::zeros(3), p, CounterRng(2).derive(0));
    CHECK(state == std::vector<std::uint8_t>{1, 1, 0});
    state = step(path, state, DefenseVector::zeros(3), p, CounterRng(2).derive(1));
    CHECK(state == std::vector<std::uint8_t>{1, 1, 1});
}

TEST_CASE("step: isolated nodes never catch the contagion") {
    Network net(3, {{0, 1}});  // node 2 isolated
    std::vector<std::uint8_t> state = {1, 1, 0};
    DynamicsParams p = si_params(1);
    p.tau = 0.0;  // even with uniform noise, zero pressure never activates
    for (int r = 0; r < 50; ++r) {
        auto next = step(net, state, DefenseVector::zeros(3), p, CounterRng(100 + r));
        CHECK(next[2] == 0);
    }
}

TEST_CASE("step: full investment with contact rescaling is immune") {
    Network k2(2, {{0, 1}});
    std::vector<std::uint8_t> state = {1, 0};
    DynamicsParams p = si_params(1);
    p.rescale_beta = true;
    DefenseVector q({0.0, 1.0});
    for (int r = 0; r < 50; ++r) {
        auto next = step(k2, state, q, p, CounterRng(200 + r));
        CHECK(next[1] == 0);
    }
}

TEST_CASE("step: SIS activation frequency matches beta k / d") {
    // star center with 4 leaves, 2 of them infected, beta = 0.7 -> p = 0.35
    Network star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    std::vector<std::uint8_t> state = {0, 1, 1, 0, 0};
    DynamicsParams p;
    p.beta = 0.7;
    p.gamma = 0.0;
    p.tau = 0.0;
    p.horizon = 1;
    p.rescale_beta = false;
    const CounterRng base(4242);
    const int trials = 20000;
    int hits = 0;
    for (int r = 0; r < trials; ++r)
        hits += step(star, state, DefenseVector::zeros(5), p, base.derive(r))[0];
    CHECK(std::abs(hits / static_cast<double>(trials) - 0.35) < 0.01);
}

TEST_CASE("run_trajectory: threshold contagion from a seeded node fills the graph") {
    Network path(4, {{0, 1}, {1, 2}, {2, 3}});
    DynamicsParams p = si_params(6);
    auto traj = run_trajectory(path, DefenseVector::zeros(4), AttackVector::point(4, 0), p,
                               CounterRng(11));
    REQUIRE(traj.fractions.size() == 7);
    CHECK(traj.fractions.front() == doctest::Approx(0.25));
    for (std::size_t t = 1; t < traj.fractions.size(); ++t)
        CHECK(traj.fractions[t] >= traj.fractions[t - 1]);  // SI is monotone
    CHECK(traj.fractions.back() == doctest::Approx(1.0));
    CHECK(std::accumulate(traj.final_state.begin(), traj.final_state.end(), 0) == 4);
}

TEST_CASE("run_trajectory: asymptotic value averages the documented tail window") {
    Network k2(2, {{0, 1}});
    DynamicsParams p = si_params(50);
    auto traj = run_trajectory(k2, DefenseVector::zeros(2), AttackVector::point(2, 0), p,
                               CounterRng(13));
    const int window = 10;  // max(10, 50 / 10)
    double tail = 0.0;
    for (int t = 51 - window; t <= 50; ++t) tail += traj.fractions[t];
    CHECK(traj.asymptotic == doctest::Approx(tail / window).epsilon(1e-12));
}

TEST_CASE("simulate: complete protection gives the zero trajectory") {
    Network net = example_six_node_network();
    auto agg = simulate(net, DefenseVector({1, 1, 1, 1, 1, 1}), AttackVector::uniform(6),
                        si_params(20), 50, 3);
    for (double f : agg.mean_fractions) CHECK(f == 0.0);
    CHECK(agg.mean_asymptotic == 0.0);
}

TEST_CASE("simulate: isolated node frequency tracks phi (1 - q)") {
    Network single(1, {});
    DynamicsParams p = si_params(5);
    auto agg = simulate(single, DefenseVector({0.3}), AttackVector({1.0}), p, 20000, 97);
    // gamma = 1 and no neighbors: the state is frozen at the initial draw
    CHECK(std::abs(agg.mean_asymptotic - 0.7) < 0.01);
}

TEST_CASE("simulate: deterministic and worker-count independent") {
    Network net = example_six_node_network();
    DynamicsParams p = si_params(15);
    p.gamma = 0.6;
    p.tau = 0.0;
    DefenseVector q({0.2, 0.4, 0.1, 0.3, 0.5, 0.0});
    auto a = simulate(net, q, AttackVector::uniform(6), p, 64, 31, 1);
    auto b = simulate(net, q, AttackVector::uniform(6), p, 64, 31, 1);
    auto c = simulate(net, q, AttackVector::uniform(6), p, 64, 31, 4);
    CHECK(a.mean_fractions == b.mean_fractions);
    CHECK(a.mean_fractions == c.mean_fractions);
    CHECK(a.per_run_asymptotic == c.per_run_asymptotic);
}

TEST_CASE("compare_strategies: zero budget collapses all arms onto one trajectory") {
    Network net = example_six_node_network();
    DynamicsParams p = si_params(10);
    p.gamma = 0.5;
    p.tau = 0.0;
    auto cmp = compare_strategies(net, DefenseVector::zeros(6), AttackVector::uniform(6), p,
                                  32, 5);
    CHECK(cmp.none.mean_fractions == cmp.optimal.mean_fractions);
    CHECK(cmp.none.mean_fractions == cmp.reshuffled.mean_fractions);
}

TEST_CASE("compare_strategies: constant budget is permutation invariant") {
    Network net = example_six_node_network();
    DynamicsParams p = si_params(10);
    p.gamma = 0.5;
    p.tau = 0.0;
    auto cmp = compare_strategies(net, DefenseVector({0.4, 0.4, 0.4, 0.4, 0.4, 0.4}),
                                  AttackVector::uniform(6), p, 32, 5,
                                  ReshuffleKind::Permutation);
    CHECK(cmp.optimal.mean_fractions == cmp.reshuffled.mean_fractions);
}

TEST_CASE("compare_strategies: protection lowers the mean trajectory") {
    Network net = random_graph(20, 0.2, 71);
    DynamicsParams p;
    p.beta = 0.9;
    p.gamma = 0.8;
    p.tau = 0.0;
    p.horizon = 30;
    auto cmp = compare_strategies(net, DefenseVector(std::vector<double>(20, 0.6)),
                                  AttackVector::uniform(20), p, 100, 17);
    CHECK(cmp.optimal.mean_asymptotic <= cmp.none.mean_asymptotic);
    CHECK(cmp.optimal.mean_asymptotic < cmp.none.mean_asymptotic - 0.01);
}

TEST_CASE("binary defense: eventually-infected set equals the static infected set") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + trial % 6;  // 5..10
        Network net = random_graph(n, 0.35, 5000 + trial);
        RngStream rng(600 + trial, 4);
        std::vector<double> q(n);
        std::vector<std::uint8_t> susceptible(n);
        for (int i = 0; i < n; ++i) {
            q[i] = rng.uniform() < 0.4 ? 1.0 : 0.0;
            susceptible[i] = q[i] == 0.0;
        }
        int seed_node = static_cast<int>(rng.below(n));
        q[seed_node] = 0.0;
        susceptible[seed_node] = 1;

        DynamicsParams p = si_params(n + 2);
        p.rescale_beta = true;  // q = 1 must block contact infection too
        auto traj = run_trajectory(net, DefenseVector(q), AttackVector::point(n, seed_node),
                                   p, CounterRng(9000 + trial));

        auto reach = infected_set(net, susceptible, seed_node);
        std::vector<std::uint8_t> expected(n, 0);
        for (int v : reach) expected[v] = 1;
        CHECK(traj.final_state == expected);
    }
}

TEST_CASE("parameter validation") {
    Network k2(2, {{0, 1}});
    DynamicsParams p = si_params(5);
    p.beta = 1.5;
    CHECK_THROWS_AS(
        run_trajectory(k2, DefenseVector::zeros(2), AttackVector::uniform(2), p, CounterRng(1)),
        std::invalid_argument);
    DynamicsParams h = si_params(5);
    h.horizon = 0;
    CHECK_THROWS_AS(
        run_trajectory(k2, DefenseVector::zeros(2), AttackVector::uniform(2), h, CounterRng(1)),
        std::invalid_argument);
    CHECK_THROWS_AS(simulate(k2, DefenseVector::zeros(2), AttackVector::uniform(2),
                             si_params(5), 0, 1),
                    std::invalid_argument);
}
