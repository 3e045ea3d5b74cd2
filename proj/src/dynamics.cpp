#include "secnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>

namespace secnet {

namespace {

void check_params(const DynamicsParams& p) {
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in01(p.beta) || !in01(p.gamma) || !in01(p.delta) || !in01(p.tau))
        throw std::invalid_argument("dynamics rates must lie in [0,1]");
    if (p.horizon < 1) throw std::invalid_argument("horizon must be positive");
}

constexpr std::uint64_t kInitialStream = 0x494e4954ULL;
constexpr std::uint64_t kStepStream = 0x53544550ULL;
constexpr std::uint64_t kPermStream = 0x5045524dULL;

double fraction(const std::vector<std::uint8_t>& state) {
    return static_cast<double>(std::accumulate(state.begin(), state.end(), 0)) /
           static_cast<double>(state.size());
}

}  // namespace

std::vector<std::uint8_t> sample_initial(const Network& net, const DefenseVector& q,
                                         const AttackVector& phi, const CounterRng& rng) {
    const int n = net.size();
    if (q.size() != n || phi.size() != n) throw std::invalid_argument("dimension mismatch");
    std::vector<std::uint8_t> state(n);
    for (int i = 0; i < n; ++i)
        state[i] = rng.uniform(static_cast<std::uint64_t>(i)) < phi.phi[i] * (1.0 - q.q[i]);
    return state;
}

std::vector<std::uint8_t> step(const Network& net, const std::vector<std::uint8_t>& state,
                               const DefenseVector& q, const DynamicsParams& params,
                               const CounterRng& rng) {
    const int n = net.size();
    if (static_cast<int>(state.size()) != n || q.size() != n)
        throw std::invalid_argument("dimension mismatch");
    std::vector<std::uint8_t> next(n, 0);
    for (int i = 0; i < n; ++i) {
        if (state[i]) {
            const double u = rng.uniform(2 * static_cast<std::uint64_t>(i));
            next[i] = params.gamma - u > 0.0;
        } else {
            const int d = net.degree(i);
            if (d == 0) continue;
            int infected_neighbors = 0;
            for (int j : net.neighbors(i)) infected_neighbors += state[j];
            const double beta_i =
                params.rescale_beta ? (1.0 - q.q[i]) * params.beta : params.beta;
            const double pressure =
                beta_i * static_cast<double>(infected_neighbors) / static_cast<double>(d);
            const double u = rng.uniform(2 * static_cast<std::uint64_t>(i) + 1);
            const double z = params.tau * params.delta + (1.0 - params.tau) * u;
            next[i] = pressure - z > 0.0;
        }
    }
    return next;
}

Trajectory run_trajectory(const Network& net, const DefenseVector& q, const AttackVector& phi,
                          const DynamicsParams& params, const CounterRng& run_rng) {
    check_params(params);
    Trajectory traj;
    auto state = sample_initial(net, q, phi, run_rng.derive(kInitialStream));
    traj.fractions.reserve(params.horizon + 1);
    traj.fractions.push_back(fraction(state));
    const CounterRng steps = run_rng.derive(kStepStream);
    for (int t = 0; t < params.horizon; ++t) {
        state = step(net, state, q, params, steps.derive(static_cast<std::uint64_t>(t)));
        traj.fractions.push_back(fraction(state));
    }
    traj.final_state = std::move(state);
    const int window = std::min<int>(params.horizon + 1,
                                     std::max(10, params.horizon / 10));
    double tail = 0.0;
    for (int t = params.horizon + 1 - window; t <= params.horizon; ++t)
        tail += traj.fractions[t];
    traj.asymptotic = tail / window;
    return traj;
}

std::vector<Trajectory> simulate_runs(const Network& net, const DefenseVector& q,
                                      const AttackVector& phi, const DynamicsParams& params,
                                      int runs, std::uint64_t seed, int workers) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    check_params(params);
    const CounterRng base(seed);
    std::vector<Trajectory> out(runs);
    auto work = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r)
            out[r] = run_trajectory(net, q, phi, params,
                                    base.derive(static_cast<std::uint64_t>(r)));
    };
    if (workers <= 1) {
        work(0, runs);
    } else {
        std::vector<std::future<void>> tasks;
        const int chunk = (runs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(runs, lo + chunk);
            if (lo >= hi) break;
            tasks.push_back(std::async(std::launch::async, work, lo, hi));
        }
        for (auto& t : tasks) t.get();
    }
    return out;
}

namespace {

AggregatedTrajectory aggregate(const std::vector<Trajectory>& runs) {
    AggregatedTrajectory agg;
    if (runs.empty()) return agg;
    agg.mean_fractions.assign(runs.front().fractions.size(), 0.0);
    agg.per_run_asymptotic.reserve(runs.size());
    for (const auto& tr : runs) {
        for (std::size_t t = 0; t < tr.fractions.size(); ++t)
            agg.mean_fractions[t] += tr.fractions[t];
        agg.per_run_asymptotic.push_back(tr.asymptotic);
        agg.mean_asymptotic += tr.asymptotic;
    }
    for (double& v : agg.mean_fractions) v /= static_cast<double>(runs.size());
    agg.mean_asymptotic /= static_cast<double>(runs.size());
    return agg;
}

}  // namespace

AggregatedTrajectory simulate(const Network& net, const DefenseVector& q, const AttackVector& phi,
                              const DynamicsParams& params, int runs, std::uint64_t seed,
                              int workers) {
    return aggregate(simulate_runs(net, q, phi, params, runs, seed, workers));
}

StrategyComparison compare_strategies(const Network& net, const DefenseVector& budget_q,
                                      const AttackVector& phi, const DynamicsParams& params,
                                      int runs, std::uint64_t seed, ReshuffleKind reshuffle,
                                      int workers) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    check_params(params);
    const int n = net.size();
    if (budget_q.size() != n) throw std::invalid_argument("dimension mismatch");
    const CounterRng base(seed);
    const DefenseVector none = DefenseVector::zeros(n);

    std::vector<Trajectory> runs_none(runs), runs_opt(runs), runs_shuf(runs);
    auto work = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r) {
            const CounterRng run_rng = base.derive(static_cast<std::uint64_t>(r));
            runs_none[r] = run_trajectory(net, none, phi, params, run_rng);
            runs_opt[r] = run_trajectory(net, budget_q, phi, params, run_rng);

            std::vector<double> q = budget_q.q;
            RngStream perm(run_rng.derive(kPermStream));
            if (reshuffle == ReshuffleKind::Permutation) {
                for (int i = n - 1; i > 0; --i)
                    std::swap(q[i], q[perm.below(static_cast<std::uint64_t>(i) + 1)]);
            } else {
                // redistribute the same total budget uniformly on the simplex
                const double total = std::accumulate(q.begin(), q.end(), 0.0);
                std::vector<double> expo(n);
                double norm = 0.0;
                for (double& e : expo) {
                    e = -std::log(std::max(perm.uniform(), 1e-300));
                    norm += e;
                }
                for (int i = 0; i < n; ++i) q[i] = std::min(1.0, total * expo[i] / norm);
            }
            runs_shuf[r] = run_trajectory(net, DefenseVector(q), phi, params, run_rng);
        }
    };
    if (workers <= 1) {
        work(0, runs);
    } else {
        std::vector<std::future<void>> tasks;
        const int chunk = (runs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(runs, lo + chunk);
            if (lo >= hi) break;
            tasks.push_back(std::async(std::launch::async, work, lo, hi));
        }
        for (auto& t : tasks) t.get();
    }
    return {aggregate(runs_none), aggregate(runs_opt), aggregate(runs_shuf)};
}

}  // namespace secnet
