#ifndef SECNET_DYNAMICS_HPP
#define SECNET_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "secnet/graph.hpp"
#include "secnet/risk.hpp"

namespace secnet {

// Transition-rule parameters. tau interpolates the activation noise
// Z = tau*delta + (1-tau)*u between a deterministic threshold (tau=1) and
// SIS-style uniform noise (tau=0); gamma is the persistence probability.
struct DynamicsParams {
    double beta = 1.0;
    double gamma = 1.0;
    double delta = 0.0;
    double tau = 0.0;
    int horizon = 50;
    bool rescale_beta = true;  // beta -> (1 - q_i) * beta
};

struct Trajectory {
    std::vector<double> fractions;         // length horizon + 1
    std::vector<std::uint8_t> final_state;
    double asymptotic = 0.0;  // mean fraction over the last max(10, T/10) steps
};

struct AggregatedTrajectory {
    std::vector<double> mean_fractions;
    double mean_asymptotic = 0.0;
    std::vector<double> per_run_asymptotic;
};

// Independent Bernoulli initial infections with success phi_i * (1 - q_i).
// Draw i uses counter i of the supplied generator, so two defenses under the
// same generator share the underlying uniforms (common random numbers).
std::vector<std::uint8_t> sample_initial(const Network& net, const DefenseVector& q,
                                         const AttackVector& phi, const CounterRng& rng);

// One synchronous update of the transition rule. Node i consumes counters
// 2i (persistence draw) and 2i+1 (activation draw). Theta(0) = 0: zero
// contact pressure never infects, and isolated nodes never infect by contact.
std::vector<std::uint8_t> step(const Network& net, const std::vector<std::uint8_t>& state,
                               const DefenseVector& q, const DynamicsParams& params,
                               const CounterRng& rng);

Trajectory run_trajectory(const Network& net, const DefenseVector& q, const AttackVector& phi,
                          const DynamicsParams& params, const CounterRng& run_rng);

std::vector<Trajectory> simulate_runs(const Network& net, const DefenseVector& q,
                                      const AttackVector& phi, const DynamicsParams& params,
                                      int runs, std::uint64_t seed, int workers = 1);

AggregatedTrajectory simulate(const Network& net, const DefenseVector& q, const AttackVector& phi,
                              const DynamicsParams& params, int runs, std::uint64_t seed,
                              int workers = 1);

enum class ReshuffleKind { Permutation, SimplexRedistribution };

struct StrategyComparison {
    AggregatedTrajectory none;
    AggregatedTrajectory optimal;
    AggregatedTrajectory reshuffled;
};

// Runs the simulator under no protection, the supplied budget, and a random
// reshuffling of that budget (fresh permutation per run). All three share
// the same random streams per run.
StrategyComparison compare_strategies(const Network& net, const DefenseVector& budget_q,
                                      const AttackVector& phi, const DynamicsParams& params,
                                      int runs, std::uint64_t seed,
                                      ReshuffleKind reshuffle = ReshuffleKind::Permutation,
                                      int workers = 1);

}  // namespace secnet

#endif
