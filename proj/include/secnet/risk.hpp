#ifndef SECNET_RISK_HPP
#define SECNET_RISK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "secnet/graph.hpp"
#include "secnet/rng.hpp"

namespace secnet {

// Defender investment, entries in [0,1].
struct DefenseVector {
    std::vector<double> q;
    explicit DefenseVector(std::vector<double> values);
    static DefenseVector zeros(int n) { return DefenseVector(std::vector<double>(n, 0.0)); }
    int size() const { return static_cast<int>(q.size()); }
};

// Attack distribution on the simplex.
struct AttackVector {
    std::vector<double> phi;
    explicit AttackVector(std::vector<double> values);
    static AttackVector uniform(int n) {
        return AttackVector(std::vector<double>(n, 1.0 / n));
    }
    static AttackVector point(int n, int s);
    int size() const { return static_cast<int>(phi.size()); }
};

enum class RiskKind { Probability, WalkCount, Activation };

struct RiskVector {
    std::vector<double> r;
    RiskKind kind = RiskKind::Probability;
};

enum class WalkMode { ExactDistinct, MatrixPower };

struct RiskSpec {
    enum class Variant { Exact, MonteCarlo, Walk, Activation };
    Variant variant = Variant::Exact;
    // monte_carlo / activation
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    // walk / activation
    int horizon = 4;
    WalkMode mode = WalkMode::ExactDistinct;
    bool include_closed_walks = true;
    std::string activation = "step";
};

constexpr int kExactEnumerationLimit = 16;

// Nodes infected for a given susceptibility realization x and seed s:
// empty if the seed is immune, otherwise the seed's connected component in
// the subgraph induced by susceptible nodes.
std::vector<int> infected_set(const Network& net, const std::vector<std::uint8_t>& x, int s);

// Exact P_i by enumeration over all 2^n susceptibility states. The weight
// vector need not be a distribution (eta-weighted variants reuse this).
// Requires n <= kExactEnumerationLimit.
std::vector<double> infection_probability_exact(const Network& net, const DefenseVector& q,
                                                const std::vector<double>& weights);
RiskVector infection_probability_exact(const Network& net, const DefenseVector& q,
                                       const AttackVector& phi);

RiskVector infection_probability_mc(const Network& net, const DefenseVector& q,
                                    const AttackVector& phi, std::int64_t samples,
                                    std::uint64_t seed, int workers = 1);

// Expected number of length-<=L susceptible walks from each node to the
// seed. ExactDistinct multiplies (1-q) once per distinct node on a walk;
// MatrixPower multiplies per occurrence (a documented lower bound for
// q in [0,1], exact when no walk revisits a node).
std::vector<double> walk_count_risk(const Network& net, const DefenseVector& q,
                                    const std::vector<double>& weights, int L, WalkMode mode,
                                    bool include_closed_walks = true);
RiskVector walk_count_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                           int L, WalkMode mode, bool include_closed_walks = true);

// Monte-Carlo estimate of E[f(N^L_i)] for a named non-decreasing activation
// f. When include_seed_self is set, a susceptible seed counts itself once
// (the trivial walk), so f = step recovers the infection-probability semantics.
RiskVector activation_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                           const std::string& f, int L, std::int64_t samples, std::uint64_t seed,
                           bool include_seed_self = true, int workers = 1);

// Conditional-reach decomposition, by exhaustive enumeration:
//   P_i = (1 - q_i) * p_tilde_i
//   p_tilde_j(q) = p_tilde_j(q with q_i -> 1) + (1 - q_i) * q_ji
struct ReachDecomposition {
    double p_tilde_i;
    double q_ji;
};
ReachDecomposition reach_decomposition(const Network& net, const DefenseVector& q,
                                       const AttackVector& phi, int i, int j);

// P_i conditioned on node i being susceptible, with optional forcing of
// another node's susceptibility (-1 = no forcing). Exposed for oracles.
double reach_probability(const Network& net, const DefenseVector& q,
                         const std::vector<double>& weights, int i, int forced_node = -1,
                         int forced_value = 1);

RiskVector evaluate_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                         const RiskSpec& spec, int workers = 1);

}  // namespace secnet

#endif
