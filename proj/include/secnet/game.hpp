#ifndef SECNET_GAME_HPP
#define SECNET_GAME_HPP

#include <string>
#include <vector>

#include "secnet/graph.hpp"
#include "secnet/risk.hpp"

namespace secnet {

// Per-node importance weights: z for the defender, eta for the attacker.
// Neither is required to be normalized or nonnegative.
struct ValueProfiles {
    std::vector<double> z;
    std::vector<double> eta;
};

enum class CostKind { Quadratic, L1 };

struct GameParams {
    double alpha = 1.0;
    double theta = 1.0;
    CostKind defender_cost = CostKind::Quadratic;
    // attacker cost is fixed quadratic: the closed-form best response and
    // the asymptotic equilibrium both require it
};

double defender_cost(const DefenseVector& q, CostKind kind);

double attacker_utility(const Network& net, const AttackVector& phi, const DefenseVector& q,
                        const ValueProfiles& profiles, double theta, const RiskSpec& risk,
                        int workers = 1);

double defender_loss(const Network& net, const DefenseVector& q, const AttackVector& phi,
                     const ValueProfiles& profiles, double alpha, CostKind cost_kind,
                     const RiskSpec& risk, int workers = 1);

// Eta-weighted node reach P_i(q, eta), using the exact enumeration for
// n <= 16 and the walk-count risk otherwise (documented approximation).
std::vector<double> weighted_infection(const Network& net, const DefenseVector& q,
                                       const std::vector<double>& eta, const RiskSpec& risk);

struct BestResponse {
    AttackVector phi;
    bool interior;  // true when the unprojected closed form was feasible
};

// Closed-form attacker best response phi*_i = 1/n + (P_i(q,eta) - mean)/theta,
// projected onto the simplex by active-set reduction when infeasible.
BestResponse attacker_best_response(const Network& net, const DefenseVector& q,
                                    const ValueProfiles& profiles, double theta,
                                    const RiskSpec& risk);

// Named profile presets: "uniform", "indicator:<i,j,...>", "level:<k>"
// (1/|level k| on nodes at BFS depth k from node 0, for tree topologies).
std::vector<double> resolve_profile_preset(const std::string& name, const Network& net);

}  // namespace secnet

#endif
