#ifndef SECNET_FRONTIER_HPP
#define SECNET_FRONTIER_HPP

#include <vector>

#include "secnet/equil.hpp"

namespace secnet {

struct FrontierPoint {
    double alpha = 0.0;
    double cost = 0.0;      // C_d(q*) at equilibrium
    double risk_z = 0.0;    // sum_i z_i R_i at equilibrium
    double risk_eta = 0.0;  // sum_i eta_i R_i at equilibrium
    bool solver_failed = false;
    std::vector<double> q;
    std::vector<double> phi;
};

struct FrontierOptions {
    SolverOptions solver;
    CostKind defender_cost = CostKind::Quadratic;
    bool warm_start = true;  // chain the previous q* in as an extra start
    bool keep_strategies = false;
};

// Sweep the budget multiplier over alpha_grid (strictly increasing,
// positive) and record the equilibrium risk/cost trade-off at each point.
// A solver failure flags the point and the sweep continues.
std::vector<FrontierPoint> efficient_frontier(const Network& net, const ValueProfiles& profiles,
                                              double theta, const std::vector<double>& alpha_grid,
                                              const FrontierOptions& options);

// Logarithmic grid helper (25 points by default in the CLI).
std::vector<double> log_alpha_grid(double lo, double hi, int points);

}  // namespace secnet

#endif
