#ifndef SECNET_CONFIG_HPP
#define SECNET_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "secnet/dynamics.hpp"
#include "secnet/equil.hpp"
#include "secnet/frontier.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/risk.hpp"

namespace secnet {

// A run is a pure function of (config, seed): identical configs produce
// byte-identical output files.
struct RunConfig {
    TopologySpec topology;

    // Profiles: either an explicit vector or a named preset
    // ("uniform", "ones", "indicator:<list>", "level:<k>").
    std::vector<double> z;
    std::vector<double> eta;
    std::string z_preset;
    std::string eta_preset;
    std::vector<double> phi;  // optional fixed attack distribution for simulate
    std::string phi_preset;

    GameParams game;
    RiskSpec risk;
    bool risk_specified = false;
    SolverOptions solver;

    std::vector<double> alpha_grid;
    bool frontier_warm_start = true;

    DynamicsParams dynamics;
    int runs = 200;
    ReshuffleKind reshuffle = ReshuffleKind::Permutation;
    std::vector<double> fixed_q;  // optional defense override for simulate/compare

    // metrics reduction vectors (optional)
    std::vector<double> metrics_v;
    std::vector<double> metrics_w;

    std::uint64_t seed = 0;
    int workers = 1;
};

// Throws std::invalid_argument with a "line L, column C" diagnostic on
// malformed JSON.
RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& config);

ValueProfiles resolve_profiles(const RunConfig& config, const Network& net);
AttackVector resolve_attack(const RunConfig& config, const Network& net);

// Risk spec with the documented defaults filled in for the given size:
// exact for n <= 16, walk-count (L = 4, exact_distinct) above.
RiskSpec effective_risk(const RunConfig& config, int n);

}  // namespace secnet

#endif
