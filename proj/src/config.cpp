#include "secnet/config.hpp"

#include <json.hpp>
#include <stdexcept>

namespace secnet {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

TopologySpec parse_topology(const json& j) {
    TopologySpec spec;
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "explicit") {
        spec.variant = TopologySpec::Variant::Explicit;
        spec.n = j.at("n").get<int>();
        for (const auto& e : j.at("edges"))
            spec.edge_list.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else if (variant == "erdos_renyi") {
        spec.variant = TopologySpec::Variant::ErdosRenyi;
        spec.n = j.at("n").get<int>();
        spec.connectivity = j.at("c").get<double>();
        spec.seed = j.value("seed", 0ULL);
    } else if (variant == "tree") {
        spec.variant = TopologySpec::Variant::Tree;
        spec.branching = j.at("branching").get<int>();
        spec.levels = j.at("levels").get<int>();
    } else if (variant == "community") {
        spec.variant = TopologySpec::Variant::Community;
        spec.group_sizes = j.at("groups").get<std::vector<int>>();
        if (j.contains("bridges"))
            for (const auto& e : j.at("bridges"))
                spec.bridges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else {
        throw std::invalid_argument("unknown topology variant: " + variant);
    }
    return spec;
}

json topology_to_json(const TopologySpec& spec) {
    json j;
    switch (spec.variant) {
        case TopologySpec::Variant::Explicit: {
            j["variant"] = "explicit";
            j["n"] = spec.n;
            json edges = json::array();
            for (const auto& [a, b] : spec.edge_list) edges.push_back({a, b});
            j["edges"] = edges;
            break;
        }
        case TopologySpec::Variant::ErdosRenyi:
            j["variant"] = "erdos_renyi";
            j["n"] = spec.n;
            j["c"] = spec.connectivity;
            j["seed"] = spec.seed;
            break;
        case TopologySpec::Variant::Tree:
            j["variant"] = "tree";
            j["branching"] = spec.branching;
            j["levels"] = spec.levels;
            break;
        case TopologySpec::Variant::Community: {
            j["variant"] = "community";
            j["groups"] = spec.group_sizes;
            json bridges = json::array();
            for (const auto& [a, b] : spec.bridges) bridges.push_back({a, b});
            j["bridges"] = bridges;
            break;
        }
    }
    return j;
}

void parse_profile(const json& j, const char* key, std::vector<double>& values,
                   std::string& preset) {
    if (!j.contains(key)) return;
    if (j.at(key).is_string())
        preset = j.at(key).get<std::string>();
    else
        values = j.at(key).get<std::vector<double>>();
}

RiskSpec parse_risk(const json& j) {
    RiskSpec spec;
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "exact") {
        spec.variant = RiskSpec::Variant::Exact;
    } else if (variant == "monte_carlo") {
        spec.variant = RiskSpec::Variant::MonteCarlo;
        spec.samples = j.at("samples").get<std::int64_t>();
        spec.seed = j.value("seed", 0ULL);
    } else if (variant == "walk") {
        spec.variant = RiskSpec::Variant::Walk;
        spec.horizon = j.value("L", 4);
        const std::string mode = j.value("mode", std::string("exact_distinct"));
        if (mode == "exact_distinct")
            spec.mode = WalkMode::ExactDistinct;
        else if (mode == "matrix_power")
            spec.mode = WalkMode::MatrixPower;
        else
            throw std::invalid_argument("unknown walk mode: " + mode);
        spec.include_closed_walks = j.value("include_closed_walks", true);
    } else if (variant == "activation") {
        spec.variant = RiskSpec::Variant::Activation;
        spec.activation = j.at("f").get<std::string>();
        spec.horizon = j.value("L", 4);
        spec.samples = j.value("samples", std::int64_t{100000});
        spec.seed = j.value("seed", 0ULL);
    } else {
        throw std::invalid_argument("unknown risk variant: " + variant);
    }
    return spec;
}

json risk_to_json(const RiskSpec& spec) {
    json j;
    switch (spec.variant) {
        case RiskSpec::Variant::Exact:
            j["variant"] = "exact";
            break;
        case RiskSpec::Variant::MonteCarlo:
            j["variant"] = "monte_carlo";
            j["samples"] = spec.samples;
            j["seed"] = spec.seed;
            break;
        case RiskSpec::Variant::Walk:
            j["variant"] = "walk";
            j["L"] = spec.horizon;
            j["mode"] = spec.mode == WalkMode::ExactDistinct ? "exact_distinct"
                                                             : "matrix_power";
            j["include_closed_walks"] = spec.include_closed_walks;
            break;
        case RiskSpec::Variant::Activation:
            j["variant"] = "activation";
            j["f"] = spec.activation;
            j["L"] = spec.horizon;
            j["samples"] = spec.samples;
            j["seed"] = spec.seed;
            break;
    }
    return j;
}

void parse_solver(const json& j, SolverOptions& solver) {
    const std::string method = j.value("method", std::string("numerical"));
    if (method == "numerical" || method == "projected_gradient")
        solver.method = SolverOptions::Method::ProjectedGradient;
    else if (method == "closed_form")
        solver.method = SolverOptions::Method::ClosedForm;
    else
        throw std::invalid_argument("unknown solver method: " + method);
    const std::string order = j.value("order", std::string("full"));
    if (order == "first")
        solver.order = ClosedFormOrder::First;
    else if (order == "second")
        solver.order = ClosedFormOrder::Second;
    else if (order == "full")
        solver.order = ClosedFormOrder::Full;
    else
        throw std::invalid_argument("unknown closed-form order: " + order);
    const std::string variant = j.value("variant", std::string("proof"));
    if (variant == "proof")
        solver.variant = SystemVariant::Proof;
    else if (variant == "theorem")
        solver.variant = SystemVariant::Theorem;
    else
        throw std::invalid_argument("unknown system variant: " + variant);
    solver.tol = j.value("tol", 1e-7);
    solver.max_iters = j.value("max_iters", 10000);
    solver.random_starts = j.value("random_starts", 5);
    solver.fd_step = j.value("fd_step", 1e-5);
    if (solver.tol <= 0.0 || solver.fd_step <= 0.0)
        throw std::invalid_argument("solver tolerances must be positive");
}

json solver_to_json(const SolverOptions& solver) {
    json j;
    j["method"] = solver.method == SolverOptions::Method::ClosedForm ? "closed_form"
                                                                     : "numerical";
    j["order"] = solver.order == ClosedFormOrder::First    ? "first"
                 : solver.order == ClosedFormOrder::Second ? "second"
                                                           : "full";
    j["variant"] = solver.variant == SystemVariant::Proof ? "proof" : "theorem";
    j["tol"] = solver.tol;
    j["max_iters"] = solver.max_iters;
    j["random_starts"] = solver.random_starts;
    j["fd_step"] = solver.fd_step;
    return j;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw std::invalid_argument("config parse error at line " + std::to_string(line) +
                                    ", column " + std::to_string(col));
    }
    RunConfig config;
    try {
    config.topology = parse_topology(j.at("topology"));
    if (j.contains("profiles")) {
        const auto& p = j.at("profiles");
        parse_profile(p, "z", config.z, config.z_preset);
        parse_profile(p, "eta", config.eta, config.eta_preset);
        parse_profile(p, "phi", config.phi, config.phi_preset);
    }
    if (j.contains("game")) {
        const auto& g = j.at("game");
        config.game.alpha = g.value("alpha", 1.0);
        config.game.theta = g.value("theta", 1.0);
        const std::string cost = g.value("defender_cost", std::string("quadratic"));
        if (cost == "quadratic")
            config.game.defender_cost = CostKind::Quadratic;
        else if (cost == "l1")
            config.game.defender_cost = CostKind::L1;
        else
            throw std::invalid_argument("unknown defender cost: " + cost);
        if (config.game.alpha <= 0.0 || config.game.theta <= 0.0)
            throw std::invalid_argument("alpha and theta must be positive");
    }
    if (j.contains("risk")) {
        config.risk = parse_risk(j.at("risk"));
        config.risk_specified = true;
    }
    if (j.contains("solver")) parse_solver(j.at("solver"), config.solver);
    if (j.contains("frontier")) {
        const auto& f = j.at("frontier");
        if (f.contains("alpha_grid"))
            config.alpha_grid = f.at("alpha_grid").get<std::vector<double>>();
        else
            config.alpha_grid = log_alpha_grid(f.value("alpha_min", 1.0),
                                               f.value("alpha_max", 1000.0),
                                               f.value("points", 25));
        config.frontier_warm_start = f.value("warm_start", true);
    }
    if (j.contains("dynamics")) {
        const auto& d = j.at("dynamics");
        config.dynamics.beta = d.value("beta", 1.0);
        config.dynamics.gamma = d.value("gamma", 1.0);
        config.dynamics.delta = d.value("delta", 0.0);
        config.dynamics.tau = d.value("tau", 0.0);
        config.dynamics.horizon = d.value("horizon", 50);
        config.dynamics.rescale_beta = d.value("rescale_beta", true);
        config.runs = d.value("runs", 200);
        const std::string reshuffle = d.value("reshuffle", std::string("permutation"));
        if (reshuffle == "permutation")
            config.reshuffle = ReshuffleKind::Permutation;
        else if (reshuffle == "redistribution")
            config.reshuffle = ReshuffleKind::SimplexRedistribution;
        else
            throw std::invalid_argument("unknown reshuffle kind: " + reshuffle);
        if (d.contains("q")) config.fixed_q = d.at("q").get<std::vector<double>>();
    }
    if (j.contains("metrics")) {
        const auto& m = j.at("metrics");
        if (m.contains("v")) config.metrics_v = m.at("v").get<std::vector<double>>();
        if (m.contains("w")) config.metrics_w = m.at("w").get<std::vector<double>>();
    }
    config.seed = j.value("seed", 0ULL);
    config.workers = j.value("workers", 1);
    } catch (const json::exception& e) {
        // missing keys / wrong types are config errors, same as bad syntax
        throw std::invalid_argument(std::string("config error: ") + e.what());
    }
    return config;
}

std::string serialize_config(const RunConfig& config) {
    json j;
    j["topology"] = topology_to_json(config.topology);
    json profiles;
    if (!config.z_preset.empty())
        profiles["z"] = config.z_preset;
    else if (!config.z.empty())
        profiles["z"] = config.z;
    if (!config.eta_preset.empty())
        profiles["eta"] = config.eta_preset;
    else if (!config.eta.empty())
        profiles["eta"] = config.eta;
    if (!config.phi_preset.empty())
        profiles["phi"] = config.phi_preset;
    else if (!config.phi.empty())
        profiles["phi"] = config.phi;
    if (!profiles.empty()) j["profiles"] = profiles;
    j["game"]["alpha"] = config.game.alpha;
    j["game"]["theta"] = config.game.theta;
    j["game"]["defender_cost"] =
        config.game.defender_cost == CostKind::Quadratic ? "quadratic" : "l1";
    if (config.risk_specified) j["risk"] = risk_to_json(config.risk);
    j["solver"] = solver_to_json(config.solver);
    if (!config.alpha_grid.empty()) {
        j["frontier"]["alpha_grid"] = config.alpha_grid;
        j["frontier"]["warm_start"] = config.frontier_warm_start;
    }
    j["dynamics"]["beta"] = config.dynamics.beta;
    j["dynamics"]["gamma"] = config.dynamics.gamma;
    j["dynamics"]["delta"] = config.dynamics.delta;
    j["dynamics"]["tau"] = config.dynamics.tau;
    j["dynamics"]["horizon"] = config.dynamics.horizon;
    j["dynamics"]["rescale_beta"] = config.dynamics.rescale_beta;
    j["dynamics"]["runs"] = config.runs;
    j["dynamics"]["reshuffle"] =
        config.reshuffle == ReshuffleKind::Permutation ? "permutation" : "redistribution";
    if (!config.fixed_q.empty()) j["dynamics"]["q"] = config.fixed_q;
    if (!config.metrics_v.empty()) j["metrics"]["v"] = config.metrics_v;
    if (!config.metrics_w.empty()) j["metrics"]["w"] = config.metrics_w;
    j["seed"] = config.seed;
    j["workers"] = config.workers;
    return j.dump(2) + "\n";
}

ValueProfiles resolve_profiles(const RunConfig& config, const Network& net) {
    ValueProfiles profiles;
    if (!config.z_preset.empty())
        profiles.z = resolve_profile_preset(config.z_preset, net);
    else if (!config.z.empty())
        profiles.z = config.z;
    else
        profiles.z = resolve_profile_preset("uniform", net);
    if (!config.eta_preset.empty())
        profiles.eta = resolve_profile_preset(config.eta_preset, net);
    else if (!config.eta.empty())
        profiles.eta = config.eta;
    else
        profiles.eta = resolve_profile_preset("uniform", net);
    if (static_cast<int>(profiles.z.size()) != net.size() ||
        static_cast<int>(profiles.eta.size()) != net.size())
        throw std::invalid_argument("profile length does not match network size");
    return profiles;
}

AttackVector resolve_attack(const RunConfig& config, const Network& net) {
    if (!config.phi_preset.empty())
        return AttackVector(resolve_profile_preset(config.phi_preset, net));
    if (!config.phi.empty()) return AttackVector(config.phi);
    return AttackVector::uniform(net.size());
}

RiskSpec effective_risk(const RunConfig& config, int n) {
    if (config.risk_specified) return config.risk;
    RiskSpec spec;
    if (n <= kExactEnumerationLimit) {
        spec.variant = RiskSpec::Variant::Exact;
    } else {
        spec.variant = RiskSpec::Variant::Walk;
        spec.horizon = 4;
        spec.mode = WalkMode::ExactDistinct;
    }
    return spec;
}

}  // namespace secnet
