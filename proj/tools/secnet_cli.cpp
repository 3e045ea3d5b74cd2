#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "secnet/config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace secnet;

namespace {

constexpr int kExitCompute = 1;
constexpr int kExitConfig = 2;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

struct Context {
    RunConfig config;
    fs::path out_dir;
};

Context load(const std::string& config_path, const std::string& out_override,
             long long seed_override, int workers_override) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Context ctx;
    ctx.config = parse_config(buffer.str());
    if (seed_override >= 0) ctx.config.seed = static_cast<std::uint64_t>(seed_override);
    if (workers_override > 0) ctx.config.workers = workers_override;
    ctx.out_dir = out_override.empty() ? fs::path(".") : fs::path(out_override);
    fs::create_directories(ctx.out_dir);
    return ctx;
}

int cmd_generate(const Context& ctx) {
    const Network net = generate_topology(ctx.config.topology);
    write_file(ctx.out_dir / "network.edges", to_edge_list(net));
    write_file(ctx.out_dir / "config.json", serialize_config(ctx.config));
    return 0;
}

int cmd_metrics(const Context& ctx) {
    const Network net = generate_topology(ctx.config.topology);
    const auto a = one_point_protection(net);
    const auto b = two_point_protection(net, a);
    const int n = net.size();

    std::ostringstream one;
    for (int j = 0; j < n; ++j) {
        auto entries = a.entries(j);
        std::sort(entries.begin(), entries.end());
        for (const auto& [i, k] : entries)
            one << "{\"j\": " << j << ", \"i\": " << i << ", \"k\": " << k << "}\n";
    }
    write_file(ctx.out_dir / "one_point.jsonl", one.str());

    std::ostringstream two;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto entries = b.entries(i, j);
            std::sort(entries.begin(), entries.end());
            for (const auto& [k, s] : entries)
                two << "{\"i\": " << i << ", \"j\": " << j << ", \"k\": " << k
                    << ", \"s\": " << s << "}\n";
        }
    }
    write_file(ctx.out_dir / "two_point.jsonl", two.str());

    if (!ctx.config.metrics_v.empty() && !ctx.config.metrics_w.empty()) {
        const auto& v = ctx.config.metrics_v;
        const auto& w = ctx.config.metrics_w;
        std::ostringstream red;
        red << "i,a_scalar\n";
        for (int i = 0; i < n; ++i) red << i << "," << fmt(reduce_a_scalar(a, i, v, w)) << "\n";
        write_file(ctx.out_dir / "reductions_a.csv", red.str());
        std::ostringstream redb;
        redb << "i,j,b_reduction\n";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                redb << i << "," << j << "," << fmt(reduce_b(b, a, i, j, v, w)) << "\n";
        write_file(ctx.out_dir / "reductions_b.csv", redb.str());
    }
    return 0;
}

int cmd_equilibrium(const Context& ctx) {
    const Network net = generate_topology(ctx.config.topology);
    const auto profiles = resolve_profiles(ctx.config, net);
    SolverOptions solver = ctx.config.solver;
    solver.risk = effective_risk(ctx.config, net.size());
    solver.seed = ctx.config.seed;
    solver.workers = ctx.config.workers;
    const EquilibriumResult eq =
        solver.method == SolverOptions::Method::ClosedForm
            ? asymptotic_sse(net, profiles, ctx.config.game.alpha, ctx.config.game.theta,
                             solver)
            : numerical_sse(net, profiles, ctx.config.game.alpha, ctx.config.game.theta,
                            solver, ctx.config.game.defender_cost);

    json out;
    out["q"] = eq.q_star.q;
    out["q_raw"] = eq.q_raw;
    out["phi"] = eq.phi_star.phi;
    out["loss"] = eq.loss;
    out["utility"] = eq.utility;
    out["diagnostics"] = {{"method", eq.method},
                          {"variant", eq.variant},
                          {"iterations", eq.iterations},
                          {"out_of_box", eq.out_of_box},
                          {"converged", eq.converged},
                          {"attacker_interior", eq.attacker_interior},
                          {"condition_estimate", eq.condition_estimate}};
    write_file(ctx.out_dir / "equilibrium.json", out.dump(2) + "\n");

    std::ostringstream csv;
    csv << "node,q,phi\n";
    for (int i = 0; i < net.size(); ++i)
        csv << i << "," << fmt(eq.q_star.q[i]) << "," << fmt(eq.phi_star.phi[i]) << "\n";
    write_file(ctx.out_dir / "equilibrium.csv", csv.str());
    return 0;
}

int cmd_frontier(const Context& ctx, bool full) {
    const Network net = generate_topology(ctx.config.topology);
    const auto profiles = resolve_profiles(ctx.config, net);
    FrontierOptions options;
    options.solver = ctx.config.solver;
    options.solver.risk = effective_risk(ctx.config, net.size());
    options.solver.seed = ctx.config.seed;
    options.solver.workers = ctx.config.workers;
    options.defender_cost = ctx.config.game.defender_cost;
    options.warm_start = ctx.config.frontier_warm_start;
    options.keep_strategies = full;
    auto grid = ctx.config.alpha_grid;
    if (grid.empty()) grid = log_alpha_grid(1.0, 1000.0, 25);
    const auto points =
        efficient_frontier(net, profiles, ctx.config.game.theta, grid, options);

    std::ostringstream csv;
    csv << "alpha,cost,risk_z,risk_eta,flag\n";
    for (const auto& pt : points)
        csv << fmt(pt.alpha) << "," << fmt(pt.cost) << "," << fmt(pt.risk_z) << ","
            << fmt(pt.risk_eta) << "," << (pt.solver_failed ? "failed" : "ok") << "\n";
    write_file(ctx.out_dir / "frontier.csv", csv.str());

    if (full) {
        json side = json::array();
        for (const auto& pt : points)
            side.push_back({{"alpha", pt.alpha},
                            {"cost", pt.cost},
                            {"risk_z", pt.risk_z},
                            {"risk_eta", pt.risk_eta},
                            {"failed", pt.solver_failed},
                            {"q", pt.q},
                            {"phi", pt.phi}});
        write_file(ctx.out_dir / "frontier_full.json", side.dump(2) + "\n");
    }
    return 0;
}

DefenseVector resolve_defense(const Context& ctx, const Network& net,
                              const ValueProfiles& profiles) {
    if (!ctx.config.fixed_q.empty()) return DefenseVector(ctx.config.fixed_q);
    SolverOptions solver = ctx.config.solver;
    solver.risk = effective_risk(ctx.config, net.size());
    solver.seed = ctx.config.seed;
    solver.workers = ctx.config.workers;
    const auto eq = solver.method == SolverOptions::Method::ClosedForm
                        ? asymptotic_sse(net, profiles, ctx.config.game.alpha,
                                         ctx.config.game.theta, solver)
                        : numerical_sse(net, profiles, ctx.config.game.alpha,
                                        ctx.config.game.theta, solver,
                                        ctx.config.game.defender_cost);
    return eq.q_star;
}

int cmd_simulate(const Context& ctx, bool full) {
    const Network net = generate_topology(ctx.config.topology);
    const auto profiles = resolve_profiles(ctx.config, net);
    const auto phi = resolve_attack(ctx.config, net);
    const auto q = resolve_defense(ctx, net, profiles);
    const auto agg = simulate(net, q, phi, ctx.config.dynamics, ctx.config.runs,
                              ctx.config.seed, ctx.config.workers);

    std::ostringstream csv;
    csv << "t,mean_fraction\n";
    for (std::size_t t = 0; t < agg.mean_fractions.size(); ++t)
        csv << t << "," << fmt(agg.mean_fractions[t]) << "\n";
    write_file(ctx.out_dir / "trajectory.csv", csv.str());

    if (full) {
        const auto runs = simulate_runs(net, q, phi, ctx.config.dynamics, ctx.config.runs,
                                        ctx.config.seed, ctx.config.workers);
        std::ostringstream lines;
        for (std::size_t r = 0; r < runs.size(); ++r) {
            json rec;
            rec["run"] = r;
            rec["fractions"] = runs[r].fractions;
            rec["asymptotic"] = runs[r].asymptotic;
            lines << rec.dump() << "\n";
        }
        write_file(ctx.out_dir / "runs.jsonl", lines.str());
    }
    return 0;
}

int cmd_compare(const Context& ctx) {
    const Network net = generate_topology(ctx.config.topology);
    const auto profiles = resolve_profiles(ctx.config, net);
    const auto phi = resolve_attack(ctx.config, net);
    const auto q = resolve_defense(ctx, net, profiles);
    const auto cmp = compare_strategies(net, q, phi, ctx.config.dynamics, ctx.config.runs,
                                        ctx.config.seed, ctx.config.reshuffle,
                                        ctx.config.workers);

    std::ostringstream csv;
    csv << "t,mean_fraction,strategy\n";
    auto dump = [&](const AggregatedTrajectory& agg, const char* name) {
        for (std::size_t t = 0; t < agg.mean_fractions.size(); ++t)
            csv << t << "," << fmt(agg.mean_fractions[t]) << "," << name << "\n";
    };
    dump(cmp.none, "none");
    dump(cmp.optimal, "optimal");
    dump(cmp.reshuffled, "reshuffled");
    write_file(ctx.out_dir / "compare.csv", csv.str());

    json summary;
    summary["asymptotic"] = {{"none", cmp.none.mean_asymptotic},
                             {"optimal", cmp.optimal.mean_asymptotic},
                             {"reshuffled", cmp.reshuffled.mean_asymptotic}};
    write_file(ctx.out_dir / "compare_summary.json", summary.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network cyber-defense allocation: protection metrics, Stackelberg "
                 "equilibria, efficient frontiers, and contagion simulation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    long long seed_override = -1;
    int workers_override = 0;
    bool full = false;
    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--out", out_dir, "Output directory (default: current)");
    app.add_option("--seed", seed_override, "Override the config master seed");
    app.add_option("--workers", workers_override, "Worker thread count");
    app.add_flag("--full", full, "Emit full per-point / per-run artifacts");

    auto* generate = app.add_subcommand("generate", "Generate the configured topology");
    auto* metrics = app.add_subcommand("metrics", "Protection tensor dumps and reductions");
    auto* equilibrium = app.add_subcommand("equilibrium", "Solve for the SSE allocation");
    auto* frontier = app.add_subcommand("frontier", "Sweep alpha for the efficient frontier");
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the contagion dynamics");
    auto* compare = app.add_subcommand("compare", "Compare defense strategies dynamically");
    for (auto* sub : {generate, metrics, equilibrium, frontier, simulate_cmd, compare})
        sub->fallthrough();  // allow the global --config/--out/... after the verb

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    Context ctx;
    try {
        ctx = load(config_path, out_dir, seed_override, workers_override);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (generate->parsed()) return cmd_generate(ctx);
        if (metrics->parsed()) return cmd_metrics(ctx);
        if (equilibrium->parsed()) return cmd_equilibrium(ctx);
        if (frontier->parsed()) return cmd_frontier(ctx, full);
        if (simulate_cmd->parsed()) return cmd_simulate(ctx, full);
        if (compare->parsed()) return cmd_compare(ctx);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitConfig;
}
