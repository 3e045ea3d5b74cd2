#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secnet/config.hpp"

namespace py = pybind11;
using namespace secnet;

namespace {

RiskSpec make_risk_spec(const std::string& variant, std::int64_t samples, std::uint64_t seed,
                        int horizon, const std::string& mode, bool include_closed_walks,
                        const std::string& activation) {
    RiskSpec spec;
    if (variant == "exact")
        spec.variant = RiskSpec::Variant::Exact;
    else if (variant == "monte_carlo")
        spec.variant = RiskSpec::Variant::MonteCarlo;
    else if (variant == "walk")
        spec.variant = RiskSpec::Variant::Walk;
    else if (variant == "activation")
        spec.variant = RiskSpec::Variant::Activation;
    else
        throw std::invalid_argument("unknown risk variant: " + variant);
    spec.samples = samples;
    spec.seed = seed;
    spec.horizon = horizon;
    if (mode == "exact_distinct")
        spec.mode = WalkMode::ExactDistinct;
    else if (mode == "matrix_power")
        spec.mode = WalkMode::MatrixPower;
    else
        throw std::invalid_argument("unknown walk mode: " + mode);
    spec.include_closed_walks = include_closed_walks;
    spec.activation = activation;
    return spec;
}

SolverOptions make_solver_options(const std::string& method, const std::string& order,
                                  const std::string& variant, const RiskSpec& risk, double tol,
                                  int max_iters, int random_starts, std::uint64_t seed,
                                  int workers) {
    SolverOptions opt;
    if (method == "closed_form")
        opt.method = SolverOptions::Method::ClosedForm;
    else if (method == "projected_gradient")
        opt.method = SolverOptions::Method::ProjectedGradient;
    else
        throw std::invalid_argument("unknown solver method: " + method);
    if (order == "first")
        opt.order = ClosedFormOrder::First;
    else if (order == "second")
        opt.order = ClosedFormOrder::Second;
    else if (order == "full")
        opt.order = ClosedFormOrder::Full;
    else
        throw std::invalid_argument("unknown closed-form order: " + order);
    if (variant == "proof")
        opt.variant = SystemVariant::Proof;
    else if (variant == "theorem")
        opt.variant = SystemVariant::Theorem;
    else
        throw std::invalid_argument("unknown system variant: " + variant);
    opt.risk = risk;
    opt.tol = tol;
    opt.max_iters = max_iters;
    opt.random_starts = random_starts;
    opt.seed = seed;
    opt.workers = workers;
    return opt;
}

py::dict result_to_dict(const EquilibriumResult& eq) {
    py::dict d;
    d["q"] = eq.q_star.q;
    d["q_raw"] = eq.q_raw;
    d["phi"] = eq.phi_star.phi;
    d["loss"] = eq.loss;
    d["utility"] = eq.utility;
    d["method"] = eq.method;
    d["variant"] = eq.variant;
    d["iterations"] = eq.iterations;
    d["out_of_box"] = eq.out_of_box;
    d["converged"] = eq.converged;
    d["attacker_interior"] = eq.attacker_interior;
    d["condition_estimate"] = eq.condition_estimate;
    return d;
}

}  // namespace

PYBIND11_MODULE(_secnet, m) {
    m.doc() = "Cyber-defense resource allocation on networks: protection metrics, "
              "Stackelberg equilibria, efficient frontiers, contagion dynamics";

    py::class_<Network>(m, "Network")
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Network::size)
        .def("degree", &Network::degree)
        .def("has_edge", &Network::has_edge)
        .def("neighbors", &Network::neighbors)
        .def("edges", &Network::edges)
        .def("is_connected", &Network::is_connected)
        .def("bfs_depth", &Network::bfs_depth)
        .def("__repr__", [](const Network& g) {
            return "Network(n=" + std::to_string(g.size()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("example_six_node_network", &example_six_node_network);
    m.def("to_edge_list", &to_edge_list);
    m.def("from_edge_list", &from_edge_list);

    m.def(
        "erdos_renyi",
        [](int n, double c, std::uint64_t seed) {
            TopologySpec spec;
            spec.variant = TopologySpec::Variant::ErdosRenyi;
            spec.n = n;
            spec.connectivity = c;
            spec.seed = seed;
            return generate_topology(spec);
        },
        py::arg("n"), py::arg("c"), py::arg("seed") = 0);
    m.def(
        "tree",
        [](int branching, int levels) {
            TopologySpec spec;
            spec.variant = TopologySpec::Variant::Tree;
            spec.branching = branching;
            spec.levels = levels;
            return generate_topology(spec);
        },
        py::arg("branching"), py::arg("levels"));
    m.def(
        "community",
        [](const std::vector<int>& groups, const std::vector<Edge>& bridges) {
            TopologySpec spec;
            spec.variant = TopologySpec::Variant::Community;
            spec.group_sizes = groups;
            spec.bridges = bridges;
            return generate_topology(spec);
        },
        py::arg("groups"), py::arg("bridges"));

    py::class_<OnePointTensor>(m, "OnePointTensor")
        .def("at", &OnePointTensor::at, py::arg("j"), py::arg("i"), py::arg("k"))
        .def("entries", &OnePointTensor::entries, py::arg("j"));
    py::class_<TwoPointTensor>(m, "TwoPointTensor")
        .def("at", &TwoPointTensor::at, py::arg("i"), py::arg("j"), py::arg("k"), py::arg("s"))
        .def("entries", &TwoPointTensor::entries, py::arg("i"), py::arg("j"));

    m.def("one_point_protection", &one_point_protection);
    m.def("two_point_protection", [](const Network& net) {
        return two_point_protection(net, one_point_protection(net));
    });
    m.def("reduce_a_vec", &reduce_a_vec, py::arg("a"), py::arg("j"), py::arg("v"));
    m.def("reduce_a_scalar", &reduce_a_scalar, py::arg("a"), py::arg("i"), py::arg("v"),
          py::arg("w"));
    m.def("reduce_b", &reduce_b, py::arg("b"), py::arg("a"), py::arg("i"), py::arg("j"),
          py::arg("v"), py::arg("w"));

    m.def(
        "infection_probability_exact",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi) {
            return infection_probability_exact(net, DefenseVector(q), AttackVector(phi)).r;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"));
    m.def(
        "infection_probability_mc",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi,
           std::int64_t samples, std::uint64_t seed, int workers) {
            return infection_probability_mc(net, DefenseVector(q), AttackVector(phi), samples,
                                            seed, workers)
                .r;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"), py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "walk_count_risk",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi,
           int L, const std::string& mode, bool include_closed_walks) {
            const WalkMode wm =
                mode == "matrix_power" ? WalkMode::MatrixPower : WalkMode::ExactDistinct;
            return walk_count_risk(net, DefenseVector(q), AttackVector(phi), L, wm,
                                   include_closed_walks)
                .r;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"), py::arg("L") = 4,
        py::arg("mode") = "exact_distinct", py::arg("include_closed_walks") = true);
    m.def(
        "activation_risk",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi,
           const std::string& f, int L, std::int64_t samples, std::uint64_t seed,
           bool include_seed_self, int workers) {
            return activation_risk(net, DefenseVector(q), AttackVector(phi), f, L, samples,
                                   seed, include_seed_self, workers)
                .r;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"), py::arg("f") = "step", py::arg("L") = 4,
        py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("include_seed_self") = true,
        py::arg("workers") = 1);

    m.def(
        "attacker_best_response",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& z,
           const std::vector<double>& eta, double theta) {
            RiskSpec risk;
            risk.variant = net.size() <= kExactEnumerationLimit ? RiskSpec::Variant::Exact
                                                                : RiskSpec::Variant::Walk;
            const auto br =
                attacker_best_response(net, DefenseVector(q), ValueProfiles{z, eta}, theta, risk);
            return py::make_tuple(br.phi.phi, br.interior);
        },
        py::arg("net"), py::arg("q"), py::arg("z"), py::arg("eta"), py::arg("theta"));

    m.def(
        "equilibrium",
        [](const Network& net, const std::vector<double>& z, const std::vector<double>& eta,
           double alpha, double theta, const std::string& method, const std::string& order,
           const std::string& variant, const std::string& risk_variant, std::int64_t samples,
           int horizon, const std::string& walk_mode, double tol, int max_iters,
           int random_starts, std::uint64_t seed, int workers, const std::string& cost) {
            const RiskSpec risk = make_risk_spec(
                risk_variant.empty()
                    ? (net.size() <= kExactEnumerationLimit ? "exact" : "walk")
                    : risk_variant,
                samples, seed, horizon, walk_mode, true, "step");
            const SolverOptions opt = make_solver_options(method, order, variant, risk, tol,
                                                          max_iters, random_starts, seed,
                                                          workers);
            const CostKind kind = cost == "l1" ? CostKind::L1 : CostKind::Quadratic;
            const ValueProfiles profiles{z, eta};
            const EquilibriumResult eq =
                opt.method == SolverOptions::Method::ClosedForm
                    ? asymptotic_sse(net, profiles, alpha, theta, opt)
                    : numerical_sse(net, profiles, alpha, theta, opt, kind);
            return result_to_dict(eq);
        },
        py::arg("net"), py::arg("z"), py::arg("eta"), py::arg("alpha"), py::arg("theta"),
        py::arg("method") = "projected_gradient", py::arg("order") = "full",
        py::arg("variant") = "proof", py::arg("risk") = "", py::arg("samples") = 100000,
        py::arg("horizon") = 4, py::arg("walk_mode") = "exact_distinct", py::arg("tol") = 1e-7,
        py::arg("max_iters") = 10000, py::arg("random_starts") = 5, py::arg("seed") = 0,
        py::arg("workers") = 1, py::arg("cost") = "quadratic");

    m.def(
        "efficient_frontier",
        [](const Network& net, const std::vector<double>& z, const std::vector<double>& eta,
           double theta, const std::vector<double>& alpha_grid, const std::string& method,
           double tol, int random_starts, std::uint64_t seed, int workers, bool warm_start) {
            FrontierOptions options;
            options.solver = make_solver_options(
                method, "full", "proof",
                make_risk_spec(net.size() <= kExactEnumerationLimit ? "exact" : "walk", 100000,
                               seed, 4, "exact_distinct", true, "step"),
                tol, 10000, random_starts, seed, workers);
            options.warm_start = warm_start;
            options.keep_strategies = true;
            const auto pts =
                efficient_frontier(net, ValueProfiles{z, eta}, theta, alpha_grid, options);
            py::list out;
            for (const auto& pt : pts) {
                py::dict d;
                d["alpha"] = pt.alpha;
                d["cost"] = pt.cost;
                d["risk_z"] = pt.risk_z;
                d["risk_eta"] = pt.risk_eta;
                d["failed"] = pt.solver_failed;
                d["q"] = pt.q;
                d["phi"] = pt.phi;
                out.append(d);
            }
            return out;
        },
        py::arg("net"), py::arg("z"), py::arg("eta"), py::arg("theta"), py::arg("alpha_grid"),
        py::arg("method") = "projected_gradient", py::arg("tol") = 1e-7,
        py::arg("random_starts") = 5, py::arg("seed") = 0, py::arg("workers") = 1,
        py::arg("warm_start") = true);
    m.def("log_alpha_grid", &log_alpha_grid, py::arg("lo"), py::arg("hi"), py::arg("points"));

    m.def(
        "simulate",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi,
           double beta, double gamma, double delta, double tau, int horizon, bool rescale_beta,
           int runs, std::uint64_t seed, int workers) {
            DynamicsParams params;
            params.beta = beta;
            params.gamma = gamma;
            params.delta = delta;
            params.tau = tau;
            params.horizon = horizon;
            params.rescale_beta = rescale_beta;
            const auto agg = simulate(net, DefenseVector(q), AttackVector(phi), params, runs,
                                      seed, workers);
            py::dict d;
            d["mean_fractions"] = agg.mean_fractions;
            d["mean_asymptotic"] = agg.mean_asymptotic;
            d["per_run_asymptotic"] = agg.per_run_asymptotic;
            return d;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"), py::arg("beta") = 1.0,
        py::arg("gamma") = 1.0, py::arg("delta") = 0.0, py::arg("tau") = 0.0,
        py::arg("horizon") = 50, py::arg("rescale_beta") = true, py::arg("runs") = 200,
        py::arg("seed") = 0, py::arg("workers") = 1);

    m.def(
        "compare_strategies",
        [](const Network& net, const std::vector<double>& q, const std::vector<double>& phi,
           double beta, double gamma, double delta, double tau, int horizon, bool rescale_beta,
           int runs, std::uint64_t seed, const std::string& reshuffle, int workers) {
            DynamicsParams params;
            params.beta = beta;
            params.gamma = gamma;
            params.delta = delta;
            params.tau = tau;
            params.horizon = horizon;
            params.rescale_beta = rescale_beta;
            const ReshuffleKind kind = reshuffle == "redistribution"
                                           ? ReshuffleKind::SimplexRedistribution
                                           : ReshuffleKind::Permutation;
            const auto cmp = compare_strategies(net, DefenseVector(q), AttackVector(phi),
                                                params, runs, seed, kind, workers);
            auto pack = [](const AggregatedTrajectory& agg) {
                py::dict d;
                d["mean_fractions"] = agg.mean_fractions;
                d["mean_asymptotic"] = agg.mean_asymptotic;
                d["per_run_asymptotic"] = agg.per_run_asymptotic;
                return d;
            };
            py::dict d;
            d["none"] = pack(cmp.none);
            d["optimal"] = pack(cmp.optimal);
            d["reshuffled"] = pack(cmp.reshuffled);
            return d;
        },
        py::arg("net"), py::arg("q"), py::arg("phi"), py::arg("beta") = 1.0,
        py::arg("gamma") = 1.0, py::arg("delta") = 0.0, py::arg("tau") = 0.0,
        py::arg("horizon") = 50, py::arg("rescale_beta") = true, py::arg("runs") = 200,
        py::arg("seed") = 0, py::arg("reshuffle") = "permutation", py::arg("workers") = 1);
}
