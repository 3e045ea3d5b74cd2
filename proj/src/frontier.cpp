#include "secnet/frontier.hpp"

#include <cmath>
#include <stdexcept>

namespace secnet {

std::vector<double> log_alpha_grid(double lo, double hi, int points) {
    if (points < 1 || lo <= 0.0 || hi <= lo)
        throw std::invalid_argument("invalid alpha grid parameters");
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = lo;
        return grid;
    }
    const double step = (std::log(hi) - std::log(lo)) / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = std::exp(std::log(lo) + i * step);
    return grid;
}

std::vector<FrontierPoint> efficient_frontier(const Network& net, const ValueProfiles& profiles,
                                              double theta, const std::vector<double>& alpha_grid,
                                              const FrontierOptions& options) {
    if (alpha_grid.empty()) throw std::invalid_argument("alpha grid must be nonempty");
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        if (alpha_grid[i] <= 0.0 || (i > 0 && alpha_grid[i] <= alpha_grid[i - 1]))
            throw std::invalid_argument("alpha grid must be strictly increasing and positive");
    }
    std::vector<FrontierPoint> points;
    points.reserve(alpha_grid.size());
    std::vector<double> warm;
    for (double alpha : alpha_grid) {
        FrontierPoint pt;
        pt.alpha = alpha;
        try {
            SolverOptions solver = options.solver;
            if (options.warm_start && !warm.empty()) solver.extra_starts.push_back(warm);
            EquilibriumResult eq =
                solver.method == SolverOptions::Method::ClosedForm
                    ? asymptotic_sse(net, profiles, alpha, theta, solver)
                    : numerical_sse(net, profiles, alpha, theta, solver,
                                    options.defender_cost);
            pt.cost = defender_cost(eq.q_star, options.defender_cost);
            const auto r = evaluate_risk(net, eq.q_star, eq.phi_star, options.solver.risk,
                                         options.solver.workers);
            for (int i = 0; i < net.size(); ++i) {
                pt.risk_z += profiles.z[i] * r.r[i];
                pt.risk_eta += profiles.eta[i] * r.r[i];
            }
            warm = eq.q_star.q;
            if (options.keep_strategies) {
                pt.q = eq.q_star.q;
                pt.phi = eq.phi_star.phi;
            }
        } catch (const std::exception&) {
            pt.solver_failed = true;
        }
        points.push_back(std::move(pt));
    }
    return points;
}

}  // namespace secnet
