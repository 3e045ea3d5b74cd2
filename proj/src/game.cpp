#include "secnet/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace secnet {

double defender_cost(const DefenseVector& q, CostKind kind) {
    double total = 0.0;
    if (kind == CostKind::Quadratic) {
        for (double qi : q.q) total += 0.5 * qi * qi;
    } else {
        for (double qi : q.q) total += std::abs(qi);
    }
    return total;
}

double attacker_utility(const Network& net, const AttackVector& phi, const DefenseVector& q,
                        const ValueProfiles& profiles, double theta, const RiskSpec& risk,
                        int workers) {
    const auto r = evaluate_risk(net, q, phi, risk, workers);
    double value = 0.0;
    for (int i = 0; i < net.size(); ++i) value += profiles.eta[i] * r.r[i];
    double cost = 0.0;
    for (double p : phi.phi) cost += 0.5 * p * p;
    return value - theta * cost;
}

double defender_loss(const Network& net, const DefenseVector& q, const AttackVector& phi,
                     const ValueProfiles& profiles, double alpha, CostKind cost_kind,
                     const RiskSpec& risk, int workers) {
    const auto r = evaluate_risk(net, q, phi, risk, workers);
    double value = 0.0;
    for (int i = 0; i < net.size(); ++i) value += profiles.z[i] * r.r[i];
    return value + alpha * defender_cost(q, cost_kind);
}

std::vector<double> weighted_infection(const Network& net, const DefenseVector& q,
                                       const std::vector<double>& eta, const RiskSpec& risk) {
    const bool walk_backend = risk.variant == RiskSpec::Variant::Walk ||
                              net.size() > kExactEnumerationLimit;
    if (!walk_backend) return infection_probability_exact(net, q, eta);
    const int L = risk.variant == RiskSpec::Variant::Exact ? 4 : risk.horizon;
    const WalkMode mode =
        risk.variant == RiskSpec::Variant::Walk ? risk.mode : WalkMode::ExactDistinct;
    return walk_count_risk(net, q, eta, L, mode, risk.include_closed_walks);
}

BestResponse attacker_best_response(const Network& net, const DefenseVector& q,
                                    const ValueProfiles& profiles, double theta,
                                    const RiskSpec& risk) {
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    const int n = net.size();
    const auto p = weighted_infection(net, q, profiles.eta, risk);
    // Maximizing phi.P - theta/2 |phi|^2 over the simplex is the Euclidean
    // projection of P/theta; iteratively dropping negative coordinates
    // (Michelot) yields the exact maximizer.
    std::vector<int> support(n);
    std::iota(support.begin(), support.end(), 0);
    std::vector<double> phi(n, 0.0);
    bool interior = true;
    while (true) {
        double mean = 0.0;
        for (int i : support) mean += p[i];
        mean /= static_cast<double>(support.size());
        const double base = 1.0 / static_cast<double>(support.size());
        bool feasible = true;
        for (int i : support) {
            phi[i] = base + (p[i] - mean) / theta;
            if (phi[i] < 0.0) feasible = false;
        }
        if (feasible || support.size() == 1) break;
        interior = false;
        std::vector<int> kept;
        for (int i : support) {
            if (phi[i] >= 0.0) {
                kept.push_back(i);
            } else {
                phi[i] = 0.0;
            }
        }
        if (kept.empty()) kept.push_back(support.front());  // not reachable in practice
        support = std::move(kept);
    }
    for (double& v : phi) v = std::max(v, 0.0);
    double total = std::accumulate(phi.begin(), phi.end(), 0.0);
    for (double& v : phi) v /= total;
    return {AttackVector(std::move(phi)), interior};
}

std::vector<double> resolve_profile_preset(const std::string& name, const Network& net) {
    const int n = net.size();
    if (name == "uniform") return std::vector<double>(n, 1.0 / n);
    if (name == "ones") return std::vector<double>(n, 1.0);
    if (name.rfind("indicator:", 0) == 0) {
        std::vector<double> v(n, 0.0);
        std::size_t pos = std::string("indicator:").size();
        while (pos < name.size()) {
            std::size_t next = name.find(',', pos);
            if (next == std::string::npos) next = name.size();
            const int idx = std::stoi(name.substr(pos, next - pos));
            if (idx < 0 || idx >= n) throw std::invalid_argument("indicator index out of range");
            v[idx] = 1.0;
            pos = next + 1;
        }
        return v;
    }
    if (name.rfind("level:", 0) == 0) {
        const int level = std::stoi(name.substr(std::string("level:").size()));
        const auto depth = net.bfs_depth(0);
        const auto count = std::count(depth.begin(), depth.end(), level);
        if (count == 0) throw std::invalid_argument("no nodes at requested level");
        std::vector<double> v(n, 0.0);
        for (int i = 0; i < n; ++i)
            if (depth[i] == level) v[i] = 1.0 / static_cast<double>(count);
        return v;
    }
    throw std::invalid_argument("unknown profile preset: " + name);
}

}  // namespace secnet
