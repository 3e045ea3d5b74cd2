#ifndef SECNET_EQUIL_HPP
#define SECNET_EQUIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/protect.hpp"
#include "secnet/risk.hpp"

namespace secnet {

// Two published forms of the linear system differ in whether the constant
// term of the 1/theta corrections is scaled by n (Theorem) or not (Proof);
// both are implemented and an empirical comparison fixes the default.
enum class SystemVariant { Proof, Theorem };

constexpr SystemVariant kDefaultSystemVariant = SystemVariant::Proof;

struct AsymptoticSystem {
    int n = 0;
    std::vector<double> m;  // row-major n x n
    std::vector<double> s;
    SystemVariant variant = kDefaultSystemVariant;
    double at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
};

enum class ClosedFormOrder { First, Second, Full };

struct SolverOptions {
    enum class Method { ClosedForm, ProjectedGradient };
    Method method = Method::ProjectedGradient;
    ClosedFormOrder order = ClosedFormOrder::Full;
    SystemVariant variant = kDefaultSystemVariant;
    RiskSpec risk;
    double tol = 1e-7;
    int max_iters = 10000;
    int random_starts = 5;
    std::uint64_t seed = 0;
    double fd_step = 1e-5;
    double armijo_c = 1e-4;
    double armijo_shrink = 0.5;
    int workers = 1;
    std::vector<std::vector<double>> extra_starts;  // e.g. frontier warm starts
};

struct EquilibriumResult {
    DefenseVector q_star = DefenseVector::zeros(1);
    std::vector<double> q_raw;
    AttackVector phi_star = AttackVector::uniform(1);
    double loss = 0.0;
    double utility = 0.0;
    std::string method;
    std::string variant;
    int iterations = 0;
    bool out_of_box = false;
    bool converged = true;
    bool attacker_interior = true;
    double condition_estimate = 0.0;
};

AsymptoticSystem assemble_system(const Network& net, const ValueProfiles& profiles, double theta,
                                 const OnePointTensor& a, const TwoPointTensor& b,
                                 SystemVariant variant);

EquilibriumResult asymptotic_sse(const Network& net, const ValueProfiles& profiles, double alpha,
                                 double theta, const SolverOptions& options);

EquilibriumResult numerical_sse(const Network& net, const ValueProfiles& profiles, double alpha,
                                double theta, const SolverOptions& options,
                                CostKind defender_cost_kind = CostKind::Quadratic);

}  // namespace secnet

#endif
