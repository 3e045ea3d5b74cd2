#include "secnet/equil.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secnet/rng.hpp"

namespace secnet {

AsymptoticSystem assemble_system(const Network& net, const ValueProfiles& profiles, double theta,
                                 const OnePointTensor& a, const TwoPointTensor& b,
                                 SystemVariant variant) {
    const int n = net.size();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("tensor/network mismatch");
    if (static_cast<int>(profiles.z.size()) != n ||
        static_cast<int>(profiles.eta.size()) != n)
        throw std::invalid_argument("profile dimension mismatch");
    const std::vector<double> unif(n, 1.0 / n);
    const double c1 = variant == SystemVariant::Proof ? 1.0 : static_cast<double>(n);

    std::vector<std::vector<double>> a_eta(n), a_z(n);
    std::vector<double> s(n), s_eta(n);
    for (int i = 0; i < n; ++i) {
        a_eta[i] = reduce_a_vec(a, i, profiles.eta);
        a_z[i] = reduce_a_vec(a, i, profiles.z);
        s[i] = reduce_a_scalar(a, i, unif, profiles.z);
        s_eta[i] = reduce_a_scalar(a, i, unif, profiles.eta);
    }

    AsymptoticSystem sys;
    sys.n = n;
    sys.variant = variant;
    sys.s = s;
    sys.m.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double dot_ez = 0.0, dot_ze = 0.0;
            for (int k = 0; k < n; ++k) {
                dot_ez += a_eta[i][k] * a_z[j][k];
                dot_ze += a_z[i][k] * a_eta[j][k];
            }
            double m = reduce_b(b, a, i, j, unif, profiles.z);
            m -= (dot_ez - c1 * s_eta[i] * s[j]) / theta;
            m -= (dot_ze - c1 * s[i] * s_eta[j]) / theta;
            sys.m[static_cast<std::size_t>(i) * n + j] = m;
        }
    }
    return sys;
}

namespace {

const char* kAlphaTooSmall = "alpha too small for asymptotic regime";

std::vector<double> clamp_box(const std::vector<double>& q, bool* clamped = nullptr) {
    std::vector<double> out(q.size());
    bool any = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = std::clamp(q[i], 0.0, 1.0);
        any = any || out[i] != q[i];
    }
    if (clamped) *clamped = any;
    return out;
}

EquilibriumResult finalize(const Network& net, const ValueProfiles& profiles, double alpha,
                           double theta, const SolverOptions& options, CostKind cost_kind,
                           EquilibriumResult result) {
    const auto br = attacker_best_response(net, result.q_star, profiles, theta, options.risk);
    result.phi_star = br.phi;
    result.attacker_interior = br.interior;
    result.loss = defender_loss(net, result.q_star, result.phi_star, profiles, alpha, cost_kind,
                                options.risk, options.workers);
    result.utility = attacker_utility(net, result.phi_star, result.q_star, profiles, theta,
                                      options.risk, options.workers);
    return result;
}

}  // namespace

EquilibriumResult asymptotic_sse(const Network& net, const ValueProfiles& profiles, double alpha,
                                 double theta, const SolverOptions& options) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    const int n = net.size();
    const auto a = one_point_protection(net);
    const auto b = two_point_protection(net, a);
    const auto sys = assemble_system(net, profiles, theta, a, b, options.variant);

    Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        rhs[i] = sys.s[i];
        for (int j = 0; j < n; ++j) lhs(i, j) = (i == j ? alpha : 0.0) - sys.at(i, j);
    }

    std::vector<double> q_raw(n, 0.0);
    double condition = 0.0;
    switch (options.order) {
        case ClosedFormOrder::First:
            for (int i = 0; i < n; ++i) q_raw[i] = sys.s[i] / alpha;
            break;
        case ClosedFormOrder::Second:
            for (int i = 0; i < n; ++i) {
                double ms = 0.0;
                for (int j = 0; j < n; ++j) ms += sys.at(i, j) * sys.s[j];
                q_raw[i] = sys.s[i] / alpha + ms / (alpha * alpha);
            }
            break;
        case ClosedFormOrder::Full: {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(lhs,
                                                  Eigen::ComputeThinU | Eigen::ComputeThinV);
            const double smin = svd.singularValues().minCoeff();
            const double smax = svd.singularValues().maxCoeff();
            if (smin <= 0.0 || smax / smin > 1e12) throw std::runtime_error(kAlphaTooSmall);
            condition = smax / smin;
            Eigen::VectorXd q = svd.solve(rhs);
            for (int i = 0; i < n; ++i) q_raw[i] = q[i];
            break;
        }
    }

    EquilibriumResult result;
    result.q_raw = q_raw;
    bool clamped = false;
    result.q_star = DefenseVector(clamp_box(q_raw, &clamped));
    result.out_of_box = clamped;
    result.condition_estimate = condition;
    result.method = "closed_form";
    result.variant = options.variant == SystemVariant::Proof ? "proof" : "theorem";
    return finalize(net, profiles, alpha, theta, options, CostKind::Quadratic, result);
}

namespace {

struct Objective {
    const Network& net;
    const ValueProfiles& profiles;
    double alpha;
    double theta;
    const SolverOptions& options;
    CostKind cost_kind;

    // Defender loss against the attacker's best response; the risk part and
    // the cost part are returned separately for the proximal l1 step.
    double risk_part(const std::vector<double>& q) const {
        const DefenseVector d{std::vector<double>(q)};
        const auto br = attacker_best_response(net, d, profiles, theta, options.risk);
        const auto r = evaluate_risk(net, d, br.phi, options.risk, options.workers);
        double value = 0.0;
        for (int i = 0; i < net.size(); ++i) value += profiles.z[i] * r.r[i];
        return value;
    }

    double total(const std::vector<double>& q) const {
        return risk_part(q) + alpha * defender_cost(DefenseVector{std::vector<double>(q)},
                                                    cost_kind);
    }

    // Central finite differences of the smooth part. For quadratic cost the
    // cost gradient is added analytically; for l1 the cost is handled by the
    // proximal step instead.
    std::vector<double> smooth_gradient(const std::vector<double>& q) const {
        const int n = static_cast<int>(q.size());
        std::vector<double> g(n, 0.0);
        std::vector<double> probe = q;
        for (int i = 0; i < n; ++i) {
            const double h = options.fd_step;
            const double lo = std::max(0.0, q[i] - h);
            const double hi = std::min(1.0, q[i] + h);
            probe[i] = hi;
            const double fp = risk_part(probe);
            probe[i] = lo;
            const double fm = risk_part(probe);
            probe[i] = q[i];
            g[i] = (fp - fm) / (hi - lo);
            if (cost_kind == CostKind::Quadratic) g[i] += alpha * q[i];
        }
        return g;
    }

    std::vector<double> prox_step(const std::vector<double>& q, const std::vector<double>& g,
                                  double step) const {
        const int n = static_cast<int>(q.size());
        std::vector<double> out(n);
        for (int i = 0; i < n; ++i) {
            double v = q[i] - step * g[i];
            if (cost_kind == CostKind::L1) v -= step * alpha;  // soft threshold on [0,1]
            out[i] = std::clamp(v, 0.0, 1.0);
        }
        return out;
    }
};

struct DescentOutcome {
    std::vector<double> q;
    double loss;
    int iterations;
    bool converged;
};

DescentOutcome projected_descent(const Objective& obj, std::vector<double> q) {
    const auto& opt = obj.options;
    double f = obj.total(q);
    double step = 1.0;
    int it = 0;
    bool converged = false;
    for (; it < opt.max_iters; ++it) {
        const auto g = obj.smooth_gradient(q);
        // convergence: fixed point of the unit-step projected/proximal map
        const auto probe = obj.prox_step(q, g, 1.0);
        double residual = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i)
            residual = std::max(residual, std::abs(probe[i] - q[i]));
        if (residual <= opt.tol) {
            converged = true;
            break;
        }
        step = std::min(step * 2.0, 1.0);
        bool accepted = false;
        while (step > 1e-14) {
            const auto cand = obj.prox_step(q, g, step);
            double move2 = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                const double d = cand[i] - q[i];
                move2 += d * d;
            }
            const double fc = obj.total(cand);
            if (fc <= f - opt.armijo_c * move2 / step) {
                q = cand;
                f = fc;
                accepted = true;
                break;
            }
            step *= opt.armijo_shrink;
        }
        if (!accepted) {
            converged = true;  // no progress possible at machine precision
            break;
        }
    }
    return {std::move(q), f, it, converged};
}

}  // namespace

EquilibriumResult numerical_sse(const Network& net, const ValueProfiles& profiles, double alpha,
                                double theta, const SolverOptions& options,
                                CostKind defender_cost_kind) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    const int n = net.size();
    const Objective obj{net, profiles, alpha, theta, options, defender_cost_kind};

    std::vector<std::vector<double>> starts;
    starts.emplace_back(n, 0.0);
    if (defender_cost_kind == CostKind::Quadratic) {
        try {
            SolverOptions closed = options;
            closed.order = ClosedFormOrder::Full;
            starts.push_back(asymptotic_sse(net, profiles, alpha, theta, closed).q_star.q);
        } catch (const std::exception&) {
            // closed form unavailable in this regime; keep the other starts
        }
    }
    RngStream rng(options.seed, /*stream=*/0x5350ULL);
    for (int s = 0; s < options.random_starts; ++s) {
        std::vector<double> q(n);
        for (double& v : q) v = rng.uniform();
        starts.push_back(std::move(q));
    }
    for (const auto& extra : options.extra_starts) {
        if (static_cast<int>(extra.size()) == n) starts.push_back(extra);
    }

    DescentOutcome best{{}, 0.0, 0, false};
    bool have_best = false;
    for (const auto& start : starts) {
        auto outcome = projected_descent(obj, start);
        if (!have_best || outcome.loss < best.loss) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    EquilibriumResult result;
    result.q_raw = best.q;
    result.q_star = DefenseVector(best.q);
    result.method = "projected_gradient";
    result.variant = options.variant == SystemVariant::Proof ? "proof" : "theorem";
    result.iterations = best.iterations;
    result.converged = best.converged;
    return finalize(net, profiles, alpha, theta, options, defender_cost_kind, result);
}

}  // namespace secnet
