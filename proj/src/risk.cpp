#include "secnet/risk.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace secnet {

DefenseVector::DefenseVector(std::vector<double> values) : q(std::move(values)) {
    for (double qi : q)
        if (!(qi >= 0.0 && qi <= 1.0))
            throw std::invalid_argument("defense entries must lie in [0,1]");
}

AttackVector::AttackVector(std::vector<double> values) : phi(std::move(values)) {
    double total = 0.0;
    for (double p : phi) {
        if (!(p >= 0.0)) throw std::invalid_argument("attack entries must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("attack distribution must sum to 1");
}

AttackVector AttackVector::point(int n, int s) {
    std::vector<double> phi(n, 0.0);
    phi.at(s) = 1.0;
    return AttackVector(std::move(phi));
}

std::vector<int> infected_set(const Network& net, const std::vector<std::uint8_t>& x, int s) {
    if (s < 0 || s >= net.size()) throw std::out_of_range("seed out of range");
    if (!x[s]) return {};
    const auto label = net.component_labels_masked(x);
    std::vector<int> out;
    for (int i = 0; i < net.size(); ++i)
        if (label[i] >= 0 && label[i] == label[s]) out.push_back(i);
    return out;
}

namespace {

void require_enumerable(int n) {
    if (n > kExactEnumerationLimit)
        throw std::invalid_argument(
            "exact enumeration limited to n <= 16; use monte_carlo instead");
}

double state_weight(const std::vector<double>& q, std::uint32_t mask, int n,
                    int skip_a = -1, int skip_b = -1) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
        if (i == skip_a || i == skip_b) continue;
        w *= (mask >> i) & 1u ? 1.0 - q[i] : q[i];
        if (w == 0.0) return 0.0;
    }
    return w;
}

// Run fn over [0, total) in fixed-size chunks, summing per-chunk vectors in
// chunk order so results do not depend on scheduling.
template <typename Fn>
std::vector<double> chunked_sum(std::int64_t total, int n, int workers, Fn fn) {
    const std::int64_t chunk = 8192;
    const std::int64_t num_chunks = (total + chunk - 1) / chunk;
    std::vector<double> acc(n, 0.0);
    if (workers <= 1 || num_chunks <= 1) {
        for (std::int64_t c = 0; c < num_chunks; ++c) {
            auto part = fn(c * chunk, std::min(total, (c + 1) * chunk));
            for (int i = 0; i < n; ++i) acc[i] += part[i];
        }
        return acc;
    }
    std::vector<std::future<std::vector<double>>> pending;
    for (std::int64_t c = 0; c < num_chunks; ++c) {
        pending.push_back(std::async(std::launch::async, [=]() {
            return fn(c * chunk, std::min(total, (c + 1) * chunk));
        }));
        if (static_cast<int>(pending.size()) == workers || c + 1 == num_chunks) {
            for (auto& f : pending) {
                auto part = f.get();
                for (int i = 0; i < n; ++i) acc[i] += part[i];
            }
            pending.clear();
        }
    }
    return acc;
}

}  // namespace

std::vector<double> infection_probability_exact(const Network& net, const DefenseVector& q,
                                                const std::vector<double>& weights) {
    const int n = net.size();
    require_enumerable(n);
    if (q.size() != n || static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("dimension mismatch");
    std::vector<double> p(n, 0.0);
    std::vector<std::uint8_t> x(n, 0);
    std::vector<double> comp_weight;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const double w = state_weight(q.q, mask, n);
        if (w == 0.0) continue;
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
        const auto label = net.component_labels_masked(x);
        int num_comps = 0;
        for (int l : label) num_comps = std::max(num_comps, l + 1);
        comp_weight.assign(num_comps, 0.0);
        for (int i = 0; i < n; ++i)
            if (label[i] >= 0) comp_weight[label[i]] += weights[i];
        for (int i = 0; i < n; ++i)
            if (label[i] >= 0) p[i] += w * comp_weight[label[i]];
    }
    return p;
}

RiskVector infection_probability_exact(const Network& net, const DefenseVector& q,
                                       const AttackVector& phi) {
    return {infection_probability_exact(net, q, phi.phi), RiskKind::Probability};
}

RiskVector infection_probability_mc(const Network& net, const DefenseVector& q,
                                    const AttackVector& phi, std::int64_t samples,
                                    std::uint64_t seed, int workers) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const int n = net.size();
    if (q.size() != n || phi.size() != n) throw std::invalid_argument("dimension mismatch");
    std::vector<double> cdf(n);
    double run = 0.0;
    for (int i = 0; i < n; ++i) {
        run += phi.phi[i];
        cdf[i] = run;
    }
    const CounterRng base(seed);
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
        std::vector<double> count(n, 0.0);
        std::vector<std::uint8_t> x(n);
        for (std::int64_t m = lo; m < hi; ++m) {
            const CounterRng rng = base.derive(static_cast<std::uint64_t>(m));
            const double u = rng.uniform(0);
            const int s = static_cast<int>(
                std::lower_bound(cdf.begin(), cdf.end(), u * run) - cdf.begin());
            for (int i = 0; i < n; ++i)
                x[i] = rng.uniform(static_cast<std::uint64_t>(i) + 1) >= q.q[i] ? 1 : 0;
            if (!x[s]) continue;
            const auto label = net.component_labels_masked(x);
            for (int i = 0; i < n; ++i)
                if (label[i] >= 0 && label[i] == label[s]) count[i] += 1.0;
        }
        return count;
    };
    auto total = chunked_sum(samples, n, workers, worker);
    for (double& c : total) c /= static_cast<double>(samples);
    return {std::move(total), RiskKind::Probability};
}

namespace {

// Depth-first walk enumeration with (1-q) accumulated once per distinct
// node on the current walk.
void walk_dfs(const Network& net, const std::vector<double>& q,
              const std::vector<double>& weights, int origin, int u, int edges_left,
              double product, std::vector<int>& visits, double& total,
              bool include_closed_walks) {
    if (edges_left == 0) return;
    for (int v : net.neighbors(u)) {
        const double next = visits[v] == 0 ? product * (1.0 - q[v]) : product;
        if (v != origin || include_closed_walks) total += weights[v] * next;
        if (edges_left > 1 && next != 0.0) {
            ++visits[v];
            walk_dfs(net, q, weights, origin, v, edges_left - 1, next, visits, total,
                     include_closed_walks);
            --visits[v];
        }
    }
}

}  // namespace

std::vector<double> walk_count_risk(const Network& net, const DefenseVector& q,
                                    const std::vector<double>& weights, int L, WalkMode mode,
                                    bool include_closed_walks) {
    const int n = net.size();
    if (L < 1) throw std::invalid_argument("walk horizon must be >= 1");
    if (q.size() != n || static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("dimension mismatch");
    std::vector<double> r(n, 0.0);
    if (mode == WalkMode::ExactDistinct) {
        if (L > 8)
            throw std::invalid_argument(
                "exact_distinct walk enumeration limited to L <= 8; use matrix_power");
        std::vector<int> visits(n, 0);
        for (int i = 0; i < n; ++i) {
            const double start = 1.0 - q.q[i];
            if (start == 0.0) continue;
            visits.assign(n, 0);
            visits[i] = 1;
            double total = 0.0;
            walk_dfs(net, q.q, weights, i, i, L, start, visits, total, include_closed_walks);
            r[i] = total;
        }
        return r;
    }
    // MatrixPower: sum_{l=1..L} (DA)^l D applied to the weights.
    auto apply_da = [&](const std::vector<double>& t) {
        std::vector<double> out(n, 0.0);
        for (int i = 0; i < n; ++i) {
            if (q.q[i] == 1.0) continue;
            double acc = 0.0;
            for (int j : net.neighbors(i)) acc += t[j];
            out[i] = (1.0 - q.q[i]) * acc;
        }
        return out;
    };
    if (include_closed_walks) {
        std::vector<double> t(n);
        for (int i = 0; i < n; ++i) t[i] = (1.0 - q.q[i]) * weights[i];
        for (int l = 1; l <= L; ++l) {
            t = apply_da(t);
            for (int i = 0; i < n; ++i) r[i] += t[i];
        }
    } else {
        for (int s = 0; s < n; ++s) {
            if (weights[s] == 0.0) continue;
            std::vector<double> t(n, 0.0);
            t[s] = 1.0 - q.q[s];
            for (int l = 1; l <= L; ++l) {
                t = apply_da(t);
                for (int i = 0; i < n; ++i)
                    if (i != s) r[i] += weights[s] * t[i];
            }
        }
    }
    return r;
}

RiskVector walk_count_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                           int L, WalkMode mode, bool include_closed_walks) {
    return {walk_count_risk(net, q, phi.phi, L, mode, include_closed_walks),
            RiskKind::WalkCount};
}

namespace {

double apply_activation(const std::string& f, double count) {
    if (f == "step") return count >= 0.5 ? 1.0 : 0.0;
    if (f == "linear") return count;
    if (f == "sqrt") return std::sqrt(count);
    if (f == "log1p") return std::log1p(count);
    throw std::invalid_argument("unknown activation function: " + f);
}

}  // namespace

RiskVector activation_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                           const std::string& f, int L, std::int64_t samples,
                           std::uint64_t seed, bool include_seed_self, int workers) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (L < 1) throw std::invalid_argument("walk horizon must be >= 1");
    apply_activation(f, 0.0);  // validate the name up front
    const int n = net.size();
    if (q.size() != n || phi.size() != n) throw std::invalid_argument("dimension mismatch");
    std::vector<double> cdf(n);
    double run = 0.0;
    for (int i = 0; i < n; ++i) {
        run += phi.phi[i];
        cdf[i] = run;
    }
    const CounterRng base(seed);
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
        std::vector<double> acc(n, 0.0);
        std::vector<std::uint8_t> x(n);
        std::vector<double> count(n), t(n), next(n);
        for (std::int64_t m = lo; m < hi; ++m) {
            const CounterRng rng = base.derive(static_cast<std::uint64_t>(m));
            const double u = rng.uniform(0);
            const int s = static_cast<int>(
                std::lower_bound(cdf.begin(), cdf.end(), u * run) - cdf.begin());
            for (int i = 0; i < n; ++i)
                x[i] = rng.uniform(static_cast<std::uint64_t>(i) + 1) >= q.q[i] ? 1 : 0;
            std::fill(count.begin(), count.end(), 0.0);
            if (x[s]) {
                std::fill(t.begin(), t.end(), 0.0);
                t[s] = 1.0;
                for (int l = 1; l <= L; ++l) {
                    for (int i = 0; i < n; ++i) {
                        double a = 0.0;
                        if (x[i])
                            for (int j : net.neighbors(i)) a += t[j];
                        next[i] = std::min(a, 1e300);
                    }
                    std::swap(t, next);
                    for (int i = 0; i < n; ++i) count[i] += t[i];
                }
                if (include_seed_self) count[s] += 1.0;
            }
            for (int i = 0; i < n; ++i)
                if (count[i] > 0.0) acc[i] += apply_activation(f, count[i]);
        }
        return acc;
    };
    auto total = chunked_sum(samples, n, workers, worker);
    for (double& c : total) c /= static_cast<double>(samples);
    return {std::move(total), RiskKind::Activation};
}

double reach_probability(const Network& net, const DefenseVector& q,
                         const std::vector<double>& weights, int i, int forced_node,
                         int forced_value) {
    const int n = net.size();
    require_enumerable(n);
    double p = 0.0;
    std::vector<std::uint8_t> x(n);
    std::vector<double> comp_weight;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (((mask >> i) & 1u) != 1u) continue;  // node i conditioned susceptible
        if (forced_node >= 0 && static_cast<int>((mask >> forced_node) & 1u) != forced_value)
            continue;
        const double w = state_weight(q.q, mask, n, i, forced_node);
        if (w == 0.0) continue;
        for (int k = 0; k < n; ++k) x[k] = (mask >> k) & 1u;
        const auto label = net.component_labels_masked(x);
        double reach = 0.0;
        for (int s = 0; s < n; ++s)
            if (label[s] >= 0 && label[s] == label[i]) reach += weights[s];
        p += w * reach;
    }
    return p;
}

ReachDecomposition reach_decomposition(const Network& net, const DefenseVector& q,
                                       const AttackVector& phi, int i, int j) {
    if (i == j) throw std::invalid_argument("decomposition nodes must differ");
    const double p_tilde_i = reach_probability(net, q, phi.phi, i);
    const double with_j = reach_probability(net, q, phi.phi, j, i, 1);
    const double without_j = reach_probability(net, q, phi.phi, j, i, 0);
    return {p_tilde_i, with_j - without_j};
}

RiskVector evaluate_risk(const Network& net, const DefenseVector& q, const AttackVector& phi,
                         const RiskSpec& spec, int workers) {
    switch (spec.variant) {
        case RiskSpec::Variant::Exact:
            return infection_probability_exact(net, q, phi);
        case RiskSpec::Variant::MonteCarlo:
            return infection_probability_mc(net, q, phi, spec.samples, spec.seed, workers);
        case RiskSpec::Variant::Walk:
            return walk_count_risk(net, q, phi, spec.horizon, spec.mode,
                                   spec.include_closed_walks);
        case RiskSpec::Variant::Activation:
            return activation_risk(net, q, phi, spec.activation, spec.horizon, spec.samples,
                                   spec.seed, true, workers);
    }
    throw std::invalid_argument("unknown risk variant");
}

}  // namespace secnet
