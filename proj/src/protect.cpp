#include "secnet/protect.hpp"

#include <stdexcept>

namespace secnet {

std::vector<Edge> OnePointTensor::entries(int j) const {
    std::vector<Edge> out;
    out.reserve(cut_pairs_[j].size());
    for (std::int64_t key : cut_pairs_[j])
        out.emplace_back(static_cast<int>(key / n_), static_cast<int>(key % n_));
    return out;
}

std::vector<Edge> TwoPointTensor::entries(int i, int j) const {
    std::vector<Edge> out;
    auto it = entries_.find(pair_key(i, j));
    if (it == entries_.end()) return out;
    out.reserve(it->second.size());
    for (std::int64_t key : it->second)
        out.emplace_back(static_cast<int>(key / n_), static_cast<int>(key % n_));
    return out;
}

OnePointTensor one_point_protection(const Network& net) {
    const int n = net.size();
    OnePointTensor tensor(n);
    const auto base = net.component_labels();
    for (int j = 0; j < n; ++j) {
        const auto cut = net.component_labels({j});
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                if (base[i] == base[k] && cut[i] != cut[k]) tensor.set(j, i, k);
            }
        }
    }
    return tensor;
}

TwoPointTensor two_point_protection(const Network& net, const OnePointTensor& a) {
    const int n = net.size();
    if (a.size() != n) throw std::invalid_argument("tensor/network size mismatch");
    TwoPointTensor tensor(n);
    const auto base = net.component_labels();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto cut = net.component_labels({i, j});
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                for (int s = k + 1; s < n; ++s) {
                    if (s == i || s == j) continue;
                    if (base[k] != base[s]) continue;
                    if (a.at(i, k, s) != 0.0 || a.at(j, k, s) != 0.0) continue;
                    if (cut[k] != cut[s]) tensor.set(i, j, k, s);
                }
            }
        }
    }
    return tensor;
}

namespace {
void check_dim(int n, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
}
}  // namespace

std::vector<double> reduce_a_vec(const OnePointTensor& a, int j, const std::vector<double>& v) {
    const int n = a.size();
    check_dim(n, v);
    std::vector<double> out(n, 0.0);
    // convention entries: a^j_{ij} = 1 for all i (diagonal a^j_{jj} included)
    for (int i = 0; i < n; ++i)
        if (i != j) out[i] += v[j];
    // row i = j: a^j_{jk} = 1 for every k, so the whole of v contributes
    out[j] = 0.0;
    for (int k = 0; k < n; ++k) out[j] += v[k];
    for (const auto& [p, q] : a.entries(j)) {
        out[p] += v[q];
        out[q] += v[p];
    }
    return out;
}

double reduce_a_scalar(const OnePointTensor& a, int i, const std::vector<double>& v,
                       const std::vector<double>& w) {
    const int n = a.size();
    check_dim(n, v);
    check_dim(n, w);
    double total = 0.0;
    // conventions: a^i_{ji} = a^i_{ij} = 1 for j != i, plus a^i_{ii} = 1
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        total += v[j] * w[i] + v[i] * w[j];
    }
    total += v[i] * w[i];
    for (const auto& [p, q] : a.entries(i)) total += v[p] * w[q] + v[q] * w[p];
    return total;
}

double reduce_b(const TwoPointTensor& b, const OnePointTensor& a, int i, int j,
                const std::vector<double>& v, const std::vector<double>& w) {
    const int n = b.size();
    if (a.size() != n) throw std::invalid_argument("tensor size mismatch");
    check_dim(n, v);
    check_dim(n, w);
    if (i == j) return 0.0;
    double total = 0.0;
    // sparse positive part
    for (const auto& [k, s] : b.entries(i, j))
        total += v[k] * w[s] + v[s] * w[k];
    // product part: a^i_{ks} a^j_{ks} over ordered pairs (k,s), k != s
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < n; ++s) {
            if (k == s) continue;
            const double prod = a.at(i, k, s) * a.at(j, k, s);
            if (prod != 0.0) total -= prod * v[k] * w[s];
        }
    }
    return total;
}

}  // namespace secnet
