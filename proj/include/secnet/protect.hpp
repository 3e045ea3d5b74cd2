#ifndef SECNET_PROTECT_HPP
#define SECNET_PROTECT_HPP

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "secnet/graph.hpp"

namespace secnet {

// 1-point protection: a^j_{ik} = 1 iff removing node j disconnects the
// initially connected pair (i,k). Conventions: a^j_{ii} = 0 for i != j,
// a^j_{ij} = 1 (including a^j_{jj} = 1, which makes the weighted reduction
// a^i_i(v) sum to exactly 1 for any distribution v — the asymptotic system
// relies on this). Handled by the accessor; only non-convention entries are
// stored.
class OnePointTensor {
public:
    OnePointTensor(int n) : n_(n), cut_pairs_(n) {}

    int size() const { return n_; }

    double at(int j, int i, int k) const {
        if (i == j && k == j) return 1.0;
        if (i == k) return 0.0;
        if (i == j || k == j) return 1.0;
        return cut_pairs_[j].count(pair_key(i, k)) ? 1.0 : 0.0;
    }

    void set(int j, int i, int k) { cut_pairs_[j].insert(pair_key(i, k)); }

    // Unordered non-convention pairs {i,k} (i < k) separated by removing j.
    std::vector<Edge> entries(int j) const;

    std::int64_t pair_key(int i, int k) const {
        if (i > k) std::swap(i, k);
        return static_cast<std::int64_t>(i) * n_ + k;
    }

private:
    int n_;
    std::vector<std::unordered_set<std::int64_t>> cut_pairs_;
};

// 2-point protection: b^{(i,j)}_{ks} = 1 iff (k,s) is connected, neither
// single removal of i nor j separates it, but removing both does. Entries
// with {k,s} intersecting {i,j} are 0.
class TwoPointTensor {
public:
    TwoPointTensor(int n) : n_(n) {}

    int size() const { return n_; }

    double at(int i, int j, int k, int s) const {
        if (i == j || k == s) return 0.0;
        if (k == i || k == j || s == i || s == j) return 0.0;
        auto it = entries_.find(pair_key(i, j));
        if (it == entries_.end()) return 0.0;
        return it->second.count(pair_key(k, s)) ? 1.0 : 0.0;
    }

    void set(int i, int j, int k, int s) { entries_[pair_key(i, j)].insert(pair_key(k, s)); }

    std::vector<Edge> entries(int i, int j) const;

    std::int64_t pair_key(int a, int b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::int64_t>(a) * n_ + b;
    }

private:
    int n_;
    std::unordered_map<std::int64_t, std::unordered_set<std::int64_t>> entries_;
};

OnePointTensor one_point_protection(const Network& net);
TwoPointTensor two_point_protection(const Network& net, const OnePointTensor& a);

// Weighted reductions.
// a^j_i(v) = sum_k a^j_{ik} v_k, returned for all i.
std::vector<double> reduce_a_vec(const OnePointTensor& a, int j, const std::vector<double>& v);
// a^i(v,w) = sum_{jk} a^i_{jk} v_j w_k.
double reduce_a_scalar(const OnePointTensor& a, int i, const std::vector<double>& v,
                       const std::vector<double>& w);
// b_ij(v,w) = (1-delta_ij) sum_{ks} (b^{(i,j)}_{ks} - a^i_{ks} a^j_{ks}) v_k w_s.
double reduce_b(const TwoPointTensor& b, const OnePointTensor& a, int i, int j,
                const std::vector<double>& v, const std::vector<double>& w);

}  // namespace secnet

#endif
