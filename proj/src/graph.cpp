#include "secnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "secnet/rng.hpp"

namespace secnet {

Network::Network(int n, const std::vector<Edge>& edges) : n_(n), m_(0) {
    if (n <= 0) throw std::invalid_argument("network size must be positive");
    adj_.resize(n);
    dense_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::out_of_range("edge index out of range");
        if (i == j) throw std::invalid_argument("self-loops are not allowed");
        auto& a = dense_[static_cast<std::size_t>(i) * n + j];
        if (a) continue;  // deduplicate
        a = 1;
        dense_[static_cast<std::size_t>(j) * n + i] = 1;
        adj_[i].push_back(j);
        adj_[j].push_back(i);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<Edge> Network::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int i = 0; i < n_; ++i)
        for (int j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

bool Network::is_connected() const {
    auto labels = component_labels();
    return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

std::vector<int> Network::component_labels(const std::vector<int>& removed) const {
    std::vector<std::uint8_t> mask(n_, 1);
    for (int r : removed) {
        if (r < 0 || r >= n_) throw std::out_of_range("removed node out of range");
        mask[r] = 0;
    }
    return component_labels_masked(mask);
}

std::vector<int> Network::component_labels_masked(const std::vector<std::uint8_t>& mask) const {
    if (static_cast<int>(mask.size()) != n_)
        throw std::invalid_argument("mask size mismatch");
    std::vector<int> label(n_, -1);
    int next = 0;
    std::deque<int> queue;
    for (int start = 0; start < n_; ++start) {
        if (!mask[start] || label[start] >= 0) continue;
        label[start] = next;
        queue.push_back(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                if (mask[v] && label[v] < 0) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

bool Network::connected_without(int i, int k, const std::vector<int>& removed) const {
    if (i == k) throw std::invalid_argument("endpoints must differ");
    auto labels = component_labels(removed);
    if (labels[i] < 0 || labels[k] < 0)
        throw std::invalid_argument("endpoint is in the removed set");
    return labels[i] == labels[k];
}

std::vector<int> Network::bfs_depth(int root) const {
    if (root < 0 || root >= n_) throw std::out_of_range("root out of range");
    std::vector<int> depth(n_, -1);
    depth[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u]) {
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return depth;
}

Network build_network(const std::vector<Edge>& edges, int n) { return Network(n, edges); }

namespace {

Network make_erdos_renyi(int n, double c, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi requires n >= 2");
    if (c <= 0.0 || c > n - 1)
        throw std::invalid_argument("erdos_renyi connectivity must satisfy 0 < c <= n-1");
    const double p = c / (n - 1);
    RngStream rng(seed, /*stream=*/0x4552ULL);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return Network(n, edges);
}

Network make_tree(int branching, int levels) {
    if (branching < 1 || levels < 0) throw std::invalid_argument("invalid tree parameters");
    std::vector<Edge> edges;
    // nodes are laid out level by level; level l starts at (b^l - 1)/(b - 1)
    std::vector<int> current{0};
    int next_id = 1;
    for (int level = 0; level < levels; ++level) {
        std::vector<int> children;
        for (int parent : current) {
            for (int b = 0; b < branching; ++b) {
                edges.emplace_back(parent, next_id);
                children.push_back(next_id);
                ++next_id;
            }
        }
        current = std::move(children);
    }
    return Network(next_id, edges);
}

Network make_community(const std::vector<int>& groups, const std::vector<Edge>& bridges) {
    if (groups.empty()) throw std::invalid_argument("community requires at least one group");
    int n = 0;
    std::vector<Edge> edges;
    for (int g : groups) {
        if (g <= 0) throw std::invalid_argument("group sizes must be positive");
        for (int i = n; i < n + g; ++i)
            for (int j = i + 1; j < n + g; ++j) edges.emplace_back(i, j);
        n += g;
    }
    edges.insert(edges.end(), bridges.begin(), bridges.end());
    return Network(n, edges);
}

}  // namespace

Network generate_topology(const TopologySpec& spec) {
    switch (spec.variant) {
        case TopologySpec::Variant::Explicit:
            return Network(spec.n, spec.edge_list);
        case TopologySpec::Variant::ErdosRenyi:
            return make_erdos_renyi(spec.n, spec.connectivity, spec.seed);
        case TopologySpec::Variant::Tree:
            return make_tree(spec.branching, spec.levels);
        case TopologySpec::Variant::Community:
            return make_community(spec.group_sizes, spec.bridges);
    }
    throw std::invalid_argument("unknown topology variant");
}

Network example_six_node_network() {
    return Network(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {4, 5}});
}

std::string to_edge_list(const Network& net) {
    std::ostringstream out;
    out << "n " << net.size() << "\n";
    for (const auto& [i, j] : net.edges()) out << i << " " << j << "\n";
    return out.str();
}

Network from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n")
        throw std::invalid_argument("edge list must start with 'n <count>'");
    std::vector<Edge> edges;
    int i, j;
    while (in >> i >> j) edges.emplace_back(i, j);
    return Network(n, edges);
}

}  // namespace secnet
