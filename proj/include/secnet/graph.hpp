#ifndef SECNET_GRAPH_HPP
#define SECNET_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace secnet {

using Edge = std::pair<int, int>;

// Undirected simple graph. Immutable after construction; all queries are
// safe to call concurrently.
class Network {
public:
    Network(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }
    bool has_edge(int i, int j) const { return dense_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    std::vector<Edge> edges() const;
    int edge_count() const { return m_; }

    bool is_connected() const;

    // True iff a path i -> k exists avoiding every node in `removed`.
    // Requires i != k and neither endpoint removed.
    bool connected_without(int i, int k, const std::vector<int>& removed) const;

    // Connected-component labels of the subgraph with `removed` nodes
    // deleted (label -1 on removed nodes). Labels are 0..#components-1.
    std::vector<int> component_labels(const std::vector<int>& removed = {}) const;

    // Component labels of the subgraph induced by nodes with mask[i] != 0.
    std::vector<int> component_labels_masked(const std::vector<std::uint8_t>& mask) const;

    // BFS depth from node `root` (-1 on unreachable nodes).
    std::vector<int> bfs_depth(int root) const;

private:
    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> dense_;
};

struct TopologySpec {
    enum class Variant { Explicit, ErdosRenyi, Tree, Community };
    Variant variant = Variant::Explicit;

    // explicit
    int n = 0;
    std::vector<Edge> edge_list;
    // erdos_renyi: edge probability c / (n - 1)
    double connectivity = 0.0;
    // tree
    int branching = 0;
    int levels = 0;
    // community: complete intra-group graphs plus the given bridge edges
    std::vector<int> group_sizes;
    std::vector<Edge> bridges;

    std::uint64_t seed = 0;
};

Network build_network(const std::vector<Edge>& edges, int n);
Network generate_topology(const TopologySpec& spec);

// The 6-node example network used throughout the tests.
Network example_six_node_network();

// Edge-list file: first line "n <count>", then one "i j" pair per line.
std::string to_edge_list(const Network& net);
Network from_edge_list(const std::string& text);

}  // namespace secnet

#endif
