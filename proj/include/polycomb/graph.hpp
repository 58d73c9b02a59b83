// Simple undirected graphs on vertices 0..n-1, stored as a sorted edge list
// plus an adjacency matrix for O(1) queries.

#ifndef POLYCOMB_GRAPH_HPP
#define POLYCOMB_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace polycomb {

struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted

    Graph() = default;
    // Validates vertex range, i != j, and deduplicates/normalizes edges.
    Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edge_list);

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n + j]; }
    bool operator==(const Graph& other) const {
        return n == other.n && edges == other.edges;
    }

    static Graph complete(std::size_t n);

private:
    std::vector<char> adj_;
};

}  // namespace polycomb

#endif
