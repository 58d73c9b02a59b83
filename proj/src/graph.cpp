#include "polycomb/graph.hpp"

#include "polycomb/exact.hpp"

#include <algorithm>

namespace polycomb {

Graph::Graph(std::size_t n_, std::vector<std::pair<std::size_t, std::size_t>> edge_list)
    : n(n_) {
    for (auto& [i, j] : edge_list) {
        if (i >= n || j >= n)
            throw ValidationError("edge endpoint " + std::to_string(std::max(i, j)) +
                                  " out of range for " + std::to_string(n) + " vertices");
        if (i == j) throw ValidationError("loops are not allowed");
        if (i > j) std::swap(i, j);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges = std::move(edge_list);
    adj_.assign(n * n, 0);
    for (const auto& [i, j] : edges) adj_[i * n + j] = adj_[j * n + i] = 1;
}

Graph Graph::complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

}  // namespace polycomb
