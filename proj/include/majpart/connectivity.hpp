#pragma once

#include <utility>
#include <vector>

namespace majpart {

// Union-find over 0..n-1 with union by size and path halving.
class DisjointSets {
  public:
    explicit DisjointSets(int n);
    int find(int v);
    bool unite(int a, int b);  // false if already joined
    int components() const { return components_; }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

// One component covering all n vertices. By convention the empty graph on a
// single vertex is connected; on zero vertices it is not.
bool spanning_connected(int n, const std::vector<std::pair<int, int>>& edges);

// Global edge connectivity of an undirected graph given as an edge list:
// min over t != 0 of the 0->t max flow with unit capacities. Disconnected
// input gives 0, as does n <= 1 (no cut to measure).
int edge_connectivity(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace majpart
