#include "majpart/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace majpart {

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
    for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
}

int DisjointSets::find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
        parent_[static_cast<std::size_t>(v)] =
            parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
        v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
}

bool DisjointSets::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --components_;
    return true;
}

bool spanning_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    DisjointSets dsu(n);
    for (auto [u, v] : edges) dsu.unite(u, v);
    return dsu.components() == 1;
}

namespace {

// Unit-capacity max flow (Edmonds-Karp); each undirected edge becomes a
// forward/backward arc pair sharing flow state.
class UnitFlow {
  public:
    UnitFlow(int n, const std::vector<std::pair<int, int>>& edges) : head_(n) {
        for (auto [u, v] : edges) {
            add_arc(u, v);
            add_arc(v, u);
        }
    }

    int max_flow(int s, int t) {
        for (auto& c : cap_) c = 1;
        int total = 0;
        while (augment(s, t)) ++total;
        return total;
    }

  private:
    void add_arc(int u, int v) {
        head_[static_cast<std::size_t>(u)].push_back(static_cast<int>(to_.size()));
        to_.push_back(v);
        cap_.push_back(1);
    }

    bool augment(int s, int t) {
        const int n = static_cast<int>(head_.size());
        std::vector<int> via(static_cast<std::size_t>(n), -1);
        std::queue<int> bfs;
        bfs.push(s);
        via[static_cast<std::size_t>(s)] = -2;
        while (!bfs.empty() && via[static_cast<std::size_t>(t)] == -1) {
            const int u = bfs.front();
            bfs.pop();
            for (int a : head_[static_cast<std::size_t>(u)]) {
                const int v = to_[static_cast<std::size_t>(a)];
                if (cap_[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(v)] == -1) {
                    via[static_cast<std::size_t>(v)] = a;
                    bfs.push(v);
                }
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return false;
        for (int v = t; v != s;) {
            const int a = via[static_cast<std::size_t>(v)];
            cap_[static_cast<std::size_t>(a)] -= 1;
            cap_[static_cast<std::size_t>(a ^ 1)] += 1;
            v = to_[static_cast<std::size_t>(a ^ 1)];
        }
        return true;
    }

    std::vector<std::vector<int>> head_;
    std::vector<int> to_;
    std::vector<int> cap_;
};

}  // namespace

int edge_connectivity(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return 0;
    if (!spanning_connected(n, edges)) return 0;
    UnitFlow flow(n, edges);
    int best = static_cast<int>(edges.size());
    for (int t = 1; t < n; ++t) best = std::min(best, flow.max_flow(0, t));
    return best;
}

}  // namespace majpart
