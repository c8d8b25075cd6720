#ifndef KZL_GRAPHS_HPP
#define KZL_GRAPHS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kzl/parallel.hpp"
#include "kzl/rational.hpp"

namespace kzl {

// Finite simple graph on vertices 1..n (1-based throughout, matching the
// usual combinatorics convention for labeled graphs).
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  bool adjacent(int i, int j) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::uint32_t neighbors_mask(int v) const { return adj_.at(v); }

  Graph relabeled(const std::vector<int>& new_label) const;

  bool operator==(const Graph& rhs) const { return n_ == rhs.n_ && adj_ == rhs.adj_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // i < j, sorted
  std::vector<std::uint32_t> adj_;          // bit j set <=> {v,j} is an edge
};

// Closed with respect to the given labeling: the above- and the
// below-neighborhood of every vertex must be a clique; on failure `witness`
// holds the first violating triple (i, j, k) with {i,j},{i,k} edges and
// {j,k} missing.
struct ClosednessCheck {
  bool closed = false;
  std::array<int, 3> witness{0, 0, 0};
};
ClosednessCheck is_closed_labeling(const Graph& g);

struct NeighborIntervals {
  std::vector<int> below;  // {j < k : {j,k} edge}
  std::vector<int> above;  // {j > k : {k,j} edge}
  bool below_is_interval = false;
  bool above_is_interval = false;
  int max_above = 0;       // largest above-neighbor, 0 when none
  int min_below_next = 0;  // smallest below-neighbor of k+1, 0 when none/out of range
};
NeighborIntervals neighbor_intervals(const Graph& g, int k);

// Exhaustive search (with pruning) for a labeling under which the graph is
// closed; returns new_label[old_vertex] (1-based, index 0 unused) for the
// lexicographically least successful assignment, or nullopt. Branches on the
// label of vertex 1 in parallel; the merge keeps the least permutation.
std::optional<std::vector<int>> find_closed_labeling(const Graph& g,
                                                     int max_vertices = 9,
                                                     Exec exec = default_exec());

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);

// Bron-Kerbosch; each clique is a sorted vertex list.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace kzl

#endif
