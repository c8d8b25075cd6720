#include "kzl/graphs.hpp"

#include <algorithm>

namespace kzl {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0 || n > 31) throw Error("vertex count out of range");
  adj_.assign(n + 1, 0);
  std::vector<std::pair<int, int>> sorted;
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) throw Error("edge endpoint out of range");
    if (i == j) throw Error("loops are not allowed");
    if (i > j) std::swap(i, j);
    sorted.emplace_back(i, j);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto [i, j] : sorted) {
    adj_[i] |= 1u << j;
    adj_[j] |= 1u << i;
  }
  edges_ = std::move(sorted);
}

bool Graph::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return (adj_[i] >> j) & 1u;
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (auto [i, j] : edges_) edges.emplace_back(new_label.at(i), new_label.at(j));
  return Graph(n_, edges);
}

ClosednessCheck is_closed_labeling(const Graph& g) {
  const int n = g.size();
  for (int i = 1; i <= n; ++i) {
    // above- then below-neighborhood, pairs in increasing order
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<int> nbrs;
      for (int j = 1; j <= n; ++j)
        if (g.adjacent(i, j) && (pass == 0 ? j > i : j < i)) nbrs.push_back(j);
      for (size_t a = 0; a < nbrs.size(); ++a)
        for (size_t b = a + 1; b < nbrs.size(); ++b)
          if (!g.adjacent(nbrs[a], nbrs[b]))
            return ClosednessCheck{false, {i, nbrs[a], nbrs[b]}};
    }
  }
  return ClosednessCheck{true, {0, 0, 0}};
}

namespace {
bool is_interval(const std::vector<int>& sorted) {
  if (sorted.empty()) return true;
  return sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}
}  // namespace

NeighborIntervals neighbor_intervals(const Graph& g, int k) {
  if (k < 1 || k > g.size()) throw Error("vertex out of range");
  NeighborIntervals out;
  for (int j = 1; j < k; ++j)
    if (g.adjacent(j, k)) out.below.push_back(j);
  for (int j = k + 1; j <= g.size(); ++j)
    if (g.adjacent(k, j)) out.above.push_back(j);
  out.below_is_interval = is_interval(out.below);
  out.above_is_interval = is_interval(out.above);
  out.max_above = out.above.empty() ? 0 : out.above.back();
  if (k + 1 <= g.size()) {
    for (int j = 1; j <= k; ++j)
      if (g.adjacent(j, k + 1)) {
        out.min_below_next = j;
        break;
      }
  }
  return out;
}

namespace {

bool violates(const Graph& g, const std::vector<int>& label, int i, int j, int k) {
  if (g.adjacent(j, k)) return false;
  return (label[i] < label[j] && label[i] < label[k]) ||
         (label[i] > label[j] && label[i] > label[k]);
}

// Closedness triples involving the newly labeled vertex v; vertices 1..v are
// labeled, the rest are not.
bool placement_ok(const Graph& g, const std::vector<int>& label, int v) {
  for (int i = 1; i < v; ++i) {
    if (!g.adjacent(i, v)) continue;
    // v is the shared vertex of some pair through i
    for (int w = 1; w < v; ++w)
      if (w != i && g.adjacent(i, w) && violates(g, label, i, v, w)) return false;
  }
  // v is the shared vertex
  for (int j = 1; j < v; ++j) {
    if (!g.adjacent(v, j)) continue;
    for (int k = j + 1; k < v; ++k)
      if (g.adjacent(v, k) && violates(g, label, v, j, k)) return false;
  }
  return true;
}

bool search_labels(const Graph& g, std::vector<int>& label, int vertex, int used_mask,
                   std::optional<std::vector<int>>& best) {
  const int n = g.size();
  if (vertex > n) {
    best = label;
    return true;
  }
  for (int lab = 1; lab <= n; ++lab) {
    if ((used_mask >> lab) & 1) continue;
    label[vertex] = lab;
    if (placement_ok(g, label, vertex)) {
      if (search_labels(g, label, vertex + 1, used_mask | (1 << lab), best)) return true;
    }
  }
  label[vertex] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_closed_labeling(const Graph& g, int max_vertices,
                                                     Exec exec) {
  const int n = g.size();
  if (n > max_vertices)
    throw Error("closed-labeling search limited to " + std::to_string(max_vertices) +
                " vertices");
  if (n == 0) return std::vector<int>{0};

  std::vector<std::optional<std::vector<int>>> per_first(n + 1);
  parallel_for(n, exec, [&](std::size_t idx) {
    int first = static_cast<int>(idx) + 1;
    std::vector<int> label(n + 1, 0);
    label[1] = first;
    std::optional<std::vector<int>> best;
    search_labels(g, label, 2, 1 << first, best);
    per_first[first] = std::move(best);
  });
  // deterministic merge: least label of vertex 1 wins, and within a branch
  // the depth-first order already yields the least assignment
  for (int first = 1; first <= n; ++first)
    if (per_first[first]) return per_first[first];
  return std::nullopt;
}

bool is_complete(const Graph& g) {
  long long want = static_cast<long long>(g.size()) * (g.size() - 1) / 2;
  return static_cast<long long>(g.edges().size()) == want;
}

bool is_connected(const Graph& g) {
  const int n = g.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 1; j <= n; ++j)
      if (g.adjacent(v, j) && !seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == n;
}

namespace {
void bron_kerbosch(const Graph& g, std::uint32_t r, std::uint32_t p, std::uint32_t x,
                   std::vector<std::vector<int>>& out) {
  if (p == 0 && x == 0) {
    std::vector<int> clique;
    for (int v = 1; v <= g.size(); ++v)
      if ((r >> v) & 1) clique.push_back(v);
    out.push_back(std::move(clique));
    return;
  }
  std::uint32_t candidates = p;
  for (int v = 1; v <= g.size() && candidates; ++v) {
    if (!((candidates >> v) & 1)) continue;
    std::uint32_t nv = g.neighbors_mask(v);
    bron_kerbosch(g, r | (1u << v), p & nv, x & nv, out);
    p &= ~(1u << v);
    x |= 1u << v;
    candidates &= ~(1u << v);
  }
}
}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint32_t all = 0;
  for (int v = 1; v <= g.size(); ++v) all |= 1u << v;
  bron_kerbosch(g, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kzl
