#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tutte/engines.hpp"
#include "tutte/union_find.hpp"

namespace tutte {
namespace {

// Splits the tree at tree edge `cut_edge` and marks the side containing
// its first endpoint.
std::vector<bool> tree_side(const Multigraph& g, const std::vector<int>& tree, int cut_edge) {
  std::vector<bool> side(g.vertex_count(), false);
  std::vector<int> stack{g.edge(cut_edge).u};
  side[g.edge(cut_edge).u] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int idx : tree) {
      if (idx == cut_edge) continue;
      const Edge& e = g.edge(idx);
      int next = -1;
      if (e.u == v && !side[e.v]) next = e.v;
      if (e.v == v && !side[e.u]) next = e.u;
      if (next >= 0) {
        side[next] = true;
        stack.push_back(next);
      }
    }
  }
  return side;
}

// Edge indices of the unique tree path between two vertices.
std::vector<int> tree_path(const Multigraph& g, const std::vector<int>& tree, int from, int to) {
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (int idx : tree) {
      const Edge& e = g.edge(idx);
      const int other = e.u == v ? e.v : (e.v == v ? e.u : -1);
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        parent[other] = v;
        parent_edge[other] = idx;
        stack.push_back(other);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  return path;
}

void record_tree(const Multigraph& g, const std::vector<int>& tree, ActivityTable& table) {
  std::vector<bool> in_tree(g.edge_count(), false);
  for (int idx : tree) in_tree[idx] = true;

  // An edge of the tree is internally active when it carries the smallest
  // index in the cut separating the two halves of tree minus that edge.
  int internal = 0;
  for (int idx : tree) {
    const std::vector<bool> side = tree_side(g, tree, idx);
    bool active = true;
    for (int other = 0; other < idx && active; ++other) {
      const Edge& e = g.edge(other);
      if (side[e.u] != side[e.v]) active = false;
    }
    if (active) ++internal;
  }

  // An edge outside the tree is externally active when it carries the
  // smallest index in its fundamental cycle. A loop is its own cycle.
  int external = 0;
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    if (in_tree[idx]) continue;
    const Edge& e = g.edge(idx);
    if (e.u == e.v) {
      ++external;
      continue;
    }
    const std::vector<int> path = tree_path(g, tree, e.u, e.v);
    const bool active =
        std::all_of(path.begin(), path.end(), [idx](int tree_idx) { return tree_idx > idx; });
    if (active) ++external;
  }

  auto [it, inserted] = table.counts.try_emplace({internal, external}, 1);
  if (!inserted) ++it->second;
}

void enumerate_trees(const Multigraph& g, int next_edge, std::vector<int>& tree, const UnionFind& uf,
                     ActivityTable& table) {
  const int needed = g.vertex_count() - 1;
  if (static_cast<int>(tree.size()) == needed) {
    record_tree(g, tree, table);
    return;
  }
  if (next_edge == g.edge_count()) return;
  if (static_cast<int>(tree.size()) + (g.edge_count() - next_edge) < needed) return;

  // Remaining edges must still be able to connect the current partition.
  UnionFind feasibility = uf;
  for (int idx = next_edge; idx < g.edge_count(); ++idx) {
    feasibility.unite(g.edge(idx).u, g.edge(idx).v);
  }
  if (feasibility.component_count() != 1) return;

  const Edge& e = g.edge(next_edge);
  UnionFind with = uf;
  if (with.unite(e.u, e.v)) {
    tree.push_back(next_edge);
    enumerate_trees(g, next_edge + 1, tree, with, table);
    tree.pop_back();
  }
  enumerate_trees(g, next_edge + 1, tree, uf, table);
}

}  // namespace

mpz_class ActivityTable::tree_count() const {
  mpz_class total = 0;
  for (const auto& [key, count] : counts) total += count;
  return total;
}

BiPoly ActivityTable::to_bipoly() const {
  BiPoly p;
  for (const auto& [key, count] : counts) p.add_term(key.first, key.second, count);
  return p;
}

ActivityTable tutte_activities(const Multigraph& g) {
  if (component_count(g) != 1) {
    throw std::invalid_argument("activities require a connected graph");
  }
  ActivityTable table;
  std::vector<int> tree;
  tree.reserve(g.vertex_count());
  UnionFind uf(g.vertex_count());
  enumerate_trees(g, 0, tree, uf, table);
  return table;
}

}  // namespace tutte
