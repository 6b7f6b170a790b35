#include "tutte/multigraph.hpp"

#include <stdexcept>
#include <string>

#include "tutte/union_find.hpp"

namespace tutte {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    const Edge& e = edges_[idx];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("edge " + std::to_string(idx) + " endpoint out of range");
    }
  }
}

int component_count(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.component_count();
}

int component_count(const Multigraph& g, std::uint64_t edge_mask) {
  if (g.edge_count() > 64) throw std::invalid_argument("edge mask requires at most 64 edges");
  UnionFind uf(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (edge_mask >> i & 1) uf.unite(g.edge(i).u, g.edge(i).v);
  }
  return uf.component_count();
}

int graphic_rank(const Multigraph& g, std::uint64_t edge_mask) {
  return g.vertex_count() - component_count(g, edge_mask);
}

Multigraph delete_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i != e) edges.push_back(g.edge(i));
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
  const Edge target = g.edge(e);
  if (target.u == target.v) throw std::invalid_argument("cannot contract a loop");
  const int keep = std::min(target.u, target.v);
  const int drop = std::max(target.u, target.v);
  auto relabel = [&](int w) {
    if (w == drop) w = keep;
    return w > drop ? w - 1 : w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    edges.push_back({relabel(g.edge(i).u), relabel(g.edge(i).v)});
  }
  return Multigraph(g.vertex_count() - 1, std::move(edges));
}

EdgeKind classify_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
  const Edge edge = g.edge(e);
  if (edge.u == edge.v) return EdgeKind::Loop;
  UnionFind uf(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i != e) uf.unite(g.edge(i).u, g.edge(i).v);
  }
  return uf.connected(edge.u, edge.v) ? EdgeKind::Ordinary : EdgeKind::Bridge;
}

}  // namespace tutte
