#ifndef TUTTE_MULTIGRAPH_HPP
#define TUTTE_MULTIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace tutte {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled multigraph on vertices 0..n-1. Loops (u == v) and parallel
/// edges are first-class; the edge list order is preserved because it is
/// the edge ordering used by the activities engine.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws std::invalid_argument if an endpoint is out of range.
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const { return edges_[index]; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

enum class EdgeKind { Loop, Bridge, Ordinary };

/// Components of (V, E), counting isolated vertices.
int component_count(const Multigraph& g);

/// Components of (V, A) for the edge subset A given as a bitmask over edge
/// indices. Only valid for graphs with at most 64 edges.
int component_count(const Multigraph& g, std::uint64_t edge_mask);

/// Graphic rank n - k(A) of an edge subset.
int graphic_rank(const Multigraph& g, std::uint64_t edge_mask);

/// Same vertex set, edge list with edge `e` removed (order preserved).
Multigraph delete_edge(const Multigraph& g, int e);

/// Merges the endpoints of edge `e` and renormalizes vertex labels to
/// 0..n-2. Edges parallel to `e` become loops. Throws on loops.
Multigraph contract_edge(const Multigraph& g, int e);

EdgeKind classify_edge(const Multigraph& g, int e);

}  // namespace tutte

#endif  // TUTTE_MULTIGRAPH_HPP
