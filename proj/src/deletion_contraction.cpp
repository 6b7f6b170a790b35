#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tutte/engines.hpp"
#include "tutte/union_find.hpp"

namespace tutte {
namespace {

struct StrippedForm {
  Multigraph graph;  // loop-free, bridge-free, no isolated vertices
  int bridges = 0;
  int loops = 0;
};

// Bridges are exactly the multiplicity-one edges whose removal disconnects
// their endpoints. Contracting a bridge cannot create loops (a parallel
// partner would have closed a cycle) or new bridges, so one simultaneous
// pass is enough.
std::vector<int> find_bridges(const Multigraph& g) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Edge& e : g.edges()) {
    ++multiplicity[std::minmax(e.u, e.v)];
  }
  std::vector<int> bridges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.u == e.v || multiplicity[std::minmax(e.u, e.v)] > 1) continue;
    UnionFind uf(g.vertex_count());
    for (int k = 0; k < g.edge_count(); ++k) {
      if (k != i) uf.unite(g.edge(k).u, g.edge(k).v);
    }
    if (!uf.connected(e.u, e.v)) bridges.push_back(i);
  }
  return bridges;
}

StrippedForm strip(const Multigraph& g) {
  StrippedForm out;

  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      ++out.loops;
    } else {
      kept.push_back(e);
    }
  }
  Multigraph current(g.vertex_count(), std::move(kept));

  const std::vector<int> bridges = find_bridges(current);
  if (!bridges.empty()) {
    out.bridges = static_cast<int>(bridges.size());
    UnionFind uf(current.vertex_count());
    for (int i : bridges) uf.unite(current.edge(i).u, current.edge(i).v);
    std::vector<int> representative(current.vertex_count());
    int next = 0;
    std::vector<int> seen(current.vertex_count(), -1);
    for (int v = 0; v < current.vertex_count(); ++v) {
      const int root = uf.find(v);
      if (seen[root] < 0) seen[root] = next++;
      representative[v] = seen[root];
    }
    std::vector<Edge> merged;
    merged.reserve(current.edge_count() - bridges.size());
    std::vector<bool> is_bridge(current.edge_count(), false);
    for (int i : bridges) is_bridge[i] = true;
    for (int i = 0; i < current.edge_count(); ++i) {
      if (is_bridge[i]) continue;
      merged.push_back({representative[current.edge(i).u], representative[current.edge(i).v]});
    }
    current = Multigraph(next, std::move(merged));
  }

  // Isolated vertices contribute nothing to the polynomial; dropping them
  // lets isomorphic cores share a cache entry.
  std::vector<int> degree(current.vertex_count(), 0);
  for (const Edge& e : current.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> compact(current.vertex_count(), -1);
  int kept_vertices = 0;
  for (int v = 0; v < current.vertex_count(); ++v) {
    if (degree[v] > 0) compact[v] = kept_vertices++;
  }
  std::vector<Edge> edges;
  edges.reserve(current.edge_count());
  for (const Edge& e : current.edges()) {
    edges.push_back({compact[e.u], compact[e.v]});
  }
  out.graph = Multigraph(kept_vertices, std::move(edges));
  return out;
}

int choose_pivot(const Multigraph& g, PivotRule rule) {
  if (rule == PivotRule::FirstOrdinary) return 0;
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Edge& e : g.edges()) {
    ++multiplicity[std::minmax(e.u, e.v)];
  }
  int best = 0;
  int best_mult = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const int mult = multiplicity[std::minmax(g.edge(i).u, g.edge(i).v)];
    if (mult > best_mult) {
      best_mult = mult;
      best = i;
    }
  }
  return best;
}

struct DelConContext {
  DelConOptions options;
  std::unordered_map<std::string, BiPoly> cache;
};

BiPoly delcon_rec(const Multigraph& g, DelConContext& ctx) {
  StrippedForm form = strip(g);
  const BiPoly factor = BiPoly::monomial(form.bridges, form.loops);
  if (form.graph.edge_count() == 0) return factor;

  std::string key;
  if (ctx.options.memoize) {
    key = canonical_certificate(form.graph).bytes;
    if (auto it = ctx.cache.find(key); it != ctx.cache.end()) {
      return factor * it->second;
    }
  }

  const int pivot = choose_pivot(form.graph, ctx.options.pivot);
  BiPoly core = delcon_rec(delete_edge(form.graph, pivot), ctx);
  core += delcon_rec(contract_edge(form.graph, pivot), ctx);

  if (ctx.options.memoize) ctx.cache.emplace(std::move(key), core);
  return factor * core;
}

}  // namespace

BiPoly tutte_deletion_contraction(const Multigraph& g, const DelConOptions& options) {
  DelConContext ctx{options, {}};
  return delcon_rec(g, ctx);
}

}  // namespace tutte
