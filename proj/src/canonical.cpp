#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tutte/engines.hpp"

namespace tutte {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// The certificate is the minimum, over all vertex relabelings, of the
// sorted edge multiset written as (min, max) label pairs. The search
// assigns labels 0, 1, ... one vertex at a time and is pruned two ways:
//
//  * Twin skipping. Vertices whose transposition is an automorphism
//    (equal loop counts and equal multiplicity to every third vertex)
//    lead to identical subtree minima, so only one per class is tried at
//    any position. Parallel-heavy minors collapse entire classes.
//  * Bound pruning. Every edge already has both endpoints labeled or is
//    bounded below by (anchor label, next position) respectively
//    (next position, next position). Sorting those bounds gives an
//    m-entry list that lexicographically lower-bounds every completion
//    of the current prefix; branches whose bound exceeds the best list
//    found so far cannot win.
//
// Candidates at each position are ordered by the edges they would pin
// down, so the first descent already lands near the minimum. Degree and
// loop refinement orders ties between structurally different vertices.
struct CanonicalSearch {
  int n = 0;
  int edge_total = 0;
  std::vector<std::vector<int>> mult;  // symmetric non-loop multiplicities
  std::vector<int> loops;
  std::vector<int> twin_class;
  std::vector<int> color;  // degree/loop refinement, used as a tiebreak

  std::vector<int> label_of;  // original vertex -> new label, -1 if unset
  EdgeList best;
  bool best_set = false;

  explicit CanonicalSearch(const Multigraph& g)
      : n(g.vertex_count()),
        edge_total(g.edge_count()),
        mult(n, std::vector<int>(n, 0)),
        loops(n, 0),
        twin_class(n, -1),
        label_of(n, -1) {
    for (const Edge& e : g.edges()) {
      if (e.u == e.v) {
        ++loops[e.u];
      } else {
        ++mult[e.u][e.v];
        ++mult[e.v][e.u];
      }
    }
    compute_twin_classes();
    refine_colors();
  }

  // u and w are twins when swapping them alone is an automorphism.
  bool twins(int u, int w) const {
    if (loops[u] != loops[w]) return false;
    for (int x = 0; x < n; ++x) {
      if (x == u || x == w) continue;
      if (mult[u][x] != mult[w][x]) return false;
    }
    return true;
  }

  void compute_twin_classes() {
    int next_class = 0;
    for (int v = 0; v < n; ++v) {
      if (twin_class[v] >= 0) continue;
      twin_class[v] = next_class;
      for (int w = v + 1; w < n; ++w) {
        if (twin_class[w] < 0 && twins(v, w)) twin_class[w] = next_class;
      }
      ++next_class;
    }
  }

  void refine_colors() {
    color.assign(n, 0);
    std::size_t distinct = 1;
    {
      std::vector<std::pair<int, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        int degree = 0;
        for (int u = 0; u < n; ++u) degree += mult[v][u];
        sig[v] = {loops[v], degree};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      distinct = sorted.size();
      for (int v = 0; v < n; ++v) {
        color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                    sorted.begin());
      }
    }
    for (;;) {
      using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
      std::vector<Sig> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n; ++u) {
          if (mult[v][u] > 0) nb.emplace_back(color[u], mult[v][u]);
        }
        std::sort(nb.begin(), nb.end());
        sig[v] = {color[v], std::move(nb)};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      if (sorted.size() == distinct) break;
      distinct = sorted.size();
      for (int v = 0; v < n; ++v) {
        color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                    sorted.begin());
      }
    }
  }

  // m-entry list that lower-bounds the final sorted edge list of every
  // completion of the current prefix.
  EdgeList bound_list(int positions_filled) const {
    EdgeList bound;
    bound.reserve(edge_total);
    const int p = positions_filled;
    for (int v = 0; v < n; ++v) {
      const int lv = label_of[v];
      for (int t = 0; t < loops[v]; ++t) {
        bound.emplace_back(lv >= 0 ? lv : p, lv >= 0 ? lv : p);
      }
      for (int u = v + 1; u < n; ++u) {
        if (mult[v][u] == 0) continue;
        const int lu = label_of[u];
        std::pair<int, int> entry;
        if (lv >= 0 && lu >= 0) {
          entry = std::minmax(lv, lu);
        } else if (lv >= 0 || lu >= 0) {
          entry = {std::max(lv, lu), p};
        } else {
          entry = {p, p + 1};
        }
        for (int t = 0; t < mult[v][u]; ++t) bound.push_back(entry);
      }
    }
    std::sort(bound.begin(), bound.end());
    return bound;
  }

  void dfs(int position) {
    if (position == n) {
      EdgeList candidate = bound_list(position);  // fully determined here
      if (!best_set || candidate < best) {
        best = std::move(candidate);
        best_set = true;
      }
      return;
    }
    struct Candidate {
      EdgeList delta;
      int color;
      int vertex;
    };
    std::vector<Candidate> ordered;
    std::vector<bool> class_tried(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
      if (label_of[v] >= 0 || class_tried[twin_class[v]]) continue;
      class_tried[twin_class[v]] = true;
      EdgeList delta;
      for (int u = 0; u < n; ++u) {
        if (label_of[u] >= 0 && mult[v][u] > 0) {
          for (int t = 0; t < mult[v][u]; ++t) delta.emplace_back(label_of[u], position);
        }
      }
      for (int t = 0; t < loops[v]; ++t) delta.emplace_back(position, position);
      std::sort(delta.begin(), delta.end());
      ordered.push_back({std::move(delta), color[v], v});
    }
    std::sort(ordered.begin(), ordered.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.delta, a.color, a.vertex) < std::tie(b.delta, b.color, b.vertex);
    });
    for (const Candidate& candidate : ordered) {
      label_of[candidate.vertex] = position;
      if (!best_set || bound_list(position + 1) <= best) {
        dfs(position + 1);
      }
      label_of[candidate.vertex] = -1;
    }
  }

  EdgeList run() {
    if (n > 0) dfs(0);
    return best_set ? best : EdgeList{};
  }
};

}  // namespace

CanonicalCertificate canonical_certificate(const Multigraph& g) {
  CanonicalSearch search(g);
  const EdgeList minimal = search.run();
  std::string bytes = "n=" + std::to_string(g.vertex_count()) + ";";
  for (const auto& [u, v] : minimal) {
    bytes += std::to_string(u);
    bytes += ',';
    bytes += std::to_string(v);
    bytes += ';';
  }
  return {std::move(bytes)};
}

}  // namespace tutte
