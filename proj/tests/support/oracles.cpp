#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "tutte/union_find.hpp"

namespace tutte::testing {
namespace {

// Bareiss fraction-free elimination; every division is exact.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class numerator = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), numerator.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<int>> nonloop_multiplicities(const Multigraph& g) {
  std::vector<std::vector<int>> mult(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

}  // namespace

mpz_class spanning_tree_count(const Multigraph& g) {
  if (component_count(g) != 1) throw std::invalid_argument("spanning_tree_count needs a connected graph");
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const auto mult = nonloop_multiplicities(g);
  std::vector<std::vector<mpz_class>> laplacian_minor(n - 1, std::vector<mpz_class>(n - 1, 0));
  for (int u = 0; u < n - 1; ++u) {
    int degree = 0;
    for (int v = 0; v < n; ++v) degree += mult[u][v];
    laplacian_minor[u][u] = degree;
    for (int v = 0; v < n - 1; ++v) {
      if (u != v) laplacian_minor[u][v] = -mult[u][v];
    }
  }
  return integer_determinant(std::move(laplacian_minor));
}

mpz_class maximal_forest_count(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<int> component_id(g.vertex_count(), -1);
  int components = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int root = uf.find(v);
    if (component_id[root] < 0) component_id[root] = components++;
    component_id[v] = component_id[root];
  }
  std::vector<std::vector<int>> vertex_index(components, std::vector<int>());
  std::vector<int> local_index(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    local_index[v] = static_cast<int>(vertex_index[component_id[v]].size());
    vertex_index[component_id[v]].push_back(v);
  }
  std::vector<std::vector<Edge>> component_edges(components);
  for (const Edge& e : g.edges()) {
    component_edges[component_id[e.u]].push_back({local_index[e.u], local_index[e.v]});
  }
  mpz_class total = 1;
  for (int c = 0; c < components; ++c) {
    total *= spanning_tree_count(
        Multigraph(static_cast<int>(vertex_index[c].size()), std::move(component_edges[c])));
  }
  return total;
}

mpz_class brute_force_tree_count(const Multigraph& g) {
  const int m = g.edge_count();
  if (m > 20) throw std::invalid_argument("brute force limited to 20 edges");
  const int n = g.vertex_count();
  mpz_class count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    if (component_count(g, mask) == 1) ++count;
  }
  return count;
}

std::string brute_canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("brute canonical form limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      relabeled.push_back(std::minmax(perm[e.u], perm[e.v]));
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string out = "n=" + std::to_string(n) + ";";
  for (const auto& [u, v] : best) {
    out += std::to_string(u) + "," + std::to_string(v) + ";";
  }
  return out;
}

std::vector<Multigraph> connected_multigraphs_up_to_iso(int max_n, int max_m) {
  std::vector<Multigraph> out;
  std::unordered_set<std::string> seen;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pair_types;
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) pair_types.emplace_back(u, v);
    }
    std::vector<int> multiplicity(pair_types.size(), 0);
    std::vector<Edge> edges;

    auto emit = [&]() {
      if (static_cast<int>(edges.size()) < n - 1) return;  // cannot be connected
      Multigraph g(n, edges);
      if (component_count(g) != 1) return;
      if (seen.insert(brute_canonical_form(g)).second) out.push_back(std::move(g));
    };

    // Multisets over the pair types, enumerated by nondecreasing type.
    auto recurse = [&](auto&& self, std::size_t type, int budget) -> void {
      emit();
      if (budget == 0 || type == pair_types.size()) return;
      for (std::size_t t = type; t < pair_types.size(); ++t) {
        edges.push_back({pair_types[t].first, pair_types[t].second});
        self(self, t, budget - 1);
        edges.pop_back();
      }
    };
    recurse(recurse, 0, max_m);
  }
  return out;
}

Multigraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});        // outer cycle
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});              // spokes
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
  return Multigraph(10, std::move(edges));
}

Multigraph random_multigraph(Rng& rng, int n, int m) {
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    edges.push_back({static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n))});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph random_connected_multigraph(Rng& rng, int max_n, int max_m) {
  for (;;) {
    const int n = static_cast<int>(rng.in_range(1, max_n));
    if (n - 1 > max_m) continue;
    const int m = static_cast<int>(rng.in_range(std::max(0, n - 1), max_m));
    Multigraph g = random_multigraph(rng, n, m);
    if (component_count(g) == 1) return g;
  }
}

BiPoly random_bipoly(Rng& rng, int max_degree, int max_terms, long coeff_bound) {
  BiPoly p;
  const int terms = static_cast<int>(rng.in_range(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    const int i = static_cast<int>(rng.in_range(0, max_degree));
    const int j = static_cast<int>(rng.in_range(0, max_degree));
    const long c = static_cast<long>(rng.in_range(0, 2 * coeff_bound)) - coeff_bound;
    p.add_term(i, j, c);
  }
  return p;
}

}  // namespace tutte::testing
