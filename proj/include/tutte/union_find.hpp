#ifndef TUTTE_UNION_FIND_HPP
#define TUTTE_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace tutte {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if the two sets were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }

  bool connected(int a, int b) { return find(a) == find(b); }
  int component_count() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace tutte

#endif  // TUTTE_UNION_FIND_HPP
