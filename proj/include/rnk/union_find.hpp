#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace rnk {

// Union-find with path halving. unite() keeps the smaller index as the
// root, so find() of any member yields the least element of its class;
// quotients built on top of this inherit a deterministic choice of
// representatives.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent.size()); }

 private:
  std::vector<int> parent;
};

}  // namespace rnk
