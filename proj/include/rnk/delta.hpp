#pragma once

// The simplex category: weakly monotone maps [m] -> [n], composition, the
// coface/codegeneracy factorization used to push maps through truncated
// simplicial sets, and the coordinate-reversal involution [m] -> [n],
// i |-> n - phi(m - i).

#include <stdexcept>
#include <vector>

#include "budget.hpp"

namespace rnk {

struct DeltaMap {
  int m = 0;                // source [m]
  int n = 0;                // target [n]
  std::vector<int> values;  // size m+1, weakly monotone, entries in 0..n

  bool valid() const {
    if (m < 0 || n < 0 || static_cast<int>(values.size()) != m + 1) return false;
    for (int i = 0; i <= m; ++i) {
      if (values[i] < 0 || values[i] > n) return false;
      if (i > 0 && values[i - 1] > values[i]) return false;
    }
    return true;
  }

  int operator()(int i) const { return values[i]; }
  bool operator==(const DeltaMap&) const = default;
};

inline DeltaMap delta_identity(int n) {
  DeltaMap d{n, n, {}};
  d.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) d.values[i] = i;
  return d;
}

// g o f for f: [m] -> [k], g: [k] -> [n].
inline DeltaMap delta_compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.n != g.m) throw std::invalid_argument("delta_compose: source/target mismatch");
  DeltaMap r{f.m, g.n, {}};
  r.values.reserve(f.m + 1);
  for (int v : f.values) r.values.push_back(g.values[v]);
  return r;
}

// delta^i : [n-1] -> [n], the injection skipping i.
inline DeltaMap delta_coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("delta_coface: bad index");
  DeltaMap d{n - 1, n, {}};
  d.values.reserve(n);
  for (int j = 0; j < n; ++j) d.values.push_back(j < i ? j : j + 1);
  return d;
}

// sigma^i : [n+1] -> [n], the surjection repeating i.
inline DeltaMap delta_codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("delta_codegeneracy: bad index");
  DeltaMap d{n + 1, n, {}};
  d.values.reserve(n + 2);
  for (int j = 0; j <= n + 1; ++j) d.values.push_back(j <= i ? j : j - 1);
  return d;
}

// The reversal involution: i |-> n - phi(m - i). An involutive functor on
// the simplex category.
inline DeltaMap delta_reverse(const DeltaMap& phi) {
  DeltaMap r{phi.m, phi.n, {}};
  r.values.reserve(phi.m + 1);
  for (int i = 0; i <= phi.m; ++i) r.values.push_back(phi.n - phi.values[phi.m - i]);
  return r;
}

// All monotone maps [m] -> [n] in lexicographic order of value tuples.
inline std::vector<DeltaMap> all_delta_maps(int m, int n) {
  std::vector<DeltaMap> out;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    charge_cells();
    out.push_back(DeltaMap{m, n, cur});
    int i = m;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j <= m; ++j) cur[j] = v;
  }
  return out;
}

// phi = (coface factors, applied last) o (codegeneracy factors, applied
// first). `cofaces` lists the skipped values in decreasing order;
// `codegeneracies` lists repeat positions in the order they are peeled off
// the source.
struct DeltaFactorization {
  std::vector<int> cofaces;
  std::vector<int> codegeneracies;
  int epi_target = 0;  // the intermediate [r]
};

inline DeltaFactorization delta_factorize(const DeltaMap& phi) {
  DeltaFactorization fac;
  std::vector<char> hit(phi.n + 1, 0);
  for (int v : phi.values) hit[v] = 1;
  for (int v = phi.n; v >= 0; --v)
    if (!hit[v]) fac.cofaces.push_back(v);
  // rank of each value inside the image gives the epi part
  std::vector<int> rank(phi.n + 1, -1);
  int r = -1;
  for (int v = 0; v <= phi.n; ++v)
    if (hit[v]) rank[v] = ++r;
  fac.epi_target = r;
  std::vector<int> e;
  e.reserve(phi.m + 1);
  for (int v : phi.values) e.push_back(rank[v]);
  while (static_cast<int>(e.size()) > r + 1) {
    for (int j = 0; j + 1 < static_cast<int>(e.size()); ++j) {
      if (e[j] == e[j + 1]) {
        fac.codegeneracies.push_back(j);
        e.erase(e.begin() + j);
        break;
      }
    }
  }
  return fac;
}

}  // namespace rnk
