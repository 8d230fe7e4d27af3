#pragma once

// Marked grid posets [m] x [m] with the second-coordinate steps marked, and
// the explicit maps eta, H1, H2 between them that corepresent the zigzag of
// simplicial homotopies connecting the identity of the diagonal of a
// classification diagram to the diagonal-then-projection composite.
//
// Cofaces and codegeneracies act diagonally on grids, matching the
// cosimplicial object [.] x [.] with second factor maximally marked. The
// homotopy identities are therefore checked in corepresented form: each of
// May's identities with the composition order reversed and delta_i/sigma_i
// replaced by the diagonal coface/codegeneracy.

#include <string>
#include <utility>
#include <vector>

#include "delta.hpp"

namespace rnk {

struct GridPoint {
  int j = 0, k = 0;
  bool operator==(const GridPoint&) const = default;
  bool leq(const GridPoint& o) const { return j <= o.j && k <= o.k; }
};

// A map of grids [m] x [m] -> [n] x [n].
struct GridMap {
  int m = 0, n = 0;
  std::vector<GridPoint> values;  // row-major, index j*(m+1)+k

  const GridPoint& at(int j, int k) const { return values[j * (m + 1) + k]; }
  GridPoint& at(int j, int k) { return values[j * (m + 1) + k]; }
  bool operator==(const GridMap&) const = default;
};

inline GridMap grid_identity(int n) {
  GridMap g{n, n, {}};
  g.values.resize((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) g.at(j, k) = {j, k};
  return g;
}

// A(B(p)) for B : [m]x[m] -> [l]x[l], A : [l]x[l] -> [n]x[n].
inline GridMap compose_grids(const GridMap& A, const GridMap& B) {
  if (B.n != A.m) throw std::invalid_argument("compose_grids: size mismatch");
  GridMap g{B.m, A.n, {}};
  g.values.reserve(B.values.size());
  for (const GridPoint& p : B.values) g.values.push_back(A.at(p.j, p.k));
  return g;
}

// delta^i x delta^i : [n-1]x[n-1] -> [n]x[n].
inline GridMap grid_coface(int n, int i) {
  DeltaMap d = delta_coface(n, i);
  GridMap g{n - 1, n, {}};
  g.values.resize(n * n);
  for (int j = 0; j <= n - 1; ++j)
    for (int k = 0; k <= n - 1; ++k) g.at(j, k) = {d(j), d(k)};
  return g;
}

// sigma^i x sigma^i : [n+1]x[n+1] -> [n]x[n].
inline GridMap grid_codegeneracy(int n, int i) {
  DeltaMap s = delta_codegeneracy(n, i);
  GridMap g{n + 1, n, {}};
  g.values.resize((n + 2) * (n + 2));
  for (int j = 0; j <= n + 1; ++j)
    for (int k = 0; k <= n + 1; ++k) g.at(j, k) = {s(j), s(k)};
  return g;
}

// Corepresents the composite of the first projection after the diagonal:
// (j,k) |-> (j,j).
inline GridMap alpha_rho_map(int n) {
  GridMap g{n, n, {}};
  g.values.resize((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) g.at(j, k) = {j, j};
  return g;
}

// eta^n(i,j) = (i,i) for i >= j, (i,j) for i < j.
inline GridMap eta_map(int n) {
  GridMap g{n, n, {}};
  g.values.resize((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) g.at(i, j) = i >= j ? GridPoint{i, i} : GridPoint{i, j};
  return g;
}

// Case analysis for the two homotopy families of maps
// [n+1]x[n+1] -> [n]x[n]. Returns the indices of all matching cases so the
// verifier can flag uncovered or doubly-covered inputs.
inline std::vector<int> h_map_cases(int eps, int i, int /*n*/, int j, int k) {
  std::vector<int> hit;
  if (eps == 1) {
    if (j <= i && k <= i) hit.push_back(0);
    if (j > i && j >= k) hit.push_back(1);
    if (k > i && i >= j) hit.push_back(2);
    if (k > j && j > i) hit.push_back(3);
  } else {
    if (j <= i) hit.push_back(0);
    if (j > i && j >= k) hit.push_back(1);
    if (k > j && j > i) hit.push_back(2);
  }
  return hit;
}

inline GridPoint h_map_value(int eps, int i, int n, int j, int k) {
  (void)n;
  if (eps == 1) {
    if (j <= i && k <= i) return {j, k};
    if (j > i && j >= k) return {j - 1, j - 1};
    if (k > i && i >= j) return {j, k - 1};
    return {j - 1, k - 1};  // k > j > i
  }
  if (j <= i) return {j, j};
  if (j >= k) return {j - 1, j - 1};  // j > i
  return {j - 1, k - 1};              // k > j > i
}

// H_eps^{i,n} : [n+1]x[n+1] -> [n]x[n], 0 <= i <= n.
inline GridMap h_map(int eps, int i, int n) {
  if (eps != 1 && eps != 2) throw std::invalid_argument("h_map: eps must be 1 or 2");
  if (i < 0 || i > n) throw std::invalid_argument("h_map: index out of range");
  GridMap g{n + 1, n, {}};
  g.values.resize((n + 2) * (n + 2));
  for (int j = 0; j <= n + 1; ++j)
    for (int k = 0; k <= n + 1; ++k) g.at(j, k) = h_map_value(eps, i, n, j, k);
  return g;
}

// ---------------------------------------------------------------------------
// Verification

struct GridMapReport {
  bool ok = true;
  long long instances = 0;
  std::string witness;
};

// Monotonicity over all comparable pairs and marking preservation: inputs
// sharing a first coordinate must have images sharing a first coordinate.
inline GridMapReport verify_grid_map(const GridMap& g) {
  GridMapReport rep;
  const int m = g.m;
  for (int j = 0; j <= m; ++j)
    for (int k = 0; k <= m; ++k)
      for (int j2 = j; j2 <= m; ++j2)
        for (int k2 = 0; k2 <= m; ++k2) {
          if (!(GridPoint{j, k}.leq({j2, k2}))) continue;
          ++rep.instances;
          if (!g.at(j, k).leq(g.at(j2, k2))) {
            rep.ok = false;
            rep.witness = "not monotone at (" + std::to_string(j) + "," + std::to_string(k) +
                          ") <= (" + std::to_string(j2) + "," + std::to_string(k2) + ")";
            return rep;
          }
        }
  for (int j = 0; j <= m; ++j)
    for (int k = 0; k <= m; ++k)
      for (int k2 = k + 1; k2 <= m; ++k2) {
        ++rep.instances;
        if (g.at(j, k).j != g.at(j, k2).j) {
          rep.ok = false;
          rep.witness = "marking broken at (" + std::to_string(j) + "," + std::to_string(k) +
                        ") ~ (" + std::to_string(j) + "," + std::to_string(k2) + ")";
          return rep;
        }
      }
  return rep;
}

struct ZigzagRow {
  int n = -1, i = -1;
  std::string identity;
  long long instances = 0;
  bool ok = true;
  std::string detail;
};

struct ZigzagReport {
  int max_n = 0;
  bool pass = true;
  long long total_instances = 0;
  std::vector<ZigzagRow> rows;
};

namespace detail {
inline void zz_row(ZigzagReport& rep, int n, int i, const std::string& name,
                   long long instances, bool ok, const std::string& detail = {}) {
  rep.rows.push_back({n, i, name, instances, ok, detail});
  rep.total_instances += instances;
  rep.pass = rep.pass && ok;
}

inline void zz_equal(ZigzagReport& rep, int n, int i, const std::string& name,
                     const GridMap& lhs, const GridMap& rhs) {
  long long inst = static_cast<long long>(lhs.values.size());
  if (lhs == rhs) {
    zz_row(rep, n, i, name, inst, true);
    return;
  }
  std::string detail = "maps differ";
  for (int j = 0; j <= lhs.m; ++j)
    for (int k = 0; k <= lhs.m; ++k)
      if (!(lhs.at(j, k) == rhs.at(j, k))) {
        detail = "differ at (" + std::to_string(j) + "," + std::to_string(k) + "): (" +
                 std::to_string(lhs.at(j, k).j) + "," + std::to_string(lhs.at(j, k).k) +
                 ") vs (" + std::to_string(rhs.at(j, k).j) + "," +
                 std::to_string(rhs.at(j, k).k) + ")";
        j = lhs.m + 1;
        break;
      }
  zz_row(rep, n, i, name, inst, false, detail);
}
}  // namespace detail

// Runs every check on the homotopy data up to level N, with the verifier
// free of any assumption that the case analyses are well formed:
//   - the case formulas cover each grid point exactly once;
//   - eta and each H are monotone and marking-preserving;
//   - the reversed-order face and degeneracy identity families;
//   - the boundary conditions (H1 between the identity and eta, H2 between
//     eta and the diagonal-then-projection composite);
//   - vertex components are degenerate: H^{0,0} equals the codegeneracy and
//     every H maps diagonal points to diagonal points;
//   - projection-after-diagonal is the identity on every grid.
// `mutate` (test hook) lets a caller corrupt one family member before
// verification.
inline ZigzagReport verify_zigzag(
    int N, const std::function<void(int eps, int i, int n, GridMap&)>& mutate = nullptr) {
  ZigzagReport rep;
  rep.max_n = N;
  std::vector<GridMap> eta(N + 1);
  for (int n = 0; n <= N; ++n) eta[n] = eta_map(n);
  // H[eps-1][n][i]
  std::vector<std::vector<std::vector<GridMap>>> H(2);
  for (int eps = 1; eps <= 2; ++eps) {
    H[eps - 1].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      H[eps - 1][n].resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        H[eps - 1][n][i] = h_map(eps, i, n);
        if (mutate) mutate(eps, i, n, H[eps - 1][n][i]);
      }
    }
  }

  // formula coverage
  for (int eps = 1; eps <= 2; ++eps)
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= n; ++i) {
        long long inst = 0;
        bool ok = true;
        std::string detail;
        for (int j = 0; j <= n + 1 && ok; ++j)
          for (int k = 0; k <= n + 1 && ok; ++k) {
            ++inst;
            size_t hits = h_map_cases(eps, i, n, j, k).size();
            if (hits != 1) {
              ok = false;
              detail = "grid point (" + std::to_string(j) + "," + std::to_string(k) +
                       ") matched " + std::to_string(hits) + " cases";
            }
          }
        detail::zz_row(rep, n, i, "case-coverage-H" + std::to_string(eps), inst, ok, detail);
      }

  // map validity
  for (int n = 0; n <= N; ++n) {
    GridMapReport r = verify_grid_map(eta[n]);
    detail::zz_row(rep, n, -1, "grid-map-eta", r.instances, r.ok, r.witness);
  }
  for (int eps = 1; eps <= 2; ++eps)
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= n; ++i) {
        GridMapReport r = verify_grid_map(H[eps - 1][n][i]);
        detail::zz_row(rep, n, i, "grid-map-H" + std::to_string(eps), r.instances, r.ok,
                       r.witness);
      }

  for (int eps = 1; eps <= 2; ++eps) {
    const auto& He = H[eps - 1];
    const std::string tag = "-H" + std::to_string(eps);
    for (int n = 0; n <= N; ++n) {
      // boundaries: d0 side is eta for both; dlast side is the identity for
      // H1 and alpha.rho for H2
      detail::zz_equal(rep, n, 0, "boundary-eta" + tag,
                       compose_grids(He[n][0], grid_coface(n + 1, 0)), eta[n]);
      detail::zz_equal(rep, n, n,
                       eps == 1 ? "boundary-identity-H1" : "boundary-alpha-rho-H2",
                       compose_grids(He[n][n], grid_coface(n + 1, n + 1)),
                       eps == 1 ? grid_identity(n) : alpha_rho_map(n));
      // face identities
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          if (i < j) {
            detail::zz_equal(rep, n, i, "face-lt" + tag,
                             compose_grids(He[n][j], grid_coface(n + 1, i)),
                             compose_grids(grid_coface(n, i), He[n - 1][j - 1]));
          } else if (i == j && i != 0) {
            detail::zz_equal(rep, n, i, "face-eq" + tag,
                             compose_grids(He[n][j], grid_coface(n + 1, i)),
                             compose_grids(He[n][j - 1], grid_coface(n + 1, i)));
          } else if (i > j + 1) {
            detail::zz_equal(rep, n, i, "face-gt" + tag,
                             compose_grids(He[n][j], grid_coface(n + 1, i)),
                             compose_grids(grid_coface(n, i - 1), He[n - 1][j]));
          }
        }
      // degeneracy identities
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            if (i <= j) {
              detail::zz_equal(rep, n, i, "degen-le" + tag,
                               compose_grids(He[n][j], grid_codegeneracy(n + 1, i)),
                               compose_grids(grid_codegeneracy(n, i), He[n + 1][j + 1]));
            } else {
              detail::zz_equal(rep, n, i, "degen-gt" + tag,
                               compose_grids(He[n][j], grid_codegeneracy(n + 1, i)),
                               compose_grids(grid_codegeneracy(n, i - 1), He[n + 1][j]));
            }
          }
      }
      // vertex components: level-0 member equals the codegeneracy, and all
      // members take diagonal points to diagonal points
      if (n == 0) {
        detail::zz_equal(rep, 0, 0, "vertex-edge-degenerate" + tag, He[0][0],
                         grid_codegeneracy(0, 0));
      }
      for (int i = 0; i <= n; ++i) {
        long long inst = 0;
        bool ok = true;
        std::string detail_s;
        for (int a = 0; a <= n + 1; ++a) {
          ++inst;
          GridPoint p = He[n][i].at(a, a);
          if (p.j != p.k) {
            ok = false;
            detail_s = "diagonal vertex (" + std::to_string(a) + "," + std::to_string(a) +
                       ") maps off the diagonal";
            break;
          }
        }
        detail::zz_row(rep, n, i, "diagonal-vertices" + tag, inst, ok, detail_s);
      }
    }
  }

  // eta fixes the diagonal pointwise
  for (int n = 0; n <= N; ++n) {
    long long inst = 0;
    bool ok = true;
    for (int a = 0; a <= n; ++a) {
      ++inst;
      if (!(eta[n].at(a, a) == GridPoint{a, a})) ok = false;
    }
    detail::zz_row(rep, n, -1, "eta-diagonal-fixed", inst, ok);
  }

  // projection after diagonal is the identity on [n]
  for (int n = 0; n <= N; ++n) {
    long long inst = 0;
    bool ok = true;
    for (int j = 0; j <= n; ++j) {
      ++inst;
      // diagonal sends j to (j,j); the first projection returns j
      GridPoint p{j, j};
      if (p.j != j) ok = false;
    }
    detail::zz_row(rep, n, -1, "rho-alpha-identity", inst, ok);
  }
  return rep;
}

}  // namespace rnk
