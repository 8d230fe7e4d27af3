#pragma once

// Truncated simplicial sets: level sets up to a truncation dimension with
// face/degeneracy tables, the action of arbitrary simplex-category maps via
// the coface/codegeneracy factorization, nerves of finite categories and of
// codiscrete groupoids, the strict Segal and completeness checks, hom-set
// fibers, and the May-form simplicial homotopy verifier.
//
// A TruncSSet makes no claim above its truncation level.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "delta.hpp"
#include "relcat.hpp"

namespace rnk {

struct TruncSSet {
  int trunc = 0;
  std::vector<int> sizes;                            // per level 0..trunc
  std::vector<std::vector<std::string>> labels;      // optional, per level
  // faces[k][i] : X_k -> X_{k-1}, 1 <= k <= trunc, 0 <= i <= k
  std::vector<std::vector<std::vector<int>>> faces;
  // degens[k][j] : X_k -> X_{k+1}, 0 <= k < trunc, 0 <= j <= k
  std::vector<std::vector<std::vector<int>>> degens;

  // X(phi) : X_n -> X_m for phi : [m] -> [n], n <= trunc, as an index map.
  std::vector<int> apply(const DeltaMap& phi) const {
    if (phi.n > trunc || phi.m > trunc)
      throw std::invalid_argument("apply: map exceeds truncation");
    std::vector<int> cur(sizes[phi.n]);
    for (int e = 0; e < sizes[phi.n]; ++e) cur[e] = e;
    DeltaFactorization fac = delta_factorize(phi);
    int level = phi.n;
    for (int s : fac.cofaces) {
      for (int& e : cur) e = faces[level][s][e];
      --level;
    }
    for (auto it = fac.codegeneracies.rbegin(); it != fac.codegeneracies.rend(); ++it) {
      for (int& e : cur) e = degens[level][*it][e];
      ++level;
    }
    return cur;
  }

  // Functoriality of the action over all composable pairs within the
  // truncation; this subsumes the face/degeneracy identities.
  void validate() const {
    if (static_cast<int>(sizes.size()) != trunc + 1)
      throw ValidationError("sset-shape", "level count does not match truncation");
    for (int k = 1; k <= trunc; ++k) {
      if (static_cast<int>(faces[k].size()) != k + 1)
        throw ValidationError("sset-shape", "face family has wrong arity at level " +
                                                std::to_string(k));
      for (const auto& f : faces[k])
        if (static_cast<int>(f.size()) != sizes[k])
          throw ValidationError("sset-shape", "face table has wrong size");
    }
    for (int k = 0; k < trunc; ++k)
      for (const auto& s : degens[k])
        if (static_cast<int>(s.size()) != sizes[k])
          throw ValidationError("sset-shape", "degeneracy table has wrong size");
    for (int m = 0; m <= trunc; ++m) {
      std::vector<int> idm = apply(delta_identity(m));
      for (int e = 0; e < sizes[m]; ++e)
        if (idm[e] != e) throw ValidationError("sset-invalid", "identity does not act as identity");
    }
    for (int m = 0; m <= trunc; ++m)
      for (int n = 0; n <= trunc; ++n)
        for (const DeltaMap& phi : all_delta_maps(m, n))
          for (int p = 0; p <= trunc; ++p)
            for (const DeltaMap& psi : all_delta_maps(n, p)) {
              charge_cells();
              std::vector<int> lhs = apply(delta_compose(psi, phi));
              std::vector<int> via_psi = apply(psi), via_phi = apply(phi);
              for (int e = 0; e < sizes[p]; ++e)
                if (lhs[e] != via_phi[via_psi[e]])
                  throw ValidationError("sset-invalid", "action is not functorial");
            }
  }

  bool operator==(const TruncSSet& o) const {
    return trunc == o.trunc && sizes == o.sizes && faces == o.faces && degens == o.degens;
  }
};

inline TruncSSet constant_sset(int d, int size = 1) {
  TruncSSet X;
  X.trunc = d;
  X.sizes.assign(d + 1, size);
  X.faces.resize(d + 1);
  X.degens.resize(d + 1);
  std::vector<int> idmap(size);
  for (int e = 0; e < size; ++e) idmap[e] = e;
  for (int k = 1; k <= d; ++k) X.faces[k].assign(k + 1, idmap);
  for (int k = 0; k < d; ++k) X.degens[k].assign(k + 1, idmap);
  return X;
}

// ---------------------------------------------------------------------------
// Nerves

// N(C)_k = length-k composable chains; faces drop/compose, degeneracies
// insert identities.
inline TruncSSet nerve(const FinCatPtr& Cp, int d) {
  BudgetScope scope;
  const FinCat& C = *Cp;
  TruncSSet X;
  X.trunc = d;
  X.sizes.resize(d + 1);
  X.labels.resize(d + 1);
  X.faces.resize(d + 1);
  X.degens.resize(d + 1);
  std::vector<std::vector<Chain>> chains(d + 1);
  std::vector<std::map<std::string, int>> index(d + 1);
  for (int k = 0; k <= d; ++k) {
    chains[k] = enumerate_chains(C, k);
    X.sizes[k] = static_cast<int>(chains[k].size());
    for (int e = 0; e < X.sizes[k]; ++e) {
      X.labels[k].push_back(chains[k][e].key(C));
      index[k][X.labels[k][e]] = e;
    }
  }
  auto face_chain = [&](const Chain& ch, int k, int i) {
    Chain r;
    if (k == 1) {
      r.object = i == 0 ? C.mor(ch.mors[0]).tgt : C.mor(ch.mors[0]).src;
      return r;
    }
    if (i == 0) {
      r.mors.assign(ch.mors.begin() + 1, ch.mors.end());
    } else if (i == k) {
      r.mors.assign(ch.mors.begin(), ch.mors.end() - 1);
    } else {
      r.mors = ch.mors;
      r.mors[i - 1] = C.compose(ch.mors[i], ch.mors[i - 1]);
      r.mors.erase(r.mors.begin() + i);
    }
    r.object = C.mor(r.mors[0]).src;
    return r;
  };
  auto degen_chain = [&](const Chain& ch, int k, int j) {
    Chain r = ch;
    int v = ch.vertex(C, j);
    r.mors.insert(r.mors.begin() + j, C.identity(v));
    if (r.object < 0) r.object = v;
    return r;
  };
  for (int k = 1; k <= d; ++k) {
    X.faces[k].assign(k + 1, std::vector<int>(X.sizes[k]));
    for (int i = 0; i <= k; ++i)
      for (int e = 0; e < X.sizes[k]; ++e)
        X.faces[k][i][e] = index[k - 1].at(face_chain(chains[k][e], k, i).key(C));
  }
  for (int k = 0; k < d; ++k) {
    X.degens[k].assign(k + 1, std::vector<int>(X.sizes[k]));
    for (int j = 0; j <= k; ++j)
      for (int e = 0; e < X.sizes[k]; ++e)
        X.degens[k][j][e] = index[k + 1].at(degen_chain(chains[k][e], k, j).key(C));
  }
  return X;
}

// Functoriality of the nerve: the levelwise map induced by F.
struct SSetMap {
  const TruncSSet* src = nullptr;
  const TruncSSet* dst = nullptr;
  std::vector<std::vector<int>> levels;

  void validate() const {
    for (int k = 1; k <= std::min(src->trunc, dst->trunc); ++k)
      for (int i = 0; i <= k; ++i)
        for (int e = 0; e < src->sizes[k]; ++e)
          if (dst->faces[k][i][levels[k][e]] != levels[k - 1][src->faces[k][i][e]])
            throw ValidationError("ssetmap-invalid", "does not commute with face " +
                                                         std::to_string(i));
    for (int k = 0; k < std::min(src->trunc, dst->trunc); ++k)
      for (int j = 0; j <= k; ++j)
        for (int e = 0; e < src->sizes[k]; ++e)
          if (dst->degens[k][j][levels[k][e]] != levels[k + 1][src->degens[k][j][e]])
            throw ValidationError("ssetmap-invalid", "does not commute with degeneracy " +
                                                         std::to_string(j));
  }
};

inline SSetMap nerve_map(const FinFunctor& F, const TruncSSet& NX, const TruncSSet& NY) {
  const FinCat& C = *F.dom;
  const FinCat& D = *F.cod;
  SSetMap out;
  out.src = &NX;
  out.dst = &NY;
  out.levels.resize(NX.trunc + 1);
  for (int k = 0; k <= NX.trunc; ++k) {
    std::vector<Chain> chains = enumerate_chains(C, k);
    std::map<std::string, int> yindex;
    std::vector<Chain> ychains = enumerate_chains(D, k);
    for (int e = 0; e < static_cast<int>(ychains.size()); ++e)
      yindex[ychains[e].key(D)] = e;
    for (const Chain& ch : chains) {
      Chain im;
      im.object = ch.object >= 0 ? F.omap[ch.object] : -1;
      for (int m : ch.mors) im.mors.push_back(F.mmap[m]);
      out.levels[k].push_back(yindex.at(im.key(D)));
    }
  }
  return out;
}

// Nerve of the codiscrete groupoid on i+1 objects: level k is all
// (k+1)-tuples in {0..i}.
inline TruncSSet nerve_codiscrete(int i, int d) {
  BudgetScope scope;
  TruncSSet X;
  X.trunc = d;
  X.sizes.resize(d + 1);
  X.labels.resize(d + 1);
  X.faces.resize(d + 1);
  X.degens.resize(d + 1);
  // tuples in lexicographic order; index arithmetic in base i+1
  const int base = i + 1;
  auto tuple_size = [&](int k) {
    long long s = 1;
    for (int t = 0; t <= k; ++t) s *= base;
    charge_cells(s);
    return static_cast<int>(s);
  };
  auto digit = [&](int e, int pos, int k) {
    for (int t = k; t > pos; --t) e /= base;
    return e % base;
  };
  for (int k = 0; k <= d; ++k) {
    X.sizes[k] = tuple_size(k);
    for (int e = 0; e < X.sizes[k]; ++e) {
      std::string lab = "(";
      for (int t = 0; t <= k; ++t) lab += (t ? "," : "") + std::to_string(digit(e, t, k));
      X.labels[k].push_back(lab + ")");
    }
  }
  for (int k = 1; k <= d; ++k) {
    X.faces[k].assign(k + 1, std::vector<int>(X.sizes[k]));
    for (int i2 = 0; i2 <= k; ++i2)
      for (int e = 0; e < X.sizes[k]; ++e) {
        int out = 0;
        for (int t = 0; t <= k; ++t) {
          if (t == i2) continue;
          out = out * base + digit(e, t, k);
        }
        X.faces[k][i2][e] = out;
      }
  }
  for (int k = 0; k < d; ++k) {
    X.degens[k].assign(k + 1, std::vector<int>(X.sizes[k]));
    for (int j = 0; j <= k; ++j)
      for (int e = 0; e < X.sizes[k]; ++e) {
        int out = 0;
        for (int t = 0; t <= k; ++t) {
          out = out * base + digit(e, t, k);
          if (t == j) out = out * base + digit(e, t, k);
        }
        X.degens[k][j][e] = out;
      }
  }
  return X;
}

// ---------------------------------------------------------------------------
// Segal / completeness / hom fibers

struct SegalLevel {
  int k = 0;
  bool ok = false;
  std::string witness;
};

struct SegalReport {
  bool pass = true;
  std::vector<SegalLevel> levels;
};

// Strict Segal condition: the spine map X_k -> X_1 x_{X_0} ... x_{X_0} X_1
// is a bijection for 2 <= k <= trunc.
inline SegalReport segal_check_sset(const TruncSSet& X) {
  if (X.trunc < 2) throw std::invalid_argument("segal_check_sset: needs truncation >= 2");
  SegalReport rep;
  // edge endpoints: source = d1, target = d0
  const auto& s = X.faces[1][1];
  const auto& t = X.faces[1][0];
  for (int k = 2; k <= X.trunc; ++k) {
    SegalLevel lv{k, true, ""};
    std::vector<std::vector<int>> spine(k);
    for (int j = 0; j < k; ++j) {
      DeltaMap seg{1, k, {j, j + 1}};
      spine[j] = X.apply(seg);
    }
    std::set<std::vector<int>> image;
    bool injective = true;
    for (int e = 0; e < X.sizes[k]; ++e) {
      std::vector<int> tup(k);
      for (int j = 0; j < k; ++j) tup[j] = spine[j][e];
      if (!image.insert(tup).second) injective = false;
    }
    // count compatible tuples by dynamic programming over edges
    std::vector<long long> cur(X.sizes[1], 1);
    for (int step = 1; step < k; ++step) {
      std::vector<long long> next(X.sizes[1], 0);
      for (int e = 0; e < X.sizes[1]; ++e)
        for (int e2 = 0; e2 < X.sizes[1]; ++e2)
          if (t[e] == s[e2]) next[e2] += cur[e];
      cur = std::move(next);
    }
    long long compatible = 0;
    for (long long v : cur) compatible += v;
    if (!injective) {
      lv.ok = false;
      lv.witness = "spine map not injective at k=" + std::to_string(k);
    } else if (compatible != static_cast<long long>(image.size())) {
      lv.ok = false;
      lv.witness = "spine map not surjective at k=" + std::to_string(k) + ": |X_k|=" +
                   std::to_string(X.sizes[k]) + ", compatible tuples=" +
                   std::to_string(compatible);
    }
    rep.pass = rep.pass && lv.ok;
    rep.levels.push_back(std::move(lv));
  }
  return rep;
}

// The fiber of (d1, d0) : X_1 -> X_0 x X_0 over (x, y).
inline std::vector<int> hom_fiber(const TruncSSet& X, int x, int y) {
  if (X.trunc < 1) throw std::invalid_argument("hom_fiber: needs truncation >= 1");
  if (x < 0 || x >= X.sizes[0] || y < 0 || y >= X.sizes[0])
    throw std::invalid_argument("hom_fiber: vertex out of range");
  std::vector<int> out;
  for (int e = 0; e < X.sizes[1]; ++e)
    if (X.faces[1][1][e] == x && X.faces[1][0][e] == y) out.push_back(e);
  return out;
}

struct CompletenessReport {
  bool complete = false;
  std::string witness;  // a non-identity isomorphism when not complete
};

// The nerve of C satisfies the completeness condition iff C is gaunt.
inline CompletenessReport completeness_check_nerve(const FinCatPtr& C) {
  for (int m = 0; m < C->num_morphisms(); ++m)
    if (C->is_invertible(m) && !C->is_identity(m)) return {false, C->mor(m).id};
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Simplicial homotopies in May form

struct SimplicialHomotopy {
  const TruncSSet* X = nullptr;
  const TruncSSet* Z = nullptr;
  std::vector<std::vector<int>> f, g;        // maps X -> Z, levels 0..d
  std::vector<std::vector<std::vector<int>>> h;  // h[n][j] : X_n -> Z_{n+1}, j <= n <= d-1
};

struct HomotopyReport {
  bool pass = true;
  long long instances = 0;
  std::string identity_name;
  int n = -1, i = -1, j = -1, simplex = -1;
};

// Checks the boundary identities, the three-case face identity and the
// two-case degeneracy identity on every simplex within truncation; reports
// the first violation.
inline HomotopyReport check_homotopy(const SimplicialHomotopy& H) {
  const TruncSSet& X = *H.X;
  const TruncSSet& Z = *H.Z;
  const int d = X.trunc;
  if (Z.trunc < d) throw ValidationError("homotopy-shape", "target truncated below source");
  if (static_cast<int>(H.h.size()) != d)
    throw ValidationError("homotopy-shape", "family must have levels 0..d-1");
  for (int n = 0; n < d; ++n) {
    if (static_cast<int>(H.h[n].size()) != n + 1)
      throw ValidationError("homotopy-shape", "family at level " + std::to_string(n) +
                                                  " must have n+1 members");
    for (const auto& hn : H.h[n])
      if (static_cast<int>(hn.size()) != X.sizes[n])
        throw ValidationError("homotopy-shape", "family member has wrong domain size");
  }
  HomotopyReport rep;
  auto fail = [&](const std::string& name, int n, int i, int j, int e) {
    rep.pass = false;
    rep.identity_name = name;
    rep.n = n;
    rep.i = i;
    rep.j = j;
    rep.simplex = e;
  };
  for (int n = 0; n < d && rep.pass; ++n) {
    for (int e = 0; e < X.sizes[n] && rep.pass; ++e) {
      ++rep.instances;
      if (Z.faces[n + 1][0][H.h[n][0][e]] != H.f[n][e]) {
        fail("d0-boundary", n, 0, 0, e);
        break;
      }
      ++rep.instances;
      if (Z.faces[n + 1][n + 1][H.h[n][n][e]] != H.g[n][e]) {
        fail("dlast-boundary", n, n + 1, n, e);
        break;
      }
    }
    for (int j = 0; j <= n && rep.pass; ++j)
      for (int i = 0; i <= n + 1 && rep.pass; ++i) {
        for (int e = 0; e < X.sizes[n] && rep.pass; ++e) {
          int lhs = Z.faces[n + 1][i][H.h[n][j][e]];
          if (i < j) {
            ++rep.instances;
            if (lhs != H.h[n - 1][j - 1][X.faces[n][i][e]]) fail("face-lt", n, i, j, e);
          } else if (i == j && i != 0) {
            ++rep.instances;
            if (lhs != Z.faces[n + 1][i][H.h[n][i - 1][e]]) fail("face-eq", n, i, j, e);
          } else if (i > j + 1) {
            ++rep.instances;
            if (lhs != H.h[n - 1][j][X.faces[n][i - 1][e]]) fail("face-gt", n, i, j, e);
          }
        }
      }
    if (n + 1 < d) {
      for (int j = 0; j <= n && rep.pass; ++j)
        for (int i = 0; i <= n + 1 && rep.pass; ++i)
          for (int e = 0; e < X.sizes[n] && rep.pass; ++e) {
            int lhs = Z.degens[n + 1][i][H.h[n][j][e]];
            ++rep.instances;
            if (i <= j) {
              if (lhs != H.h[n + 1][j + 1][X.degens[n][i][e]]) fail("degen-le", n, i, j, e);
            } else {
              if (i - 1 <= n) {
                if (lhs != H.h[n + 1][j][X.degens[n][i - 1][e]]) fail("degen-gt", n, i, j, e);
              } else {
                --rep.instances;  // sigma_{i-1} undefined at this level
              }
            }
          }
    }
  }
  return rep;
}

// The constant homotopy h_{j,n} = sigma_j ∘ f_n from f to f.
inline SimplicialHomotopy constant_homotopy(const TruncSSet& X, const TruncSSet& Z,
                                            const std::vector<std::vector<int>>& f) {
  SimplicialHomotopy H;
  H.X = &X;
  H.Z = &Z;
  H.f = f;
  H.g = f;
  H.h.resize(X.trunc);
  for (int n = 0; n < X.trunc; ++n) {
    H.h[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      H.h[n][j].resize(X.sizes[n]);
      for (int e = 0; e < X.sizes[n]; ++e) H.h[n][j][e] = Z.degens[n][j][f[n][e]];
    }
  }
  return H;
}

}  // namespace rnk
