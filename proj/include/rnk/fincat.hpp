#pragma once

// Finite categories with total composition tables, functors and natural
// transformations between them, and the decidable oracles built on top:
// cores, gauntness, equivalence checks, and exhaustive functor / natural
// transformation enumeration.
//
// Objects and morphisms are identified by strings and stored sorted, so
// every enumeration below is deterministic.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "budget.hpp"

namespace rnk {

struct ValidationError : std::runtime_error {
  std::string code;   // stable machine-readable code, e.g. "missing-identity"
  std::string where;  // location hint, e.g. a morphism id
  ValidationError(std::string c, const std::string& what, std::string w = {})
      : std::runtime_error(c + ": " + what + (w.empty() ? "" : " [at " + w + "]")),
        code(std::move(c)),
        where(std::move(w)) {}
};

class FinCat;
using FinCatPtr = std::shared_ptr<const FinCat>;

class FinCat {
 public:
  struct Mor {
    std::string id;
    int src = -1;
    int tgt = -1;
  };

  struct NamedMor {
    std::string id, src, tgt;
  };

  // Builds and fully validates a category from named parts. `composites`
  // are [g, f, g∘f] triples and must cover every composable pair,
  // including composites with identities.
  static FinCatPtr make(std::vector<std::string> object_names,
                        std::vector<NamedMor> named_mors,
                        const std::vector<std::array<std::string, 3>>& composites) {
    auto cat = std::make_shared<FinCat>();
    std::sort(object_names.begin(), object_names.end());
    for (size_t i = 0; i + 1 < object_names.size(); ++i)
      if (object_names[i] == object_names[i + 1])
        throw ValidationError("duplicate-id", "duplicate object", object_names[i]);
    cat->objects_ = std::move(object_names);
    std::sort(named_mors.begin(), named_mors.end(),
              [](const NamedMor& a, const NamedMor& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < named_mors.size(); ++i)
      if (named_mors[i].id == named_mors[i + 1].id)
        throw ValidationError("duplicate-id", "duplicate morphism", named_mors[i].id);
    for (const auto& nm : named_mors) {
      Mor m;
      m.id = nm.id;
      m.src = cat->object_index(nm.src);
      m.tgt = cat->object_index(nm.tgt);
      if (m.src < 0) throw ValidationError("dangling-id", "unknown source object " + nm.src, nm.id);
      if (m.tgt < 0) throw ValidationError("dangling-id", "unknown target object " + nm.tgt, nm.id);
      cat->mors_.push_back(std::move(m));
    }
    const int M = cat->num_morphisms();
    cat->comp_.assign(M, std::vector<int>(M, -1));
    for (const auto& t : composites) {
      int g = cat->mor_index(t[0]), f = cat->mor_index(t[1]), gf = cat->mor_index(t[2]);
      if (g < 0 || f < 0 || gf < 0)
        throw ValidationError("dangling-id", "unknown morphism in composition row",
                              t[0] + "," + t[1] + "," + t[2]);
      if (cat->mors_[f].tgt != cat->mors_[g].src)
        throw ValidationError("composition-type-mismatch",
                              "pair is not composable", t[0] + "∘" + t[1]);
      if (cat->comp_[g][f] != -1 && cat->comp_[g][f] != gf)
        throw ValidationError("composition-type-mismatch", "conflicting composite",
                              t[0] + "∘" + t[1]);
      cat->comp_[g][f] = gf;
    }
    cat->finish_validation();
    return cat;
  }

  // Builds from index-based tables (used by internal constructions);
  // runs the same validation.
  static FinCatPtr from_tables(std::vector<std::string> object_names,
                               std::vector<Mor> mors,
                               std::vector<std::vector<int>> comp) {
    auto cat = std::make_shared<FinCat>();
    cat->objects_ = std::move(object_names);
    cat->mors_ = std::move(mors);
    cat->comp_ = std::move(comp);
    cat->finish_validation();
    return cat;
  }

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(mors_.size()); }
  const std::string& object_name(int x) const { return objects_[x]; }
  const Mor& mor(int m) const { return mors_[m]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return mors_; }

  int object_index(std::string_view name) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
    if (it == objects_.end() || *it != name) return -1;
    return static_cast<int>(it - objects_.begin());
  }

  int mor_index(std::string_view id) const {
    auto it = std::lower_bound(mors_.begin(), mors_.end(), id,
                               [](const Mor& m, std::string_view s) { return m.id < s; });
    if (it == mors_.end() || it->id != id) return -1;
    return static_cast<int>(it - mors_.begin());
  }

  int identity(int x) const { return identity_[x]; }
  bool is_identity(int m) const { return identity_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }

  // g∘f, or -1 when not composable.
  int compose(int g, int f) const {
    if (mors_[f].tgt != mors_[g].src) return -1;
    return comp_[g][f];
  }

  const std::vector<int>& hom(int x, int y) const { return hom_[x * num_objects() + y]; }

  int inverse(int m) const { return inverse_[m]; }
  bool is_invertible(int m) const { return inverse_[m] >= 0; }

  bool objects_isomorphic(int x, int y) const {
    if (x == y) return true;
    for (int m : hom(x, y))
      if (is_invertible(m)) return true;
    return false;
  }

  // Composes a list of morphisms given in diagram order (first applied
  // first); the list must be nonempty and composable.
  int compose_path(const std::vector<int>& path) const {
    int acc = path.front();
    for (size_t i = 1; i < path.size(); ++i) {
      acc = compose(path[i], acc);
      if (acc < 0) throw std::logic_error("compose_path: not composable");
    }
    return acc;
  }

 private:
  void finish_validation() {
    const int N = num_objects(), M = num_morphisms();
    for (const auto& m : mors_)
      if (m.src < 0 || m.src >= N || m.tgt < 0 || m.tgt >= N)
        throw ValidationError("dangling-id", "morphism endpoint out of range", m.id);
    if (static_cast<int>(comp_.size()) != M)
      throw ValidationError("schema-violation", "composition table has wrong shape");
    for (int g = 0; g < M; ++g) {
      if (static_cast<int>(comp_[g].size()) != M)
        throw ValidationError("schema-violation", "composition table has wrong shape");
      for (int f = 0; f < M; ++f) {
        bool composable = mors_[f].tgt == mors_[g].src;
        int gf = comp_[g][f];
        if (!composable) {
          if (gf != -1)
            throw ValidationError("composition-type-mismatch", "entry for non-composable pair",
                                  mors_[g].id + "∘" + mors_[f].id);
          continue;
        }
        if (gf == -1)
          throw ValidationError("composition-not-total", "missing composite",
                                mors_[g].id + "∘" + mors_[f].id);
        if (mors_[gf].src != mors_[f].src || mors_[gf].tgt != mors_[g].tgt)
          throw ValidationError("composition-type-mismatch", "composite has wrong endpoints",
                                mors_[g].id + "∘" + mors_[f].id);
      }
    }
    // identities: a two-sided unit per object, deduced from the table
    identity_.assign(N, -1);
    for (int m = 0; m < M; ++m) {
      if (mors_[m].src != mors_[m].tgt) continue;
      int x = mors_[m].src;
      bool unit = true;
      for (int f = 0; f < M && unit; ++f) {
        if (mors_[f].tgt == x && comp_[m][f] != f) unit = false;
        if (mors_[f].src == x && comp_[f][m] != f) unit = false;
      }
      if (unit) identity_[x] = m;
    }
    for (int x = 0; x < N; ++x)
      if (identity_[x] < 0)
        throw ValidationError("missing-identity", "object has no identity morphism", objects_[x]);
    // associativity on all composable triples
    for (int f = 0; f < M; ++f)
      for (int g = 0; g < M; ++g) {
        if (mors_[f].tgt != mors_[g].src) continue;
        for (int h = 0; h < M; ++h) {
          if (mors_[g].tgt != mors_[h].src) continue;
          charge_cells();
          if (comp_[h][comp_[g][f]] != comp_[comp_[h][g]][f])
            throw ValidationError("non-associative", "associativity fails",
                                  mors_[h].id + "∘" + mors_[g].id + "∘" + mors_[f].id);
        }
      }
    hom_.assign(N * N, {});
    for (int m = 0; m < M; ++m) hom_[mors_[m].src * N + mors_[m].tgt].push_back(m);
    inverse_.assign(M, -1);
    for (int m = 0; m < M; ++m) {
      for (int w : hom_[mors_[m].tgt * N + mors_[m].src]) {
        if (comp_[w][m] == identity_[mors_[m].src] && comp_[m][w] == identity_[mors_[m].tgt]) {
          inverse_[m] = w;
          break;
        }
      }
    }
  }

  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Basic oracles

// Wide subcategory of invertible morphisms (the maximal subgroupoid).
inline FinCatPtr core(const FinCatPtr& C) {
  std::vector<FinCat::Mor> mors;
  std::vector<int> keep;
  for (int m = 0; m < C->num_morphisms(); ++m)
    if (C->is_invertible(m)) keep.push_back(m);
  std::vector<int> newidx(C->num_morphisms(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    newidx[keep[i]] = static_cast<int>(i);
    mors.push_back(C->mor(keep[i]));
  }
  std::vector<std::vector<int>> comp(keep.size(), std::vector<int>(keep.size(), -1));
  for (size_t g = 0; g < keep.size(); ++g)
    for (size_t f = 0; f < keep.size(); ++f) {
      int gf = C->compose(keep[g], keep[f]);
      if (gf >= 0) comp[g][f] = newidx[gf];  // composites of isos are isos
    }
  return FinCat::from_tables(C->objects(), std::move(mors), std::move(comp));
}

inline bool is_gaunt(const FinCatPtr& C) {
  for (int m = 0; m < C->num_morphisms(); ++m)
    if (C->is_invertible(m) && !C->is_identity(m)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Functors

struct FinFunctor {
  FinCatPtr dom, cod;
  std::vector<int> omap;  // object index map
  std::vector<int> mmap;  // morphism index map

  void validate() const {
    for (int m = 0; m < dom->num_morphisms(); ++m) {
      const auto& mm = dom->mor(m);
      const auto& im = cod->mor(mmap[m]);
      if (im.src != omap[mm.src] || im.tgt != omap[mm.tgt])
        throw ValidationError("functor-invalid", "image has wrong endpoints", mm.id);
    }
    for (int x = 0; x < dom->num_objects(); ++x)
      if (mmap[dom->identity(x)] != cod->identity(omap[x]))
        throw ValidationError("functor-invalid", "identity not preserved", dom->object_name(x));
    for (int g = 0; g < dom->num_morphisms(); ++g)
      for (int f = 0; f < dom->num_morphisms(); ++f) {
        int gf = dom->compose(g, f);
        if (gf < 0) continue;
        if (cod->compose(mmap[g], mmap[f]) != mmap[gf])
          throw ValidationError("functor-invalid", "composition not preserved",
                                dom->mor(g).id + "∘" + dom->mor(f).id);
      }
  }

  bool operator==(const FinFunctor& o) const { return omap == o.omap && mmap == o.mmap; }
};

inline FinFunctor identity_functor(const FinCatPtr& C) {
  FinFunctor F;
  F.dom = F.cod = C;
  F.omap.resize(C->num_objects());
  F.mmap.resize(C->num_morphisms());
  for (int x = 0; x < C->num_objects(); ++x) F.omap[x] = x;
  for (int m = 0; m < C->num_morphisms(); ++m) F.mmap[m] = m;
  return F;
}

inline FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  FinFunctor R;
  R.dom = F.dom;
  R.cod = G.cod;
  R.omap.reserve(F.omap.size());
  R.mmap.reserve(F.mmap.size());
  for (int x : F.omap) R.omap.push_back(G.omap[x]);
  for (int m : F.mmap) R.mmap.push_back(G.mmap[m]);
  return R;
}

// A generating set for C: the lexicographically greedy ones, together with
// one recorded factorization g∘f for every non-generator non-identity
// morphism. Used to cut the search space of functor enumeration.
struct GeneratingSet {
  std::vector<int> generators;
  // fact[m] = {g, f} with m = g∘f, or {-1,-1} for identities/generators
  std::vector<std::array<int, 2>> fact;
};

inline GeneratingSet generating_morphisms(const FinCat& C) {
  const int M = C.num_morphisms();
  GeneratingSet gs;
  gs.fact.assign(M, {-1, -1});
  std::vector<char> known(M, 0);
  for (int m = 0; m < M; ++m)
    if (C.is_identity(m)) known[m] = 1;
  auto closure = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int g = 0; g < M; ++g) {
        if (!known[g]) continue;
        for (int f = 0; f < M; ++f) {
          if (!known[f]) continue;
          int gf = C.compose(g, f);
          if (gf >= 0 && !known[gf]) {
            known[gf] = 1;
            if (!C.is_identity(g) && !C.is_identity(f)) gs.fact[gf] = {g, f};
            changed = true;
          }
        }
      }
    }
  };
  closure();
  for (int m = 0; m < M; ++m) {
    if (known[m]) continue;
    gs.generators.push_back(m);
    known[m] = 1;
    closure();
  }
  return gs;
}

// Enumerates all functors D -> C in lexicographic order of their object and
// generator images. `mor_ok(d, c)` can veto candidate images of specific
// domain morphisms (used for marking constraints); pass nullptr for no
// filter.
inline std::vector<FinFunctor> enumerate_functors(
    const FinCatPtr& D, const FinCatPtr& C,
    const std::function<bool(int, int)>& mor_ok = nullptr) {
  BudgetScope scope;
  const int ND = D->num_objects(), MD = D->num_morphisms();
  GeneratingSet gs = generating_morphisms(*D);
  // generators become assignable once both endpoints are assigned
  std::vector<std::vector<int>> gens_at_level(ND);
  for (int g : gs.generators)
    gens_at_level[std::max(D->mor(g).src, D->mor(g).tgt)].push_back(g);

  std::vector<int> omap(ND, -1), mmap(MD, -1);
  std::vector<FinFunctor> out;

  // derive images of composite morphisms from the recorded factorizations;
  // returns false on a conflict with the composition table
  auto check_complete = [&]() -> bool {
    for (int m = 0; m < MD; ++m) {
      if (mmap[m] >= 0) continue;
      auto [g, f] = gs.fact[m];
      if (g < 0) return false;  // should not happen: generators all assigned
      int im = C->compose(mmap[g], mmap[f]);
      if (im < 0) return false;
      mmap[m] = im;
    }
    for (int g = 0; g < MD; ++g)
      for (int f = 0; f < MD; ++f) {
        int gf = D->compose(g, f);
        if (gf < 0) continue;
        charge_cells();
        if (C->compose(mmap[g], mmap[f]) != mmap[gf]) return false;
      }
    if (mor_ok)
      for (int m = 0; m < MD; ++m)
        if (!mor_ok(m, mmap[m])) return false;
    return true;
  };

  // objects are assigned at entry to their level, generators once the
  // level that completes their endpoints is reached
  std::function<void(int)> run = [&](int level) {
    if (level == ND) {
      std::vector<int> save = mmap;
      if (check_complete()) {
        FinFunctor F;
        F.dom = D;
        F.cod = C;
        F.omap = omap;
        F.mmap = mmap;
        out.push_back(std::move(F));
      }
      mmap = std::move(save);
      return;
    }
    std::function<void(size_t)> assign_gens = [&](size_t gpos) {
      charge_cells();
      if (gpos == gens_at_level[level].size()) {
        run(level + 1);
        return;
      }
      int g = gens_at_level[level][gpos];
      int sx = omap[D->mor(g).src], tx = omap[D->mor(g).tgt];
      for (int cand : C->hom(sx, tx)) {
        if (mor_ok && !mor_ok(g, cand)) continue;
        mmap[g] = cand;
        assign_gens(gpos + 1);
        mmap[g] = -1;
      }
    };
    for (int y = 0; y < C->num_objects(); ++y) {
      bool ok = true;
      for (int x = 0; x < level && ok; ++x) {
        if (!D->hom(x, level).empty() && C->hom(omap[x], y).empty()) ok = false;
        if (!D->hom(level, x).empty() && C->hom(y, omap[x]).empty()) ok = false;
      }
      if (!D->hom(level, level).empty() && C->hom(y, y).empty()) ok = false;
      if (!ok) continue;
      omap[level] = y;
      mmap[D->identity(level)] = C->identity(y);
      assign_gens(0);
      mmap[D->identity(level)] = -1;
      omap[level] = -1;
    }
  };
  run(0);
  return out;
}

// ---------------------------------------------------------------------------
// Natural transformations

struct NatTrans {
  FinFunctor source, target;      // parallel functors
  std::vector<int> components;    // per domain object, a codomain morphism

  void validate() const {
    const auto& D = *source.dom;
    const auto& C = *source.cod;
    for (int x = 0; x < D.num_objects(); ++x) {
      const auto& c = C.mor(components[x]);
      if (c.src != source.omap[x] || c.tgt != target.omap[x])
        throw ValidationError("nattrans-invalid", "component has wrong endpoints",
                              D.object_name(x));
    }
    for (int m = 0; m < D.num_morphisms(); ++m) {
      const auto& mm = D.mor(m);
      if (C.compose(components[mm.tgt], source.mmap[m]) !=
          C.compose(target.mmap[m], components[mm.src]))
        throw ValidationError("nattrans-invalid", "naturality square fails", mm.id);
    }
  }
};

// All natural transformations F => G, components filtered by `comp_ok`
// (e.g. restriction to marked morphisms). Deterministic order.
inline std::vector<NatTrans> enumerate_nat_trans(
    const FinFunctor& F, const FinFunctor& G,
    const std::function<bool(int)>& comp_ok = nullptr) {
  BudgetScope scope;
  const auto& D = *F.dom;
  const auto& C = *F.cod;
  const int ND = D.num_objects();
  std::vector<int> comps(ND, -1);
  std::vector<NatTrans> out;
  std::function<void(int)> dfs = [&](int x) {
    charge_cells();
    if (x == ND) {
      NatTrans t{F, G, comps};
      out.push_back(std::move(t));
      return;
    }
    for (int c : C.hom(F.omap[x], G.omap[x])) {
      if (comp_ok && !comp_ok(c)) continue;
      bool ok = true;
      for (int m = 0; m < D.num_morphisms() && ok; ++m) {
        const auto& mm = D.mor(m);
        if (mm.src == x && mm.tgt < x) {
          if (C.compose(comps[mm.tgt], F.mmap[m]) != C.compose(G.mmap[m], c)) ok = false;
        } else if (mm.tgt == x && mm.src < x) {
          if (C.compose(c, F.mmap[m]) != C.compose(G.mmap[m], comps[mm.src])) ok = false;
        } else if (mm.src == x && mm.tgt == x) {
          if (C.compose(c, F.mmap[m]) != C.compose(G.mmap[m], c)) ok = false;
        }
      }
      if (!ok) continue;
      comps[x] = c;
      dfs(x + 1);
      comps[x] = -1;
    }
  };
  dfs(0);
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence oracle

struct EquivalenceReport {
  bool ok = false;
  std::string witness;  // empty when ok
};

// Fully-faithful + essentially-surjective, by exhaustive scan.
inline EquivalenceReport is_equivalence(const FinFunctor& F) {
  const auto& D = *F.dom;
  const auto& C = *F.cod;
  for (int x = 0; x < D.num_objects(); ++x)
    for (int y = 0; y < D.num_objects(); ++y) {
      const auto& dh = D.hom(x, y);
      const auto& ch = C.hom(F.omap[x], F.omap[y]);
      std::vector<char> hit(ch.size(), 0);
      for (int m : dh) {
        auto it = std::find(ch.begin(), ch.end(), F.mmap[m]);
        size_t k = it - ch.begin();
        if (hit[k]) {
          return {false, "not faithful on hom(" + D.object_name(x) + "," + D.object_name(y) +
                             "): " + C.mor(F.mmap[m]).id + " hit twice"};
        }
        hit[k] = 1;
      }
      for (size_t k = 0; k < ch.size(); ++k)
        if (!hit[k])
          return {false, "not full on hom(" + D.object_name(x) + "," + D.object_name(y) +
                             "): " + C.mor(ch[k]).id + " not hit"};
    }
  for (int c = 0; c < C.num_objects(); ++c) {
    bool found = false;
    for (int x = 0; x < D.num_objects() && !found; ++x)
      if (C.objects_isomorphic(F.omap[x], c)) found = true;
    if (!found)
      return {false, "not essentially surjective: object " + C.object_name(c) +
                         " not isomorphic to any image"};
  }
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Structural isomorphism / equivalence of categories (for cross-oracle
// comparisons of localization routes; identifiers are ignored).

inline bool fincat_isomorphic(const FinCatPtr& A, const FinCatPtr& B) {
  BudgetScope scope;
  const int N = A->num_objects();
  if (N != B->num_objects() || A->num_morphisms() != B->num_morphisms()) return false;
  std::vector<int> omap(N, -1);
  std::vector<char> used(N, 0);

  std::function<bool()> match_mors = [&]() -> bool {
    // bijections per hom set, then a global composition check
    const int M = A->num_morphisms();
    std::vector<int> mmap(M, -1);
    std::function<bool(int)> place = [&](int m) -> bool {
      if (m == M) {
        for (int g = 0; g < M; ++g)
          for (int f = 0; f < M; ++f) {
            int gf = A->compose(g, f);
            if (gf < 0) continue;
            if (B->compose(mmap[g], mmap[f]) != mmap[gf]) return false;
          }
        return true;
      }
      charge_cells();
      const auto& ma = A->mor(m);
      for (int c : B->hom(omap[ma.src], omap[ma.tgt])) {
        if (std::find(mmap.begin(), mmap.begin() + m, c) != mmap.begin() + m) continue;
        if (A->is_identity(m) != B->is_identity(c)) continue;
        if (A->is_invertible(m) != B->is_invertible(c)) continue;
        mmap[m] = c;
        if (place(m + 1)) return true;
        mmap[m] = -1;
      }
      return false;
    };
    return place(0);
  };

  std::function<bool(int)> place_obj = [&](int x) -> bool {
    if (x == N) return match_mors();
    charge_cells();
    for (int y = 0; y < N; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        if (A->hom(z, x).size() != B->hom(omap[z], y).size()) ok = false;
        if (A->hom(x, z).size() != B->hom(y, omap[z]).size()) ok = false;
      }
      if (A->hom(x, x).size() != B->hom(y, y).size()) ok = false;
      if (!ok) continue;
      omap[x] = y;
      used[y] = 1;
      if (place_obj(x + 1)) return true;
      used[y] = 0;
      omap[x] = -1;
    }
    return false;
  };
  return place_obj(0);
}

// Full subcategory on one object per isomorphism class (lex-least picks).
inline FinCatPtr skeleton(const FinCatPtr& C) {
  const int N = C->num_objects();
  std::vector<int> keep;
  std::vector<char> dropped(N, 0);
  for (int x = 0; x < N; ++x) {
    if (dropped[x]) continue;
    keep.push_back(x);
    for (int y = x + 1; y < N; ++y)
      if (!dropped[y] && C->objects_isomorphic(x, y)) dropped[y] = 1;
  }
  std::vector<char> okeep(N, 0);
  for (int x : keep) okeep[x] = 1;
  std::vector<std::string> names;
  for (int x : keep) names.push_back(C->object_name(x));
  std::vector<int> mkeep, newm(C->num_morphisms(), -1);
  std::vector<FinCat::Mor> mors;
  std::vector<int> oidx(N, -1);
  for (size_t i = 0; i < keep.size(); ++i) oidx[keep[i]] = static_cast<int>(i);
  for (int m = 0; m < C->num_morphisms(); ++m) {
    const auto& mm = C->mor(m);
    if (okeep[mm.src] && okeep[mm.tgt]) {
      newm[m] = static_cast<int>(mkeep.size());
      mkeep.push_back(m);
      mors.push_back({mm.id, oidx[mm.src], oidx[mm.tgt]});
    }
  }
  std::vector<std::vector<int>> comp(mkeep.size(), std::vector<int>(mkeep.size(), -1));
  for (size_t g = 0; g < mkeep.size(); ++g)
    for (size_t f = 0; f < mkeep.size(); ++f) {
      int gf = C->compose(mkeep[g], mkeep[f]);
      if (gf >= 0) comp[g][f] = newm[gf];
    }
  return FinCat::from_tables(std::move(names), std::move(mors), std::move(comp));
}

inline bool fincat_equivalent(const FinCatPtr& A, const FinCatPtr& B) {
  return fincat_isomorphic(skeleton(A), skeleton(B));
}

}  // namespace rnk
