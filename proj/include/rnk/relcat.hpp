#pragma once

// Finite relative categories: a FinCat together with a wide subcategory of
// weak equivalences containing every invertible morphism. Provides the
// min/max structures, [n]_W, products, marking creation along a functor,
// relative hom sets, and the relative functor categories Fun([n],C)^W.

#include <algorithm>
#include <string>
#include <vector>

#include "cats.hpp"
#include "fincat.hpp"

namespace rnk {

class RelCat {
 public:
  // Validates on construction: every id must resolve, the marking must be
  // closed under composition and contain every invertible morphism.
  // Missing invertibles are an error rather than silently added; see
  // saturate_markings for the explicit closure.
  static RelCat make(FinCatPtr base, const std::vector<std::string>& weq_ids) {
    std::vector<char> mask(base->num_morphisms(), 0);
    for (const auto& id : weq_ids) {
      int m = base->mor_index(id);
      if (m < 0) throw ValidationError("dangling-id", "unknown weq morphism", id);
      mask[m] = 1;
    }
    return from_mask(std::move(base), std::move(mask));
  }

  static RelCat from_mask(FinCatPtr base, std::vector<char> mask) {
    RelCat r;
    for (int m = 0; m < base->num_morphisms(); ++m) {
      if (base->is_invertible(m) && !mask[m])
        throw ValidationError("weq-not-saturated",
                              "weq must contain every invertible morphism",
                              base->mor(m).id);
    }
    for (int g = 0; g < base->num_morphisms(); ++g)
      for (int f = 0; f < base->num_morphisms(); ++f) {
        if (!mask[g] || !mask[f]) continue;
        int gf = base->compose(g, f);
        if (gf >= 0 && !mask[gf])
          throw ValidationError("weq-not-closed", "weq not closed under composition",
                                base->mor(g).id + "∘" + base->mor(f).id);
      }
    r.base_ = std::move(base);
    r.mask_ = std::move(mask);
    for (int m = 0; m < r.base_->num_morphisms(); ++m)
      if (r.mask_[m]) r.weq_.push_back(m);
    return r;
  }

  const FinCatPtr& base() const { return base_; }
  bool marked(int m) const { return mask_[m] != 0; }
  const std::vector<int>& weq() const { return weq_; }
  const std::vector<char>& mask() const { return mask_; }

  std::vector<std::string> weq_ids() const {
    std::vector<std::string> out;
    for (int m : weq_) out.push_back(base_->mor(m).id);
    return out;
  }

 private:
  FinCatPtr base_;
  std::vector<char> mask_;
  std::vector<int> weq_;
};

// Closes a candidate marking under invertibles and composition; the
// explicit alternative to a silently-repairing constructor.
inline RelCat saturate_markings(const FinCatPtr& base, std::vector<char> mask) {
  for (int m = 0; m < base->num_morphisms(); ++m)
    if (base->is_invertible(m)) mask[m] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g = 0; g < base->num_morphisms(); ++g)
      for (int f = 0; f < base->num_morphisms(); ++f) {
        if (!mask[g] || !mask[f]) continue;
        int gf = base->compose(g, f);
        if (gf >= 0 && !mask[gf]) {
          mask[gf] = 1;
          changed = true;
        }
      }
  }
  return RelCat::from_mask(base, std::move(mask));
}

// Minimal structure: exactly the invertible morphisms are marked.
inline RelCat min_rel(const FinCatPtr& C) {
  std::vector<char> mask(C->num_morphisms(), 0);
  for (int m = 0; m < C->num_morphisms(); ++m)
    if (C->is_invertible(m)) mask[m] = 1;
  return RelCat::from_mask(C, std::move(mask));
}

// Maximal structure: everything is marked.
inline RelCat max_rel(const FinCatPtr& C) {
  return RelCat::from_mask(C, std::vector<char>(C->num_morphisms(), 1));
}

// [n]_W: the poset [n] with every morphism marked.
inline RelCat walking_marked(int n) { return max_rel(poset_category(n)); }

// Marks the morphisms sent to invertibles by F. The result always has the
// two-out-of-three property, which is asserted here.
inline RelCat create_weq(const FinFunctor& F) {
  const auto& C = *F.dom;
  std::vector<char> mask(C.num_morphisms(), 0);
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (F.cod->is_invertible(F.mmap[m])) mask[m] = 1;
  RelCat r = RelCat::from_mask(F.dom, std::move(mask));
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f) {
      int gf = C.compose(g, f);
      if (gf < 0) continue;
      int marked = r.marked(f) + r.marked(g) + r.marked(gf);
      if (marked == 2)
        throw std::logic_error("create_weq: two-out-of-three violated at " + C.mor(g).id +
                               "∘" + C.mor(f).id);
    }
  return r;
}

inline bool two_out_of_three_holds(const RelCat& R) {
  const auto& C = *R.base();
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f) {
      int gf = C.compose(g, f);
      if (gf < 0) continue;
      if (R.marked(f) + R.marked(g) + R.marked(gf) == 2) return false;
    }
  return true;
}

// Product with componentwise marking.
inline RelCat rel_product(const RelCat& R1, const RelCat& R2) {
  FinCatPtr P = product_category(R1.base(), R2.base());
  std::vector<char> mask(P->num_morphisms(), 0);
  for (int m1 = 0; m1 < R1.base()->num_morphisms(); ++m1)
    for (int m2 = 0; m2 < R2.base()->num_morphisms(); ++m2) {
      if (!R1.marked(m1) || !R2.marked(m2)) continue;
      int idx = P->mor_index("(" + R1.base()->mor(m1).id + "|" + R2.base()->mor(m2).id + ")");
      mask[idx] = 1;
    }
  return RelCat::from_mask(P, std::move(mask));
}

// All marking-preserving functors R1 -> R2, in the canonical enumeration
// order. Generator-level filtering prunes the search; the full condition
// F(W1) ⊆ W2 is enforced on every result.
inline std::vector<FinFunctor> rel_hom_set(const RelCat& R1, const RelCat& R2) {
  auto mor_ok = [&](int d, int c) { return !R1.marked(d) || R2.marked(c); };
  return enumerate_functors(R1.base(), R2.base(), mor_ok);
}

// Composable chains of length n, each chain a list of n morphism indices
// (for n = 0, a single object is encoded by its identity-free position).
struct Chain {
  std::vector<int> mors;  // n entries; empty for n = 0
  int object = -1;        // the single object when n = 0, else the source

  std::string key(const FinCat& C) const {
    std::string s = "ch[";
    if (mors.empty()) {
      s += C.object_name(object);
    } else {
      for (size_t i = 0; i < mors.size(); ++i) {
        if (i) s += ",";
        s += C.mor(mors[i]).id;
      }
    }
    return s + "]";
  }

  int vertex(const FinCat& C, int k) const {
    if (mors.empty()) return object;
    return k == 0 ? C.mor(mors[0]).src : C.mor(mors[k - 1]).tgt;
  }
};

// All length-n chains in C, lexicographic in the morphism index tuples.
inline std::vector<Chain> enumerate_chains(const FinCat& C, int n) {
  std::vector<Chain> out;
  if (n == 0) {
    for (int x = 0; x < C.num_objects(); ++x) out.push_back(Chain{{}, x});
    return out;
  }
  std::vector<int> cur;
  std::function<void()> dfs = [&]() {
    charge_cells();
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(Chain{cur, C.mor(cur[0]).src});
      return;
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
      if (!cur.empty() && C.mor(cur.back()).tgt != C.mor(m).src) continue;
      cur.push_back(m);
      dfs();
      cur.pop_back();
    }
  };
  dfs();
  return out;
}

// Fun([n],C)^W: objects are length-n chains, morphisms the natural
// transformations whose components are all marked, composed componentwise.
inline FinCatPtr rel_functor_category(const RelCat& R, int n) {
  BudgetScope scope;
  const auto& C = *R.base();
  std::vector<Chain> chains = enumerate_chains(C, n);
  std::vector<std::string> onames;
  for (const auto& ch : chains) onames.push_back(ch.key(C));

  struct Nt {
    int src, tgt;            // chain indices
    std::vector<int> comps;  // n+1 marked components
  };
  std::vector<Nt> nts;
  std::vector<FinCat::NamedMor> mors;
  auto ntkey = [&](const Nt& t) {
    std::string s = "nt[" + onames[t.src] + "=>" + onames[t.tgt] + "|";
    for (size_t i = 0; i < t.comps.size(); ++i) {
      if (i) s += ",";
      s += C.mor(t.comps[i]).id;
    }
    return s + "]";
  };
  for (int s = 0; s < static_cast<int>(chains.size()); ++s)
    for (int t = 0; t < static_cast<int>(chains.size()); ++t) {
      // backtrack over components; naturality against each chain step
      std::vector<int> comps;
      std::function<void(int)> dfs = [&](int k) {
        charge_cells();
        if (k == n + 1) {
          nts.push_back(Nt{s, t, comps});
          return;
        }
        int sx = chains[s].vertex(C, k), tx = chains[t].vertex(C, k);
        for (int c : C.hom(sx, tx)) {
          if (!R.marked(c)) continue;
          if (k > 0) {
            int lhs = C.compose(c, chains[s].mors[k - 1]);
            int rhs = C.compose(chains[t].mors[k - 1], comps[k - 1]);
            if (lhs != rhs) continue;
          }
          comps.push_back(c);
          dfs(k + 1);
          comps.pop_back();
        }
      };
      dfs(0);
    }
  for (const auto& t : nts) mors.push_back({ntkey(t), onames[t.src], onames[t.tgt]});
  std::vector<std::array<std::string, 3>> comps;
  for (const auto& t2 : nts)
    for (const auto& t1 : nts) {
      if (t1.tgt != t2.src) continue;
      Nt prod{t1.src, t2.tgt, {}};
      for (int k = 0; k <= n; ++k)
        prod.comps.push_back(C.compose(t2.comps[k], t1.comps[k]));
      comps.push_back({ntkey(t2), ntkey(t1), ntkey(prod)});
    }
  return FinCat::make(onames, mors, comps);
}

// The wide subcategory of marked morphisms, as its own FinCat.
inline FinCatPtr weq_subcategory(const RelCat& R) {
  const auto& C = *R.base();
  std::vector<FinCat::Mor> mors;
  std::vector<int> newidx(C.num_morphisms(), -1);
  for (int m : R.weq()) {
    newidx[m] = static_cast<int>(mors.size());
    mors.push_back(C.mor(m));
  }
  std::vector<std::vector<int>> comp(mors.size(), std::vector<int>(mors.size(), -1));
  for (size_t g = 0; g < mors.size(); ++g)
    for (size_t f = 0; f < mors.size(); ++f) {
      int gf = C.compose(R.weq()[g], R.weq()[f]);
      if (gf >= 0) comp[g][f] = newidx[gf];
    }
  return FinCat::from_tables(C.objects(), std::move(mors), std::move(comp));
}

// Number of length-n composable chains, by dynamic programming over the
// composability graph (used as an independent count oracle).
inline long long count_chains(const FinCat& C, int n) {
  if (n == 0) return C.num_objects();
  std::vector<long long> cur(C.num_morphisms(), 1);
  for (int step = 1; step < n; ++step) {
    std::vector<long long> next(C.num_morphisms(), 0);
    for (int f = 0; f < C.num_morphisms(); ++f)
      for (int g = 0; g < C.num_morphisms(); ++g)
        if (C.mor(f).tgt == C.mor(g).src) next[g] += cur[f];
    cur = std::move(next);
  }
  long long total = 0;
  for (long long v : cur) total += v;
  return total;
}

}  // namespace rnk
