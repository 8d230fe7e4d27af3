#pragma once

// Constructors for the small categories used throughout: posets, the
// walking isomorphism, Z/2 as a one-object category, discrete and
// codiscrete categories, the walking retract, products, disjoint unions,
// opposites, and a seeded random generator of small categories.

#include <random>
#include <string>
#include <vector>

#include "fincat.hpp"

namespace rnk {

namespace detail {
inline std::string arrow_id(const std::string& s, const std::string& t,
                            const std::string& tag = {}) {
  return s + ">" + t + (tag.empty() ? "" : "#" + tag);
}
}  // namespace detail

// The poset [n] = {0 < 1 < ... < n}; morphism "a>b" for a <= b.
inline FinCatPtr poset_category(int n) {
  std::vector<std::string> objs;
  std::vector<FinCat::NamedMor> mors;
  std::vector<std::array<std::string, 3>> comps;
  for (int a = 0; a <= n; ++a) objs.push_back(std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      mors.push_back({detail::arrow_id(objs[a], objs[b]), objs[a], objs[b]});
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = b; c <= n; ++c)
        comps.push_back({detail::arrow_id(objs[b], objs[c]),
                         detail::arrow_id(objs[a], objs[b]),
                         detail::arrow_id(objs[a], objs[c])});
  return FinCat::make(objs, mors, comps);
}

// A finite poset given by named elements and a reflexive-transitive leq
// relation; leq[i][j] means objs[i] <= objs[j].
inline FinCatPtr poset_from_leq(const std::vector<std::string>& objs,
                                const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(objs.size());
  std::vector<FinCat::NamedMor> mors;
  std::vector<std::array<std::string, 3>> comps;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) mors.push_back({detail::arrow_id(objs[a], objs[b]), objs[a], objs[b]});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c])
          comps.push_back({detail::arrow_id(objs[b], objs[c]),
                           detail::arrow_id(objs[a], objs[b]),
                           detail::arrow_id(objs[a], objs[c])});
  return FinCat::make(objs, mors, comps);
}

// Two objects a, b with inverse morphisms f: a -> b and g: b -> a.
inline FinCatPtr walking_iso() {
  std::vector<std::string> objs = {"a", "b"};
  std::vector<FinCat::NamedMor> mors = {
      {"a>a", "a", "a"}, {"b>b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}};
  std::vector<std::array<std::string, 3>> comps = {
      {"a>a", "a>a", "a>a"}, {"b>b", "b>b", "b>b"}, {"f", "a>a", "f"},
      {"b>b", "f", "f"},     {"g", "b>b", "g"},     {"a>a", "g", "g"},
      {"g", "f", "a>a"},     {"f", "g", "b>b"}};
  return FinCat::make(objs, mors, comps);
}

// Z/2 as a one-object category: identity e and an involution g.
inline FinCatPtr z2_category() {
  std::vector<std::string> objs = {"x"};
  std::vector<FinCat::NamedMor> mors = {{"e", "x", "x"}, {"g", "x", "x"}};
  std::vector<std::array<std::string, 3>> comps = {
      {"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}};
  return FinCat::make(objs, mors, comps);
}

inline FinCatPtr discrete_category(int k) {
  std::vector<std::string> objs;
  std::vector<FinCat::NamedMor> mors;
  std::vector<std::array<std::string, 3>> comps;
  for (int i = 0; i < k; ++i) {
    std::string o = std::to_string(i);
    objs.push_back(o);
    mors.push_back({detail::arrow_id(o, o), o, o});
    comps.push_back({detail::arrow_id(o, o), detail::arrow_id(o, o), detail::arrow_id(o, o)});
  }
  return FinCat::make(objs, mors, comps);
}

// Codiscrete groupoid on k objects: exactly one morphism between any two.
inline FinCatPtr codiscrete_category(int k) {
  std::vector<std::string> objs;
  for (int i = 0; i < k; ++i) objs.push_back(std::to_string(i));
  std::vector<FinCat::NamedMor> mors;
  std::vector<std::array<std::string, 3>> comps;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mors.push_back({detail::arrow_id(objs[a], objs[b]), objs[a], objs[b]});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        comps.push_back({detail::arrow_id(objs[b], objs[c]),
                         detail::arrow_id(objs[a], objs[b]),
                         detail::arrow_id(objs[a], objs[c])});
  return FinCat::make(objs, mors, comps);
}

// Objects 0, 1 with f: 0 -> 1, g: 1 -> 0, g∘f = id_0 and the idempotent
// e = f∘g on 1.
inline FinCatPtr walking_retract() {
  std::vector<std::string> objs = {"0", "1"};
  std::vector<FinCat::NamedMor> mors = {
      {"0>0", "0", "0"}, {"1>1", "1", "1"}, {"f", "0", "1"}, {"g", "1", "0"}, {"e", "1", "1"}};
  std::vector<std::array<std::string, 3>> comps = {
      {"0>0", "0>0", "0>0"}, {"1>1", "1>1", "1>1"}, {"f", "0>0", "f"}, {"1>1", "f", "f"},
      {"g", "1>1", "g"},     {"0>0", "g", "g"},     {"e", "1>1", "e"}, {"1>1", "e", "e"},
      {"g", "f", "0>0"},     {"f", "g", "e"},       {"e", "f", "f"},   {"g", "e", "g"},
      {"e", "e", "e"}};
  return FinCat::make(objs, mors, comps);
}

// Two parallel arrows u, w : x -> y; localizing at w alone is the standard
// example whose localization has infinitely many morphisms.
inline FinCatPtr parallel_pair() {
  std::vector<std::string> objs = {"x", "y"};
  std::vector<FinCat::NamedMor> mors = {
      {"x>x", "x", "x"}, {"y>y", "y", "y"}, {"u", "x", "y"}, {"w", "x", "y"}};
  std::vector<std::array<std::string, 3>> comps = {
      {"x>x", "x>x", "x>x"}, {"y>y", "y>y", "y>y"}, {"u", "x>x", "u"},
      {"y>y", "u", "u"},     {"w", "x>x", "w"},     {"y>y", "w", "w"}};
  return FinCat::make(objs, mors, comps);
}

// The cospan poset a -> c <- b.
inline FinCatPtr cospan_poset() {
  std::vector<std::string> objs = {"a", "b", "c"};
  std::vector<std::vector<char>> leq = {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}};
  return poset_from_leq(objs, leq);
}

inline FinCatPtr product_category(const FinCatPtr& A, const FinCatPtr& B) {
  std::vector<std::string> objs;
  auto oname = [&](int a, int b) {
    return "(" + A->object_name(a) + "|" + B->object_name(b) + ")";
  };
  auto mname = [&](int m, int n) { return "(" + A->mor(m).id + "|" + B->mor(n).id + ")"; };
  for (int a = 0; a < A->num_objects(); ++a)
    for (int b = 0; b < B->num_objects(); ++b) objs.push_back(oname(a, b));
  std::vector<FinCat::NamedMor> mors;
  for (int m = 0; m < A->num_morphisms(); ++m)
    for (int n = 0; n < B->num_morphisms(); ++n)
      mors.push_back({mname(m, n), oname(A->mor(m).src, B->mor(n).src),
                      oname(A->mor(m).tgt, B->mor(n).tgt)});
  std::vector<std::array<std::string, 3>> comps;
  for (int m2 = 0; m2 < A->num_morphisms(); ++m2)
    for (int m1 = 0; m1 < A->num_morphisms(); ++m1) {
      int ma = A->compose(m2, m1);
      if (ma < 0) continue;
      for (int n2 = 0; n2 < B->num_morphisms(); ++n2)
        for (int n1 = 0; n1 < B->num_morphisms(); ++n1) {
          int mb = B->compose(n2, n1);
          if (mb < 0) continue;
          comps.push_back({mname(m2, n2), mname(m1, n1), mname(ma, mb)});
        }
    }
  return FinCat::make(objs, mors, comps);
}

inline FinCatPtr disjoint_union(const FinCatPtr& A, const FinCatPtr& B) {
  std::vector<std::string> objs;
  for (const auto& o : A->objects()) objs.push_back("L." + o);
  for (const auto& o : B->objects()) objs.push_back("R." + o);
  std::vector<FinCat::NamedMor> mors;
  for (const auto& m : A->morphisms())
    mors.push_back({"L." + m.id, "L." + A->object_name(m.src), "L." + A->object_name(m.tgt)});
  for (const auto& m : B->morphisms())
    mors.push_back({"R." + m.id, "R." + B->object_name(m.src), "R." + B->object_name(m.tgt)});
  std::vector<std::array<std::string, 3>> comps;
  for (int g = 0; g < A->num_morphisms(); ++g)
    for (int f = 0; f < A->num_morphisms(); ++f) {
      int gf = A->compose(g, f);
      if (gf >= 0)
        comps.push_back({"L." + A->mor(g).id, "L." + A->mor(f).id, "L." + A->mor(gf).id});
    }
  for (int g = 0; g < B->num_morphisms(); ++g)
    for (int f = 0; f < B->num_morphisms(); ++f) {
      int gf = B->compose(g, f);
      if (gf >= 0)
        comps.push_back({"R." + B->mor(g).id, "R." + B->mor(f).id, "R." + B->mor(gf).id});
    }
  return FinCat::make(objs, mors, comps);
}

inline FinCatPtr opposite_category(const FinCatPtr& C) {
  std::vector<FinCat::NamedMor> mors;
  for (const auto& m : C->morphisms())
    mors.push_back({m.id, C->object_name(m.tgt), C->object_name(m.src)});
  std::vector<std::array<std::string, 3>> comps;
  for (int g = 0; g < C->num_morphisms(); ++g)
    for (int f = 0; f < C->num_morphisms(); ++f) {
      int gf = C->compose(g, f);
      if (gf >= 0) comps.push_back({C->mor(f).id, C->mor(g).id, C->mor(gf).id});
    }
  return FinCat::make(C->objects(), mors, comps);
}

// Random labeled poset on `size` elements: a random DAG closed up under
// transitivity. Deterministic for a fixed generator state.
inline FinCatPtr random_poset(std::mt19937& rng, int size) {
  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < size; ++i) leq[i][i] = 1;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (coin(rng) == 0) leq[i][j] = 1;
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
  std::vector<std::string> objs;
  for (int i = 0; i < size; ++i) objs.push_back("p" + std::to_string(i));
  return poset_from_leq(objs, leq);
}

// Random small category with at most 4 objects, mixing gaunt and
// non-gaunt shapes.
inline FinCatPtr random_fincat(std::mt19937& rng) {
  std::uniform_int_distribution<int> shape(0, 5);
  switch (shape(rng)) {
    case 0:
      return random_poset(rng, 1 + static_cast<int>(rng() % 4));
    case 1:
      return walking_iso();
    case 2:
      return z2_category();
    case 3:
      return disjoint_union(walking_iso(), random_poset(rng, 1 + static_cast<int>(rng() % 2)));
    case 4:
      return product_category(poset_category(1), random_poset(rng, 1 + static_cast<int>(rng() % 2)));
    default:
      return disjoint_union(z2_category(), random_poset(rng, 1 + static_cast<int>(rng() % 3)));
  }
}

}  // namespace rnk
