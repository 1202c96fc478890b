#ifndef BISETPLUS_TESTS_ORACLES_HPP
#define BISETPLUS_TESTS_ORACLES_HPP

// Brute-force reference computations that work directly on sets of
// permutations, without the group tables, lattices or biset code.

#include <bisetplus/group.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using bisetplus::Perm;
using PermSet = std::set<Perm>;

inline PermSet closure(const std::vector<Perm> &gens, std::size_t degree) {
  PermSet out{Perm(degree)};
  std::vector<Perm> todo{Perm(degree)};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto &s : gens) {
      Perm q = p * s;
      if (out.insert(q).second)
        todo.push_back(q);
    }
  }
  return out;
}

inline std::vector<Perm> elements(const bisetplus::Group &g) { return g.elements(); }

/// Every subgroup, found by adjoining one element at a time until nothing new appears.
inline std::set<PermSet> all_subgroups(const bisetplus::Group &g) {
  const std::size_t d = g.degree();
  std::set<PermSet> found{PermSet{Perm(d)}};
  std::vector<PermSet> frontier{PermSet{Perm(d)}};
  while (!frontier.empty()) {
    PermSet s = frontier.back();
    frontier.pop_back();
    for (const auto &x : g.elements()) {
      if (s.count(x))
        continue;
      std::vector<Perm> gens(s.begin(), s.end());
      gens.push_back(x);
      PermSet t = closure(gens, d);
      if (found.insert(t).second)
        frontier.push_back(t);
    }
  }
  return found;
}

inline PermSet conjugate(const Perm &g, const PermSet &s) {
  PermSet out;
  for (const auto &x : s)
    out.insert(g * x * g.inverse());
  return out;
}

inline std::size_t conjugacy_class_count(const bisetplus::Group &g) {
  std::set<PermSet> seen;
  std::size_t classes = 0;
  for (const auto &s : all_subgroups(g)) {
    if (seen.count(s))
      continue;
    ++classes;
    for (const auto &x : g.elements())
      seen.insert(conjugate(x, s));
  }
  return classes;
}

inline bool subset(const PermSet &a, const PermSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// μ(L, K) from the recursive definition on the subgroup poset.
inline long long mobius(const bisetplus::Group &g, const PermSet &l, const PermSet &k) {
  if (!subset(l, k))
    return 0;
  std::map<PermSet, long long> mu;
  std::vector<PermSet> chain;
  for (const auto &s : all_subgroups(g))
    if (subset(l, s) && subset(s, k))
      chain.push_back(s);
  std::sort(chain.begin(), chain.end(), [](const PermSet &a, const PermSet &b) { return a.size() < b.size(); });
  for (const auto &s : chain) {
    if (s == l) {
      mu[s] = 1;
      continue;
    }
    long long sum = 0;
    for (const auto &t : chain)
      if (t != s && subset(t, s))
        sum += mu[t];
    mu[s] = -sum;
  }
  return mu[k];
}

inline std::set<PermSet> left_cosets(const bisetplus::Group &g, const PermSet &k) {
  std::set<PermSet> out;
  for (const auto &x : g.elements()) {
    PermSet c;
    for (const auto &y : k)
      c.insert(x * y);
    out.insert(c);
  }
  return out;
}

inline PermSet translate(const Perm &h, const PermSet &c) {
  PermSet out;
  for (const auto &x : c)
    out.insert(h * x);
  return out;
}

/// |(G/K)^H|
inline long long fixed_points(const bisetplus::Group &g, const PermSet &k, const PermSet &h) {
  long long n = 0;
  for (const auto &c : left_cosets(g, k)) {
    bool fixed = true;
    for (const auto &x : h)
      if (translate(x, c) != c) {
        fixed = false;
        break;
      }
    n += fixed;
  }
  return n;
}

/// G/H × G/K as a G-set: the stabilizers of one point per orbit.
inline std::vector<PermSet> product_orbit_stabilizers(const bisetplus::Group &g, const PermSet &h,
                                                      const PermSet &k) {
  const auto ch = left_cosets(g, h), ck = left_cosets(g, k);
  std::set<std::pair<PermSet, PermSet>> unseen;
  for (const auto &a : ch)
    for (const auto &b : ck)
      unseen.emplace(a, b);
  std::vector<PermSet> stabs;
  while (!unseen.empty()) {
    const auto point = *unseen.begin();
    PermSet stab;
    for (const auto &x : g.elements()) {
      auto image = std::make_pair(translate(x, point.first), translate(x, point.second));
      unseen.erase(image);
      if (image == point)
        stab.insert(x);
    }
    stabs.push_back(stab);
  }
  return stabs;
}

inline bisetplus::Subgroup as_subgroup(const bisetplus::GroupPtr &g, const PermSet &s) {
  std::vector<bisetplus::Elem> elems;
  for (const auto &p : s)
    elems.push_back(g->index_of(p));
  return bisetplus::Subgroup(g, std::move(elems));
}

inline PermSet as_perm_set(const bisetplus::Subgroup &s) {
  PermSet out;
  for (auto e : s.elements())
    out.insert(s.parent()->element(e));
  return out;
}

} // namespace oracle

#endif
