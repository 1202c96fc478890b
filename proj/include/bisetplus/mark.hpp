#ifndef BISETPLUS_MARK_HPP
#define BISETPLUS_MARK_HPP

#include <string>
#include <vector>

#include "ghost.hpp"

namespace bisetplus {

/// m_{F,G}: L-component of mark([K, a]_G) is Σ_{gK : L ≤ ^gK} res^{^gK}_L(^g a).
template <class Scalar> GhostElementT<Scalar> mark(const PlusElementT<Scalar> &x) {
  const BasedFunctor &f = *x.functor();
  const SubgroupLattice &lat = x.lattice();
  GhostElementT<Scalar> out(x.group(), x.functor());
  for (const auto &[key, c] : x.terms()) {
    const Subgroup &k = x.subgroup(key);
    for (Elem g : left_coset_reps(k)) {
      Subgroup gk = k.conjugate(g);
      Label ga = f.conj(g, k, key.label);
      for (std::size_t cls = 0; cls < lat.class_count(); ++cls) {
        const Subgroup &l = lat.rep_subgroup(cls);
        if (!l.is_subgroup_of(gk))
          continue;
        for (const auto &[lb, cb] : f.restrict(gk, l, ga))
          out.add(cls, lb, c * Scalar(cb));
      }
    }
  }
  return out;
}

/// The same map computed literally as (π_H ∘ F₊(res^G_H))_H.
template <class Scalar> GhostElementT<Scalar> mark_via_restriction(const PlusElementT<Scalar> &x) {
  const SubgroupLattice &lat = x.lattice();
  GhostElementT<Scalar> out(x.group(), x.functor());
  for (std::size_t cls = 0; cls < lat.class_count(); ++cls) {
    const Subgroup &h = lat.rep_subgroup(cls);
    Elementary res = restriction(h);
    FunctorValue<Scalar> top = plus_pi(plus_elementary(res, x));
    // labels on the materialized H are indexed the same way as on H ≤ G
    for (const auto &[l, v] : top.coeffs)
      out.add(cls, l, v);
  }
  return out;
}

/// n_{F,G}(y) = Σ_{L ≤ K} |L| μ(L, K) [L, res^K_L(a_K)]_G.
template <class Scalar> PlusElementT<Scalar> mobius_inverse(const GhostElementT<Scalar> &y) {
  const BasedFunctor &f = *y.functor();
  const SubgroupLattice &lat = y.lattice();
  PlusElementT<Scalar> out(y.group(), y.functor());
  std::vector<typename GhostElementT<Scalar>::Component> tuple = y.expand();
  for (std::size_t li = 0; li < lat.size(); ++li) {
    const Subgroup &l = lat.subgroup(li);
    const auto &row = lat.mobius_row(li);
    for (std::size_t ki = 0; ki < lat.size(); ++ki) {
      if (row[ki] == 0)
        continue;
      const Scalar weight = Scalar(static_cast<long long>(l.order()) * row[ki]);
      for (const auto &[a, ca] : tuple[ki])
        for (const auto &[b, cb] : f.restrict(lat.subgroup(ki), l, a))
          out.add(l, b, weight * ca * Scalar(cb));
    }
  }
  return out;
}

/// The table of marks: row i is mark of the i-th canonical generator, columns
/// are the subgroup classes in lattice order.
inline std::vector<std::vector<long long>> table_of_marks(const GroupPtr &g) {
  FunctorPtr f = constant_functor();
  std::vector<std::vector<long long>> rows;
  for (const auto &k : plus_basis(g, *f)) {
    GhostElement m = mark(plus_generator(g, f, k));
    std::vector<long long> row(m.size(), 0);
    for (std::size_t c = 0; c < m.size(); ++c)
      row[c] = m.component(c).empty() ? 0 : m.component(c).begin()->second;
    rows.push_back(std::move(row));
  }
  return rows;
}

struct MarkIdentityReport {
  std::string group;
  std::string functor;
  std::size_t plus_checked = 0;
  std::size_t ghost_checked = 0;
  bool n_after_m = true;      // n∘m = |G|·id
  bool m_after_n = true;      // m∘n = |G|·id
  bool rational_inverse = true; // m and |G|⁻¹ n mutually inverse over ℚ
  bool mark_injective = true; // no basis element of F₊(G) is sent to zero, and the images are independent
  std::vector<std::string> failures;

  bool passed() const { return n_after_m && m_after_n && rational_inverse && mark_injective; }
};

namespace detail {

/// Rank of a rational matrix by Gauss-Jordan elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == Rational(0))
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == Rational(0))
        continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace detail

/// Every (class, label) slot of F⁺(G) as a spanning set: the orbit sum of a
/// basis label over N_G(H) at the class representative H.
template <class Scalar = long long>
std::vector<GhostElementT<Scalar>> ghost_spanning_set(const GroupPtr &g, const FunctorPtr &f) {
  LatticePtr lat = lattice_of(g);
  std::vector<GhostElementT<Scalar>> out;
  for (std::size_t c = 0; c < lat->class_count(); ++c) {
    const Subgroup &h = lat->rep_subgroup(c);
    std::map<Label, bool> seen;
    for (const auto &b : f->basis(h)) {
      if (seen.count(b))
        continue;
      GhostElementT<Scalar> y(g, f);
      std::map<Label, bool> orbit;
      for (Elem n : lat->class_normalizer(c).elements())
        orbit.emplace(f->conj(n, h, b), true);
      for (const auto &[l, _] : orbit) {
        seen.emplace(l, true);
        y.add(c, l, Scalar(1));
      }
      out.push_back(std::move(y));
    }
  }
  return out;
}

inline MarkIdentityReport verify_mark_identities(const GroupPtr &g, const FunctorPtr &f) {
  MarkIdentityReport rep;
  rep.group = g->name();
  rep.functor = f->name();
  const long long order = static_cast<long long>(g->order());
  const std::vector<PlusKey> basis = plus_basis(g, *f);

  std::vector<std::vector<Rational>> matrix;
  std::vector<std::pair<std::size_t, Label>> slots;
  for (const auto &k : basis) {
    PlusElement x = plus_generator(g, f, k);
    GhostElement m = mark(x);
    ++rep.plus_checked;
    if (!(mobius_inverse(m) == order * x)) {
      rep.n_after_m = false;
      rep.failures.push_back("n(m(x)) != |G| x for " + to_string(x));
    }
    auto xq = plus_convert<Rational>(x);
    auto back = Rational(1, order) * mobius_inverse(mark(xq));
    if (!(back == xq)) {
      rep.rational_inverse = false;
      rep.failures.push_back("|G|^-1 n(m(x)) != x over Q for " + to_string(x));
    }
    std::vector<Rational> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      for (const auto &[l, v] : m.component(c)) {
        auto slot = std::make_pair(c, l);
        auto it = std::find(slots.begin(), slots.end(), slot);
        if (it == slots.end()) {
          slots.push_back(slot);
          for (auto &r : matrix)
            r.push_back(0);
          it = slots.end() - 1;
        }
        row.resize(slots.size(), 0);
        row[static_cast<std::size_t>(it - slots.begin())] = v;
      }
    row.resize(slots.size(), 0);
    matrix.push_back(std::move(row));
  }
  for (auto &r : matrix)
    r.resize(slots.size(), 0);
  if (detail::rational_rank(matrix) != basis.size()) {
    rep.mark_injective = false;
    rep.failures.push_back("mark images of the canonical basis are dependent");
  }

  for (const auto &y : ghost_spanning_set(g, f)) {
    ++rep.ghost_checked;
    if (!(mark(mobius_inverse(y)) == order * y)) {
      rep.m_after_n = false;
      rep.failures.push_back("m(n(y)) != |G| y");
    }
    auto yq = ghost_convert<Rational>(y);
    if (!(mark(Rational(1, order) * mobius_inverse(yq)) == yq)) {
      rep.rational_inverse = false;
      rep.failures.push_back("m(|G|^-1 n(y)) != y over Q");
    }
  }
  return rep;
}

} // namespace bisetplus

#endif
