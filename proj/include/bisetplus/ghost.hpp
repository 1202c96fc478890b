#ifndef BISETPLUS_GHOST_HPP
#define BISETPLUS_GHOST_HPP

#include <map>
#include <vector>

#include "plus.hpp"

namespace bisetplus {

/// An element of F⁺(G), stored by its components at the class
/// representatives. Each component must be fixed by N_G(H).
template <class Scalar> class GhostElementT {
public:
  using Component = std::map<Label, Scalar>;

  GhostElementT() = default;
  GhostElementT(GroupPtr g, FunctorPtr f)
      : group_(std::move(g)), functor_(std::move(f)), lattice_(lattice_of(group_)),
        components_(lattice_->class_count()) {}

  const GroupPtr &group() const { return group_; }
  const FunctorPtr &functor() const { return functor_; }
  const SubgroupLattice &lattice() const { return *lattice_; }
  std::size_t size() const { return components_.size(); }

  /// Component at the representative of class c.
  const Component &component(std::size_t c) const { return components_[c]; }
  Component &component(std::size_t c) { return components_[c]; }

  void add(std::size_t c, const Label &l, const Scalar &v) {
    if (v == Scalar(0))
      return;
    auto [it, inserted] = components_[c].emplace(l, v);
    if (!inserted) {
      it->second += v;
      if (it->second == Scalar(0))
        components_[c].erase(it);
    }
  }

  /// a_S for any subgroup S_i of G: ^x a_rep where ^x rep = S_i.
  Component at(std::size_t subgroup_index) const {
    const std::size_t cls = lattice_->class_of(subgroup_index);
    const Subgroup &rep = lattice_->rep_subgroup(cls);
    const Elem x = group_->inv(lattice_->to_rep(subgroup_index));
    Component out;
    for (const auto &[l, c] : components_[cls])
      out[functor_->conj(x, rep, l)] += c;
    return out;
  }

  /// Whether every component is N_G(H)-fixed.
  bool is_fixed() const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      const Subgroup &rep = lattice_->rep_subgroup(c);
      for (Elem n : lattice_->class_normalizer(c).generators()) {
        Component moved;
        for (const auto &[l, v] : components_[c])
          moved[functor_->conj(n, rep, l)] += v;
        if (moved != components_[c])
          return false;
      }
    }
    return true;
  }

  /// The full tuple over every subgroup of G.
  std::vector<Component> expand() const {
    if (!is_fixed())
      throw Error("ghost element is not fixed by the normalizers");
    std::vector<Component> out;
    out.reserve(lattice_->size());
    for (std::size_t i = 0; i < lattice_->size(); ++i)
      out.push_back(at(i));
    return out;
  }

  GhostElementT &operator+=(const GhostElementT &o) {
    check_same(o);
    for (std::size_t c = 0; c < components_.size(); ++c)
      for (const auto &[l, v] : o.components_[c])
        add(c, l, v);
    return *this;
  }
  GhostElementT &operator-=(const GhostElementT &o) {
    check_same(o);
    for (std::size_t c = 0; c < components_.size(); ++c)
      for (const auto &[l, v] : o.components_[c])
        add(c, l, -v);
    return *this;
  }
  friend GhostElementT operator+(GhostElementT a, const GhostElementT &b) { return a += b; }
  friend GhostElementT operator-(GhostElementT a, const GhostElementT &b) { return a -= b; }
  friend GhostElementT operator*(const Scalar &s, GhostElementT a) {
    for (auto &comp : a.components_) {
      if (s == Scalar(0))
        comp.clear();
      for (auto &[l, v] : comp)
        v *= s;
    }
    return a;
  }
  friend bool operator==(const GhostElementT &a, const GhostElementT &b) {
    return same_group(a.group_, b.group_) && a.functor_->name() == b.functor_->name() &&
           a.components_ == b.components_;
  }

  bool is_zero() const {
    for (const auto &c : components_)
      if (!c.empty())
        return false;
    return true;
  }

  void check_same(const GhostElementT &o) const {
    if (!same_group(group_, o.group_))
      throw Error("ghost elements over different groups");
    if (functor_->name() != o.functor_->name())
      throw Error("ghost elements over different functors");
  }

private:
  GroupPtr group_;
  FunctorPtr functor_;
  LatticePtr lattice_;
  std::vector<Component> components_;
};

using GhostElement = GhostElementT<long long>;

/// (1_H)_H
template <class Scalar = long long> GhostElementT<Scalar> ghost_unit(const GroupPtr &g, const FunctorPtr &f) {
  GhostElementT<Scalar> out(g, f);
  for (std::size_t c = 0; c < out.size(); ++c)
    out.add(c, f->value_one(out.lattice().rep_subgroup(c)), Scalar(1));
  return out;
}

/// Builds a ghost element from a full tuple indexed by subgroup (only the
/// class representatives are read).
template <class Scalar>
GhostElementT<Scalar> ghost_from_tuple(const GroupPtr &g, const FunctorPtr &f,
                                       const std::vector<typename GhostElementT<Scalar>::Component> &tuple) {
  GhostElementT<Scalar> out(g, f);
  for (std::size_t c = 0; c < out.size(); ++c)
    out.component(c) = tuple.at(out.lattice().class_rep(c));
  return out;
}

namespace detail {

/// One term of F⁺([G×H/D]) applied to y, without the right-freeness check.
template <class Scalar>
void ghost_act_term(const ProductSubgroup &d, long long coeff, const GhostElementT<Scalar> &y,
                    GhostElementT<Scalar> &out) {
  const BasedFunctor &f = *y.functor();
  const SubgroupLattice &lg = out.lattice();
  const SubgroupLattice &lh = y.lattice();
  // H-orbits of (G×H)/D are represented by (g,1)D with g over G/p1(D);
  // the stabilizer of (g,1)D is ^(g,1)D.
  for (Elem g : left_coset_reps(d.p1())) {
    ProductSubgroup stab = d.conjugate(g, Group::identity());
    for (std::size_t c = 0; c < lg.class_count(); ++c) {
      const Subgroup &k = lg.rep_subgroup(c);
      if (!k.is_subgroup_of(stab.p1()))
        continue;
      Subgroup ku = star(k, stab);
      ProductSubgroup e = diagonal_star(k, stab);
      for (const auto &[l, v] : y.at(lh.index_of(ku)))
        for (const auto &[l2, v2] : f.act(e, k, ku, l))
          out.add(c, l2, Scalar(coeff) * v * Scalar(v2));
    }
  }
}

} // namespace detail

/// F⁺([U]) for U whose classes lie in 𝒮⁺ and are right-free (k2 = 1):
/// K-component = Σ_{u ∈ [U/H], K ≤ p1((G×H)_u)} F([K × K^u / (K×H)_u])(a_{K^u}).
template <class Scalar>
GhostElementT<Scalar> ghost_act(const BisetElement &u, const GhostElementT<Scalar> &y) {
  if (!same_group(u.right(), y.group()))
    throw Error("ghost_act: biset right group differs from the element's group");
  const CategorySpec spec = y.functor()->base_spec();
  GhostElementT<Scalar> out(u.left(), y.functor());
  for (const auto &[key, coeff] : u.terms()) {
    ProductSubgroup d = u.subgroup(key);
    if (!d.k2().is_trivial())
      throw Error("ghost_act: class " + describe(d) + " is not right-free");
    if (!s_upper_member(spec, d))
      throw Error("ghost_act: class " + describe(d) + " is not in S^+");
    detail::ghost_act_term(d, coeff, y, out);
  }
  return out;
}

/// The same formula with no precondition checks. Used to exhibit where the
/// right-freeness assumption matters.
template <class Scalar>
GhostElementT<Scalar> ghost_act_unchecked(const BisetElement &u, const GhostElementT<Scalar> &y) {
  if (!same_group(u.right(), y.group()))
    throw Error("ghost_act: biset right group differs from the element's group");
  GhostElementT<Scalar> out(u.left(), y.functor());
  for (const auto &[key, coeff] : u.terms())
    detail::ghost_act_term(u.subgroup(key), coeff, y, out);
  return out;
}

/// Coordinate-wise product.
template <class Scalar>
GhostElementT<Scalar> ghost_mult(const GhostElementT<Scalar> &x, const GhostElementT<Scalar> &y) {
  x.check_same(y);
  const BasedFunctor &f = *x.functor();
  GhostElementT<Scalar> out(x.group(), x.functor());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Subgroup &h = out.lattice().rep_subgroup(c);
    for (const auto &[a, ca] : x.component(c))
      for (const auto &[b, cb] : y.component(c))
        for (const auto &[l, cl] : f.value_mult(h, a, b))
          out.add(c, l, ca * cb * Scalar(cl));
  }
  return out;
}

template <class To, class From> GhostElementT<To> ghost_convert(const GhostElementT<From> &x) {
  GhostElementT<To> out(x.group(), x.functor());
  for (std::size_t c = 0; c < x.size(); ++c)
    for (const auto &[l, v] : x.component(c))
      out.add(c, l, To(v));
  return out;
}

} // namespace bisetplus

#endif
