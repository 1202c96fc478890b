#ifndef BISETPLUS_PLUS_HPP
#define BISETPLUS_PLUS_HPP

#include <map>
#include <string>
#include <vector>

#include "functor.hpp"
#include "scalar.hpp"

namespace bisetplus {

/// A generator [H, b]_G in canonical form: H is the representative of its
/// conjugacy class (a lattice index) and b the smallest label in its
/// N_G(H)-orbit.
struct PlusKey {
  std::size_t subgroup = 0;
  Label label;
  auto operator<=>(const PlusKey &) const = default;
  bool operator==(const PlusKey &) const = default;
};

/// Canonical form of the pair (H, b) for H ≤ G and b ∈ basis(H).
inline PlusKey canonicalize_pair(const SubgroupLattice &lat, const BasedFunctor &f, const Subgroup &h,
                                 const Label &b) {
  const std::size_t i = lat.index_of(h);
  const std::size_t cls = lat.class_of(i);
  const std::size_t r = lat.class_rep(cls);
  const Subgroup &rep = lat.subgroup(r);
  Label moved = f.conj(lat.to_rep(i), h, b);
  Label best = moved;
  for (Elem n : lat.normalizer_transversal(cls)) {
    Label c = f.conj(n, rep, moved);
    if (c < best)
      best = std::move(c);
  }
  return {r, std::move(best)};
}

/// An element of F₊(G) = (⊕_H F(H))_G with coefficients in Scalar.
template <class Scalar> class PlusElementT {
public:
  using Terms = std::map<PlusKey, Scalar>;

  PlusElementT() = default;
  PlusElementT(GroupPtr g, FunctorPtr f)
      : group_(std::move(g)), functor_(std::move(f)), lattice_(lattice_of(group_)) {}

  const GroupPtr &group() const { return group_; }
  const FunctorPtr &functor() const { return functor_; }
  const SubgroupLattice &lattice() const { return *lattice_; }
  const LatticePtr &lattice_ptr() const { return lattice_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c · [H, b]_G.
  void add(const Subgroup &h, const Label &b, const Scalar &c) {
    if (c == Scalar(0))
      return;
    add_canonical(canonicalize_pair(*lattice_, *functor_, h, b), c);
  }

  void add_canonical(const PlusKey &k, const Scalar &c) {
    if (c == Scalar(0))
      return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0))
        terms_.erase(it);
    }
  }

  Scalar coefficient(const PlusKey &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const Subgroup &subgroup(const PlusKey &k) const { return lattice_->subgroup(k.subgroup); }

  PlusElementT &operator+=(const PlusElementT &o) {
    check_same(o);
    for (const auto &[k, c] : o.terms_)
      add_canonical(k, c);
    return *this;
  }
  PlusElementT &operator-=(const PlusElementT &o) {
    check_same(o);
    for (const auto &[k, c] : o.terms_)
      add_canonical(k, -c);
    return *this;
  }
  friend PlusElementT operator+(PlusElementT a, const PlusElementT &b) { return a += b; }
  friend PlusElementT operator-(PlusElementT a, const PlusElementT &b) { return a -= b; }
  friend PlusElementT operator*(const Scalar &s, PlusElementT a) {
    if (s == Scalar(0))
      a.terms_.clear();
    for (auto &[k, c] : a.terms_)
      c *= s;
    return a;
  }

  friend bool operator==(const PlusElementT &a, const PlusElementT &b) {
    return same_group(a.group_, b.group_) && a.functor_->name() == b.functor_->name() &&
           a.terms_ == b.terms_;
  }

  void check_same(const PlusElementT &o) const {
    if (!same_group(group_, o.group_))
      throw Error("plus elements over different groups");
    if (functor_->name() != o.functor_->name())
      throw Error("plus elements over different functors");
  }

private:
  GroupPtr group_;
  FunctorPtr functor_;
  LatticePtr lattice_;
  Terms terms_;
};

using PlusElement = PlusElementT<long long>;

/// Every canonical key of F₊(G), in canonical order; their number is the rank.
inline std::vector<PlusKey> plus_basis(const GroupPtr &g, const BasedFunctor &f) {
  LatticePtr lat = lattice_of(g);
  std::vector<PlusKey> out;
  for (std::size_t c = 0; c < lat->class_count(); ++c) {
    const Subgroup &rep = lat->rep_subgroup(c);
    std::map<Label, bool> seen;
    for (const auto &b : f.basis(rep)) {
      PlusKey k = canonicalize_pair(*lat, f, rep, b);
      if (seen.emplace(k.label, true).second)
        out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar = long long>
PlusElementT<Scalar> plus_generator(const GroupPtr &g, const FunctorPtr &f, const PlusKey &k,
                                    const Scalar &c = Scalar(1)) {
  PlusElementT<Scalar> x(g, f);
  x.add_canonical(k, c);
  return x;
}

template <class Scalar = long long>
PlusElementT<Scalar> plus_generator(const GroupPtr &g, const FunctorPtr &f, const Subgroup &h,
                                    const Label &b, const Scalar &c = Scalar(1)) {
  PlusElementT<Scalar> x(g, f);
  x.add(h, b, c);
  return x;
}

/// [G, 1]_G
template <class Scalar = long long> PlusElementT<Scalar> plus_unit(const GroupPtr &g, const FunctorPtr &f) {
  Subgroup full = Subgroup::full(g);
  return plus_generator<Scalar>(g, f, full, f->value_one(full));
}

/// η_{F,G}(a) = [G, a]_G
template <class Scalar> PlusElementT<Scalar> plus_eta(const FunctorPtr &f, const FunctorValue<Scalar> &a) {
  if (!a.group.is_full())
    throw Error("eta expects an element of F(G) for the whole group");
  PlusElementT<Scalar> x(a.group.parent(), f);
  for (const auto &[l, c] : a.coeffs)
    x.add(a.group, l, c);
  return x;
}

template <class To, class From> PlusElementT<To> plus_convert(const PlusElementT<From> &x) {
  PlusElementT<To> out(x.group(), x.functor());
  for (const auto &[k, c] : x.terms())
    out.add_canonical(k, To(c));
  return out;
}

// ---------------------------------------------------------------------------
// Biset action

/// F₊([G × H / D]) for D ∈ 𝒮₊(G, H):
/// [K, a]_H ↦ Σ_{h ∈ p2(D)\H/K} [D * ^hK, F(D * Δ(^hK))(^h a)]_G.
template <class Scalar>
PlusElementT<Scalar> plus_act(const BisetElement &u, const PlusElementT<Scalar> &x) {
  if (!same_group(u.right(), x.group()))
    throw Error("plus_act: biset right group differs from the element's group");
  const BasedFunctor &f = *x.functor();
  const CategorySpec spec = f.base_spec();
  PlusElementT<Scalar> out(u.left(), x.functor());
  for (const auto &[dkey, dc] : u.terms()) {
    ProductSubgroup d = u.subgroup(dkey);
    if (!s_plus_member(spec, d))
      throw Error("plus_act: class " + describe(d) + " is not in S_+");
    for (const auto &[key, c] : x.terms()) {
      const Subgroup &k = x.subgroup(key);
      for (Elem h : double_cosets(d.p2(), k)) {
        Subgroup hk = k.conjugate(h);
        Label ha = f.conj(h, k, key.label);
        Subgroup p = star(d, hk);
        ProductSubgroup e = star_diagonal(d, hk);
        for (const auto &[l, cl] : f.act(e, p, hk, ha))
          out.add(p, l, Scalar(dc) * c * Scalar(cl));
      }
    }
  }
  return out;
}

/// The five elementary formulas, evaluated directly.
template <class Scalar>
PlusElementT<Scalar> plus_elementary(const Elementary &el, const PlusElementT<Scalar> &x) {
  const BasedFunctor &f = *x.functor();
  const FunctorPtr &fp = x.functor();
  const CategorySpec spec = f.base_spec();
  for (const auto &[k, c] : el.element.terms())
    if (!s_plus_member(spec, el.element.subgroup(k)))
      throw Error(std::string("plus_elementary: ") + to_string(el.kind) + " is not in S_+");
  if (!same_group(el.element.right(), x.group()))
    throw Error("plus_elementary: element lives on the wrong group");

  PlusElementT<Scalar> out(el.element.left(), fp);
  switch (el.kind) {
  case ElementaryKind::iso: {
    const GroupHom &alpha = *el.hom;
    for (const auto &[key, c] : x.terms()) {
      const Subgroup &k = x.subgroup(key);
      std::vector<Elem> img, pairs;
      for (Elem y : k.elements()) {
        img.push_back(alpha(y));
        pairs.push_back(static_cast<Elem>(alpha(y) * alpha.source->order() + y));
      }
      Subgroup ak(alpha.target, img);
      ProductSubgroup e(alpha.target, alpha.source, std::move(pairs));
      for (const auto &[l, cl] : f.act(e, ak, k, key.label))
        out.add(ak, l, c * Scalar(cl));
    }
    break;
  }
  case ElementaryKind::res: {
    const Subgroup &h = el.sub;
    const GroupPtr &hg = el.sub_group;
    for (const auto &[key, c] : x.terms()) {
      const Subgroup &k = x.subgroup(key);
      for (Elem g : double_cosets(h, k)) {
        Subgroup gk = k.conjugate(g);
        Subgroup meet = h.intersect(gk);
        Label ga = f.conj(g, k, key.label);
        for (const auto &[l, cl] : f.restrict(gk, meet, ga))
          out.add(restrict_to(h, hg, meet), l, c * Scalar(cl));
      }
    }
    break;
  }
  case ElementaryKind::ind: {
    for (const auto &[key, c] : x.terms())
      out.add(lift_from(el.sub, x.subgroup(key)), key.label, c);
    break;
  }
  case ElementaryKind::inf: {
    const Quotient &q = *el.quotient;
    const GroupPtr &g = el.group;
    for (const auto &[key, c] : x.terms()) {
      const Subgroup &kbar = x.subgroup(key);
      std::vector<Elem> pre, pairs;
      for (Elem y = 0; y < g->order(); ++y)
        if (kbar.contains(q.projection(y))) {
          pre.push_back(y);
          pairs.push_back(static_cast<Elem>(y * q.group->order() + q.projection(y)));
        }
      Subgroup k(g, pre);
      ProductSubgroup e(g, q.group, std::move(pairs));
      for (const auto &[l, cl] : f.act(e, k, kbar, key.label))
        out.add(k, l, c * Scalar(cl));
    }
    break;
  }
  case ElementaryKind::def: {
    const Quotient &q = *el.quotient;
    const GroupPtr &g = el.group;
    for (const auto &[key, c] : x.terms()) {
      const Subgroup &k = x.subgroup(key);
      std::vector<Elem> img, pairs;
      for (Elem y : k.elements()) {
        img.push_back(q.projection(y));
        pairs.push_back(static_cast<Elem>(q.projection(y) * g->order() + y));
      }
      Subgroup kn(q.group, img);
      ProductSubgroup e(q.group, g, std::move(pairs));
      for (const auto &[l, cl] : f.act(e, kn, k, key.label))
        out.add(kn, l, c * Scalar(cl));
    }
    break;
  }
  }
  return out;
}

/// The second form of the deflation formula:
/// [KN/N, F(iso_α) F(def^K_{K/(K∩N)})(a)]_{G/N} with α : K/(K∩N) → KN/N.
template <class Scalar>
PlusElementT<Scalar> plus_deflation_via_iso(const Elementary &el, const PlusElementT<Scalar> &x) {
  if (el.kind != ElementaryKind::def)
    throw Error("plus_deflation_via_iso needs a deflation");
  const BasedFunctor &f = *x.functor();
  const Quotient &q = *el.quotient;
  PlusElementT<Scalar> out(q.group, x.functor());
  for (const auto &[key, c] : x.terms()) {
    const Subgroup &k = x.subgroup(key);
    GroupPtr kg = k.as_group();
    Subgroup kg_full = Subgroup::full(kg);
    Subgroup kn = restrict_to(k, kg, k.intersect(el.sub));
    Quotient kq = quotient_group(kg, kn);
    // F(def^K_{K/(K∩N)}) on the materialized K
    std::vector<Elem> dpairs;
    for (Elem y = 0; y < kg->order(); ++y)
      dpairs.push_back(static_cast<Elem>(kq.projection(y) * kg->order() + y));
    ProductSubgroup dd(kq.group, kg, std::move(dpairs));
    // α : K/(K∩N) → KN/N
    std::vector<Elem> img;
    std::vector<Elem> alpha_images(kq.group->order());
    for (Elem y = 0; y < kg->order(); ++y) {
      Elem yn = q.projection(k.elements()[y]);
      alpha_images[kq.projection(y)] = yn;
      img.push_back(yn);
    }
    Subgroup knbar(q.group, img);
    std::vector<Elem> apairs;
    for (Elem z = 0; z < kq.group->order(); ++z)
      apairs.push_back(static_cast<Elem>(alpha_images[z] * kq.group->order() + z));
    ProductSubgroup de(q.group, kq.group, std::move(apairs));
    Subgroup kq_full = Subgroup::full(kq.group);
    for (const auto &[l1, c1] : f.act(dd, kq_full, kg_full, key.label))
      for (const auto &[l2, c2] : f.act(de, knbar, kq_full, l1))
        out.add(knbar, l2, c * Scalar(c1 * c2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring structure

/// [H, a]·[K, b] = Σ_{g ∈ H\G/K} [H ∩ ^gK, res(a) · res(^g b)]
template <class Scalar>
PlusElementT<Scalar> plus_mult(const PlusElementT<Scalar> &x, const PlusElementT<Scalar> &y) {
  x.check_same(y);
  const BasedFunctor &f = *x.functor();
  PlusElementT<Scalar> out(x.group(), x.functor());
  for (const auto &[kx, cx] : x.terms()) {
    const Subgroup &h = x.subgroup(kx);
    for (const auto &[ky, cy] : y.terms()) {
      const Subgroup &k = y.subgroup(ky);
      for (Elem g : double_cosets(h, k)) {
        Subgroup gk = k.conjugate(g);
        Subgroup meet = h.intersect(gk);
        Label gb = f.conj(g, k, ky.label);
        for (const auto &[la, ca] : f.restrict(h, meet, kx.label))
          for (const auto &[lb, cb] : f.restrict(gk, meet, gb))
            for (const auto &[lc, cc] : f.value_mult(meet, la, lb))
              out.add(meet, lc, cx * cy * Scalar(ca * cb * cc));
      }
    }
  }
  return out;
}

/// π_G: the F(G)-component of x.
template <class Scalar> FunctorValue<Scalar> plus_pi(const PlusElementT<Scalar> &x) {
  FunctorValue<Scalar> out{Subgroup::full(x.group()), {}};
  const std::size_t top = x.lattice().top();
  for (const auto &[k, c] : x.terms())
    if (k.subgroup == top)
      out.add(k.label, c);
  return out;
}

/// x with its H = G terms removed.
template <class Scalar> PlusElementT<Scalar> plus_proper_part(const PlusElementT<Scalar> &x) {
  PlusElementT<Scalar> out(x.group(), x.functor());
  const std::size_t top = x.lattice().top();
  for (const auto &[k, c] : x.terms())
    if (k.subgroup != top)
      out.add_canonical(k, c);
  return out;
}

template <class Scalar> std::string to_string(const PlusElementT<Scalar> &x) {
  if (x.is_zero())
    return "0";
  std::string s;
  for (const auto &[k, c] : x.terms()) {
    if (!s.empty())
      s += " + ";
    if (!(c == Scalar(1)))
      s += scalar_to_string(c) + "*";
    s += "[" + std::to_string(k.subgroup) + ":" + label_to_string(k.label) + "]";
  }
  return s;
}

} // namespace bisetplus

#endif
