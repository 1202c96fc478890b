#ifndef BISETPLUS_PRODUCT_SUBGROUP_HPP
#define BISETPLUS_PRODUCT_SUBGROUP_HPP

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "group.hpp"

namespace bisetplus {

using ElemPair = std::pair<Elem, Elem>;

/// A subgroup D ≤ G × H with its projections p1, p2 and kernels k1, k2.
///
/// Pairs are stored by combined index g * |H| + h, the element index of
/// (g, h) in direct_product(G, H).
class ProductSubgroup {
public:
  ProductSubgroup() = default;

  /// Wraps a pair set that is already a subgroup.
  ProductSubgroup(GroupPtr left, GroupPtr right, std::vector<Elem> combined)
      : left_(std::move(left)), right_(std::move(right)), elems_(std::move(combined)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    derive();
  }

  static ProductSubgroup generated(const GroupPtr &left, const GroupPtr &right,
                                   std::span<const ElemPair> gens) {
    const std::size_t nh = right->order();
    check_cap(left->order() * nh, "product subgroup");
    ElemSet seen(left->order() * nh);
    std::vector<Elem> elems{0};
    seen.set(0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Elem g = static_cast<Elem>(elems[i] / nh), h = static_cast<Elem>(elems[i] % nh);
      for (const auto &[a, b] : gens) {
        Elem c = static_cast<Elem>(left->mul(g, a) * nh + right->mul(h, b));
        if (!seen.test(c)) {
          seen.set(c);
          elems.push_back(c);
        }
      }
    }
    return ProductSubgroup(left, right, std::move(elems));
  }

  static ProductSubgroup generated(const GroupPtr &left, const GroupPtr &right,
                                   std::initializer_list<ElemPair> gens) {
    std::vector<ElemPair> v(gens);
    return generated(left, right, std::span<const ElemPair>(v));
  }

  static ProductSubgroup from_pairs(const GroupPtr &left, const GroupPtr &right,
                                    std::span<const ElemPair> pairs) {
    std::vector<Elem> c;
    c.reserve(pairs.size());
    for (const auto &[g, h] : pairs)
      c.push_back(static_cast<Elem>(g * right->order() + h));
    return ProductSubgroup(left, right, std::move(c));
  }

  /// From a subgroup of direct_product(left, right).
  static ProductSubgroup from_subgroup(const GroupPtr &left, const GroupPtr &right,
                                       const Subgroup &s) {
    return ProductSubgroup(left, right, s.elements());
  }

  /// {(h, h) : h ∈ H} for subgroups of the same parent (used as Δ(H) ≤ G×G).
  static ProductSubgroup diagonal(const Subgroup &h) {
    std::vector<Elem> c;
    const std::size_t n = h.parent()->order();
    for (Elem x : h.elements())
      c.push_back(static_cast<Elem>(x * n + x));
    return ProductSubgroup(h.parent(), h.parent(), std::move(c));
  }

  /// Δ(G) ≤ G × G
  static ProductSubgroup diagonal(const GroupPtr &g) { return diagonal(Subgroup::full(g)); }

  const GroupPtr &left() const { return left_; }
  const GroupPtr &right() const { return right_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Elem> &elements() const { return elems_; }
  Elem left_of(Elem c) const { return static_cast<Elem>(c / right_->order()); }
  Elem right_of(Elem c) const { return static_cast<Elem>(c % right_->order()); }
  Elem combine(Elem g, Elem h) const { return static_cast<Elem>(g * right_->order() + h); }
  bool contains(Elem g, Elem h) const { return bits_.test(combine(g, h)); }
  bool contains_combined(Elem c) const { return bits_.test(c); }
  const ElemSet &bits() const { return bits_; }

  std::vector<ElemPair> pairs() const {
    std::vector<ElemPair> out;
    out.reserve(elems_.size());
    for (Elem c : elems_)
      out.emplace_back(left_of(c), right_of(c));
    return out;
  }

  const Subgroup &p1() const { return p1_; }
  const Subgroup &p2() const { return p2_; }
  const Subgroup &k1() const { return k1_; }
  const Subgroup &k2() const { return k2_; }

  /// Subgroup of direct_product(left, right) with the same element set.
  Subgroup as_subgroup_of(const GroupPtr &product) const { return Subgroup(product, elems_); }

  /// ^{(a,b)} D
  ProductSubgroup conjugate(Elem a, Elem b) const {
    std::vector<Elem> out;
    out.reserve(elems_.size());
    for (Elem c : elems_)
      out.push_back(combine(left_->conj(a, left_of(c)), right_->conj(b, right_of(c))));
    return ProductSubgroup(left_, right_, std::move(out));
  }

  bool is_subgroup_of(const ProductSubgroup &other) const {
    return same_group(left_, other.left_) && same_group(right_, other.right_) &&
           bits_.subset_of(other.bits_);
  }

  /// D ∩ (P × Q) for subgroups P ≤ G, Q ≤ H.
  ProductSubgroup restrict_to(const Subgroup &p, const Subgroup &q) const {
    std::vector<Elem> out;
    for (Elem c : elems_)
      if (p.contains(left_of(c)) && q.contains(right_of(c)))
        out.push_back(c);
    return ProductSubgroup(left_, right_, std::move(out));
  }

  /// Swapped pairs {(h, g)} ≤ H × G.
  ProductSubgroup opposite() const {
    std::vector<Elem> out;
    out.reserve(elems_.size());
    for (Elem c : elems_)
      out.push_back(static_cast<Elem>(right_of(c) * left_->order() + left_of(c)));
    return ProductSubgroup(right_, left_, std::move(out));
  }

  friend bool operator==(const ProductSubgroup &a, const ProductSubgroup &b) {
    return a.elems_ == b.elems_ && same_group(a.left_, b.left_) && same_group(a.right_, b.right_);
  }

  /// Canonical key order: by order, then combined element indices.
  friend bool operator<(const ProductSubgroup &a, const ProductSubgroup &b) {
    if (a.elems_.size() != b.elems_.size())
      return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

private:
  void derive() {
    const std::size_t n = left_->order() * right_->order();
    bits_ = ElemSet(n);
    std::vector<Elem> p1, p2, k1, k2;
    for (Elem c : elems_) {
      bits_.set(c);
      Elem g = left_of(c), h = right_of(c);
      p1.push_back(g);
      p2.push_back(h);
      if (h == Group::identity())
        k1.push_back(g);
      if (g == Group::identity())
        k2.push_back(h);
    }
    p1_ = Subgroup(left_, std::move(p1));
    p2_ = Subgroup(right_, std::move(p2));
    k1_ = Subgroup(left_, std::move(k1));
    k2_ = Subgroup(right_, std::move(k2));
  }

  GroupPtr left_, right_;
  std::vector<Elem> elems_;
  ElemSet bits_;
  Subgroup p1_, p2_, k1_, k2_;
};

/// D * E = {(g, k) : ∃h, (g, h) ∈ D and (h, k) ∈ E}.
inline ProductSubgroup star(const ProductSubgroup &d, const ProductSubgroup &e) {
  if (!same_group(d.right(), e.left()))
    throw Error("star product: middle groups differ");
  const std::size_t nh = d.right()->order();
  std::vector<std::vector<Elem>> by_middle(nh);
  for (Elem c : e.elements())
    by_middle[e.left_of(c)].push_back(e.right_of(c));
  const std::size_t nk = e.right()->order();
  ElemSet seen(d.left()->order() * nk);
  std::vector<Elem> out;
  for (Elem c : d.elements()) {
    Elem g = d.left_of(c);
    for (Elem k : by_middle[d.right_of(c)]) {
      Elem gk = static_cast<Elem>(g * nk + k);
      if (!seen.test(gk)) {
        seen.set(gk);
        out.push_back(gk);
      }
    }
  }
  return ProductSubgroup(d.left(), e.right(), std::move(out));
}

/// D * K = {g : ∃k ∈ K, (g, k) ∈ D} for K ≤ H.
inline Subgroup star(const ProductSubgroup &d, const Subgroup &k) {
  if (!same_group(d.right(), k.parent()))
    throw Error("star product: subgroup is not in the right-hand group");
  std::vector<Elem> out;
  for (Elem c : d.elements())
    if (k.contains(d.right_of(c)))
      out.push_back(d.left_of(c));
  return Subgroup(d.left(), std::move(out));
}

/// K * D = {h : ∃k ∈ K, (k, h) ∈ D} for K ≤ G.
inline Subgroup star(const Subgroup &k, const ProductSubgroup &d) {
  if (!same_group(d.left(), k.parent()))
    throw Error("star product: subgroup is not in the left-hand group");
  std::vector<Elem> out;
  for (Elem c : d.elements())
    if (k.contains(d.left_of(c)))
      out.push_back(d.right_of(c));
  return Subgroup(d.right(), std::move(out));
}

/// D * Δ(K) = D ∩ (G × K)
inline ProductSubgroup star_diagonal(const ProductSubgroup &d, const Subgroup &k) {
  return d.restrict_to(Subgroup::full(d.left()), k);
}

/// Δ(K) * D = D ∩ (K × H)
inline ProductSubgroup diagonal_star(const Subgroup &k, const ProductSubgroup &d) {
  return d.restrict_to(k, Subgroup::full(d.right()));
}

/// Canonical (smallest-key) member of the G × H conjugacy class of D.
///
/// Conjugating by elements of D fixes D, so one conjugator per left coset of
/// D suffices. Conjugates are compared as bitsets: among sets of equal size,
/// the lexicographically smaller sorted vector owns the lowest differing bit.
inline ProductSubgroup canonical_conjugate(const ProductSubgroup &d) {
  const Group &g = *d.left();
  const Group &h = *d.right();
  const std::size_t nh = h.order();
  const std::size_t n = g.order() * nh;
  const auto &elems = d.elements();

  ElemSet covered(n);
  ElemSet best = d.bits();
  bool changed = false;
  for (Elem x = 0; x < n; ++x) {
    if (covered.test(x))
      continue;
    const Elem a = static_cast<Elem>(x / nh), b = static_cast<Elem>(x % nh);
    for (Elem c : elems)
      covered.set(static_cast<Elem>(g.mul(a, d.left_of(c)) * nh + h.mul(b, d.right_of(c))));
    if (x == 0)
      continue;
    ElemSet conj(n);
    for (Elem c : elems)
      conj.set(static_cast<Elem>(g.conj(a, d.left_of(c)) * nh + h.conj(b, d.right_of(c))));
    if (conj.lexicographically_less(best)) {
      best = std::move(conj);
      changed = true;
    }
  }
  if (!changed)
    return d;
  return ProductSubgroup(d.left(), d.right(), best.members());
}

} // namespace bisetplus

#endif
