#ifndef BISETPLUS_GROUP_HPP
#define BISETPLUS_GROUP_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace bisetplus {

/// Index of an element inside its group's sorted element table.
using Elem = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Fixed-size bitset over the elements of one group.
class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }

  bool subset_of(const ElemSet &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  /// For two sets of the same size: true when this set's sorted member list
  /// is lexicographically smaller, i.e. the lowest differing element is ours.
  bool lexicographically_less(const ElemSet &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff)
        return (words_[i] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w; w &= w - 1)
        out.push_back(static_cast<Elem>(i * 64 + std::countr_zero(w)));
    return out;
  }

  bool operator==(const ElemSet &) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite permutation group with every element enumerated.
///
/// Elements are stored in lexicographic order of their image sequences, so
/// index 0 is always the identity and comparing index vectors compares
/// element sets in the canonical total order. Two Group objects with the
/// same degree and element set are the same group (see same_group()).
class Group {
  struct Private {};
  static constexpr std::size_t kTableLimit = 1200;

public:
  Group(Private, std::string name, std::size_t degree, std::vector<Perm> gens,
        std::vector<Perm> sorted_elements, std::vector<Elem> table)
      : name_(std::move(name)), degree_(degree), generators_(std::move(gens)),
        elements_(std::move(sorted_elements)), table_(std::move(table)) {
    index_.reserve(elements_.size());
    for (Elem i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], i);
    generator_indices_.reserve(generators_.size());
    for (const auto &g : generators_)
      generator_indices_.push_back(index_of(g));
    if (table_.empty() && elements_.size() <= kTableLimit) {
      const std::size_t n = elements_.size();
      table_.resize(n * n);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          table_[a * n + b] = index_of(elements_[a] * elements_[b]);
    }
    inverse_.resize(elements_.size());
    for (Elem a = 0; a < elements_.size(); ++a)
      inverse_[a] = index_of(elements_[a].inverse());
    fingerprint_ = 0x9e3779b97f4a7c15ull ^ degree_;
    PermHash h;
    for (const auto &p : elements_)
      fingerprint_ = fingerprint_ * 1099511628211ull + h(p);
  }

  /// Closes the generators under composition. Throws CapExceeded when the
  /// group grows past order_cap().
  static GroupPtr generate(std::string name, std::size_t degree,
                           std::vector<Perm> gens) {
    for (const auto &g : gens)
      if (g.degree() != degree)
        throw ParseError("generator " + g.to_string() + " has wrong degree");
    std::vector<Perm> elems{Perm(degree)};
    std::unordered_map<Perm, bool, PermHash> seen{{elems[0], true}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto &g : gens) {
        Perm next = elems[i] * g;
        if (seen.emplace(next, true).second) {
          elems.push_back(std::move(next));
          check_cap(elems.size(), "group " + name);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return std::make_shared<const Group>(Private{}, std::move(name), degree,
                                         std::move(gens), std::move(elems),
                                         std::vector<Elem>{});
  }

  static GroupPtr from_sorted(std::string name, std::size_t degree,
                              std::vector<Perm> gens, std::vector<Perm> elems,
                              std::vector<Elem> table = {}) {
    return std::make_shared<const Group>(Private{}, std::move(name), degree,
                                         std::move(gens), std::move(elems),
                                         std::move(table));
  }

  const std::string &name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm> &generators() const { return generators_; }
  const std::vector<Elem> &generator_indices() const { return generator_indices_; }
  const Perm &element(Elem e) const { return elements_[e]; }
  const std::vector<Perm> &elements() const { return elements_; }
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool has_table() const { return !table_.empty(); }

  static constexpr Elem identity() { return 0; }

  std::optional<Elem> find(const Perm &p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  Elem index_of(const Perm &p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw Error("permutation " + p.to_string() + " is not an element of group " + name_);
    return it->second;
  }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_of(elements_[a] * elements_[b]);
  }

  Elem inv(Elem a) const { return inverse_[a]; }

  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }

  Elem pow(Elem a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem r = identity();
    for (long long i = 0; i < k; ++i)
      r = mul(r, a);
    return r;
  }

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a))
      ++k;
    return k;
  }

  bool is_abelian() const {
    for (Elem a : generator_indices_)
      for (Elem b : generator_indices_)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

private:
  std::string name_;
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Elem> generator_indices_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::uint64_t fingerprint_ = 0;
};

/// Structural identity: same degree and same element set.
inline bool same_group(const Group &a, const Group &b) {
  if (&a == &b)
    return true;
  return a.degree() == b.degree() && a.order() == b.order() &&
         a.fingerprint() == b.fingerprint() && a.elements() == b.elements();
}

inline bool same_group(const GroupPtr &a, const GroupPtr &b) {
  return a && b && same_group(*a, *b);
}

/// A subgroup of a fixed parent group, stored as its sorted element indices.
class Subgroup {
public:
  Subgroup() = default;

  /// Wraps an element set already known to be a subgroup. Use generated()
  /// when closure is not guaranteed.
  Subgroup(GroupPtr parent, std::vector<Elem> elems)
      : parent_(std::move(parent)), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    bits_ = ElemSet(parent_->order());
    for (Elem e : elems_)
      bits_.set(e);
  }

  static Subgroup generated(const GroupPtr &parent, std::span<const Elem> gens) {
    const Group &g = *parent;
    ElemSet seen(g.order());
    std::vector<Elem> elems{Group::identity()};
    seen.set(Group::identity());
    std::vector<Elem> live;
    for (Elem s : gens)
      if (s != Group::identity())
        live.push_back(s);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Elem s : live) {
        Elem y = g.mul(elems[i], s);
        if (!seen.test(y)) {
          seen.set(y);
          elems.push_back(y);
        }
      }
    return Subgroup(parent, std::move(elems));
  }

  static Subgroup generated(const GroupPtr &parent, std::initializer_list<Elem> gens) {
    std::vector<Elem> v(gens);
    return generated(parent, std::span<const Elem>(v));
  }

  static Subgroup full(const GroupPtr &parent) {
    std::vector<Elem> all(parent->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(parent, std::move(all));
  }

  static Subgroup trivial(const GroupPtr &parent) {
    return Subgroup(parent, {Group::identity()});
  }

  const GroupPtr &parent() const { return parent_; }
  const Group &group() const { return *parent_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Elem> &elements() const { return elems_; }
  const ElemSet &bits() const { return bits_; }
  bool contains(Elem e) const { return bits_.test(e); }
  bool is_trivial() const { return elems_.size() == 1; }
  bool is_full() const { return elems_.size() == parent_->order(); }

  /// Position of e in the sorted element list; e must be a member.
  std::size_t position(Elem e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e)
      throw Error("element is not in subgroup");
    return static_cast<std::size_t>(it - elems_.begin());
  }

  bool is_subgroup_of(const Subgroup &other) const {
    return same_group(parent_, other.parent_) && elems_.size() <= other.elems_.size() &&
           bits_.subset_of(other.bits_);
  }

  /// ^g H = g H g^-1
  Subgroup conjugate(Elem g) const {
    std::vector<Elem> out;
    out.reserve(elems_.size());
    for (Elem x : elems_)
      out.push_back(parent_->conj(g, x));
    return Subgroup(parent_, std::move(out));
  }

  Subgroup intersect(const Subgroup &other) const {
    std::vector<Elem> out;
    for (Elem x : elems_)
      if (other.contains(x))
        out.push_back(x);
    return Subgroup(parent_, std::move(out));
  }

  Subgroup join(const Subgroup &other) const {
    std::vector<Elem> gens = generators();
    for (Elem x : other.generators())
      gens.push_back(x);
    return generated(parent_, gens);
  }

  /// Greedy generating set: scan elements in index order and keep each one
  /// that is not already generated. Deterministic.
  std::vector<Elem> generators() const {
    std::vector<Elem> gens;
    Subgroup current = trivial(parent_);
    for (Elem x : elems_) {
      if (current.order() == order())
        break;
      if (!current.contains(x)) {
        gens.push_back(x);
        current = generated(parent_, gens);
      }
    }
    return gens;
  }

  bool is_normal_in(const Subgroup &big) const {
    for (Elem g : big.generators())
      for (Elem x : elems_)
        if (!contains(parent_->conj(g, x)))
          return false;
    return true;
  }

  /// The subgroup as a group in its own right. Elements keep their relative
  /// order, so position(e) in this subgroup is the element index in the result.
  GroupPtr as_group(std::string name = {}) const {
    const Group &g = *parent_;
    std::vector<Perm> elems;
    elems.reserve(elems_.size());
    for (Elem e : elems_)
      elems.push_back(g.element(e));
    std::vector<Perm> gens;
    for (Elem e : generators())
      gens.push_back(g.element(e));
    std::vector<Elem> table;
    const std::size_t n = elems_.size();
    if (g.has_table() && n <= 1200) {
      table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          table[a * n + b] = static_cast<Elem>(position(g.mul(elems_[a], elems_[b])));
    }
    if (name.empty())
      name = g.name().empty() ? std::string("H") : g.name() + "_sub" + std::to_string(n);
    return Group::from_sorted(std::move(name), g.degree(), std::move(gens),
                              std::move(elems), std::move(table));
  }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return same_group(a.parent_, b.parent_) && a.elems_ == b.elems_;
  }

  /// Canonical key order: by order, then lexicographic element indices.
  friend bool operator<(const Subgroup &a, const Subgroup &b) {
    if (a.elems_.size() != b.elems_.size())
      return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

private:
  GroupPtr parent_;
  std::vector<Elem> elems_;
  ElemSet bits_;
};

struct ElemVectorHash {
  std::size_t operator()(const std::vector<Elem> &v) const noexcept {
    std::size_t h = 1469598103934665603ull ^ v.size();
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A homomorphism given by the images of every source element.
struct GroupHom {
  enum class Kind { general, isomorphism, epimorphism, embedding };

  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;
  Kind kind = Kind::general;

  Elem operator()(Elem x) const { return images[x]; }

  /// Validates the homomorphism property and the bijectivity/surjectivity/
  /// injectivity promised by kind.
  static GroupHom from_images(GroupPtr src, GroupPtr tgt, std::vector<Elem> images,
                              Kind kind) {
    if (images.size() != src->order())
      throw Error("homomorphism image table has wrong size");
    for (Elem x = 0; x < src->order(); ++x)
      for (Elem s : src->generator_indices())
        if (images[src->mul(x, s)] != tgt->mul(images[x], images[s]))
          throw Error("map is not a group homomorphism");
    GroupHom h{std::move(src), std::move(tgt), std::move(images), kind};
    h.check_kind();
    return h;
  }

  /// Extends generator images (aligned with source->generator_indices()).
  static GroupHom from_generators(GroupPtr src, GroupPtr tgt,
                                  std::span<const Elem> gen_images, Kind kind) {
    const auto &gens = src->generator_indices();
    if (gen_images.size() != gens.size())
      throw Error("wrong number of generator images");
    std::vector<Elem> images(src->order());
    std::vector<bool> known(src->order(), false);
    images[Group::identity()] = Group::identity();
    known[Group::identity()] = true;
    std::deque<Elem> queue{Group::identity()};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem y = src->mul(x, gens[i]);
        Elem img = tgt->mul(images[x], gen_images[i]);
        if (!known[y]) {
          known[y] = true;
          images[y] = img;
          queue.push_back(y);
        } else if (images[y] != img) {
          throw Error("generator images do not define a homomorphism");
        }
      }
    }
    return from_images(std::move(src), std::move(tgt), std::move(images), kind);
  }

  static GroupHom identity(const GroupPtr &g) {
    std::vector<Elem> images(g->order());
    std::iota(images.begin(), images.end(), Elem{0});
    return GroupHom{g, g, std::move(images), Kind::isomorphism};
  }

  bool is_injective() const {
    std::vector<bool> hit(target->order(), false);
    for (Elem y : images) {
      if (hit[y])
        return false;
      hit[y] = true;
    }
    return true;
  }

  bool is_surjective() const {
    std::vector<bool> hit(target->order(), false);
    for (Elem y : images)
      hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  Subgroup kernel() const {
    std::vector<Elem> k;
    for (Elem x = 0; x < images.size(); ++x)
      if (images[x] == Group::identity())
        k.push_back(x);
    return Subgroup(source, std::move(k));
  }

  Subgroup image() const { return Subgroup(target, images); }

  GroupHom inverse() const {
    if (!is_injective() || !is_surjective())
      throw Error("inverse of a non-bijective homomorphism");
    std::vector<Elem> inv(images.size());
    for (Elem x = 0; x < images.size(); ++x)
      inv[images[x]] = x;
    return GroupHom{target, source, std::move(inv), Kind::isomorphism};
  }

  /// (this ∘ first)
  GroupHom after(const GroupHom &first) const {
    if (!same_group(first.target, source))
      throw Error("composing homomorphisms with mismatched groups");
    std::vector<Elem> out(first.images.size());
    for (Elem x = 0; x < out.size(); ++x)
      out[x] = images[first.images[x]];
    return GroupHom{first.source, target, std::move(out), Kind::general};
  }

private:
  void check_kind() const {
    switch (kind) {
    case Kind::isomorphism:
      if (!is_injective() || !is_surjective())
        throw Error("isomorphism is not bijective");
      break;
    case Kind::epimorphism:
      if (!is_surjective())
        throw Error("epimorphism is not surjective");
      break;
    case Kind::embedding:
      if (!is_injective())
        throw Error("embedding is not injective");
      break;
    case Kind::general:
      break;
    }
  }
};

// ---------------------------------------------------------------------------
// Constructions

/// G × H acting on disjoint domains. Element (g, h) has index g * |H| + h,
/// which coincides with the lexicographic order of the combined images.
inline GroupPtr direct_product(const GroupPtr &g, const GroupPtr &h) {
  const std::size_t ng = g->order(), nh = h->order();
  check_cap(ng * nh, "direct product");
  const std::size_t deg = g->degree() + h->degree();
  std::vector<Perm> elems;
  elems.reserve(ng * nh);
  for (Elem a = 0; a < ng; ++a) {
    Perm left = g->element(a).shifted(0, deg);
    for (Elem b = 0; b < nh; ++b) {
      const Perm &right = h->element(b);
      Perm p = left;
      std::vector<Perm::value_type> img = p.images();
      for (std::size_t i = 0; i < right.degree(); ++i)
        img[g->degree() + i] = static_cast<Perm::value_type>(g->degree() + right[i]);
      elems.emplace_back(std::move(img));
    }
  }
  std::vector<Perm> gens;
  for (const auto &x : g->generators())
    gens.push_back(x.shifted(0, deg));
  for (const auto &y : h->generators())
    gens.push_back(y.shifted(g->degree(), deg));
  std::vector<Elem> table;
  const std::size_t n = ng * nh;
  if (n <= 1200) {
    table.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        table[a * n + b] = static_cast<Elem>(g->mul(a / nh, b / nh) * nh + h->mul(a % nh, b % nh));
  }
  return Group::from_sorted(g->name() + "x" + h->name(), deg, std::move(gens),
                            std::move(elems), std::move(table));
}

struct ProductWithProjections {
  GroupPtr product;
  GroupHom left_projection;
  GroupHom right_projection;
};

inline ProductWithProjections direct_product_with_projections(const GroupPtr &g,
                                                              const GroupPtr &h) {
  GroupPtr p = direct_product(g, h);
  const std::size_t nh = h->order();
  std::vector<Elem> left(p->order()), right(p->order());
  for (Elem x = 0; x < p->order(); ++x) {
    left[x] = static_cast<Elem>(x / nh);
    right[x] = static_cast<Elem>(x % nh);
  }
  return {p, GroupHom{p, g, std::move(left), GroupHom::Kind::epimorphism},
          GroupHom{p, h, std::move(right), GroupHom::Kind::epimorphism}};
}

inline Subgroup normalizer(const Subgroup &big, const Subgroup &h) {
  const Group &g = big.group();
  std::vector<Elem> out;
  for (Elem x : big.elements()) {
    bool ok = true;
    for (Elem y : h.elements())
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(x);
  }
  return Subgroup(big.parent(), std::move(out));
}

inline Subgroup normalizer(const Subgroup &h) {
  return normalizer(Subgroup::full(h.parent()), h);
}

/// Representatives of the double cosets A x B inside `within` (default: the
/// whole parent). Each representative is the smallest element of its double
/// coset.
inline std::vector<Elem> double_cosets(const Subgroup &a, const Subgroup &b,
                                       const Subgroup *within = nullptr) {
  if (!same_group(a.parent(), b.parent()))
    throw Error("double cosets of subgroups of different groups");
  if (within && (!a.is_subgroup_of(*within) || !b.is_subgroup_of(*within)))
    throw Error("double coset subgroups are not contained in the group");
  const Group &g = a.group();
  ElemSet seen(g.order());
  std::vector<Elem> reps;
  auto visit = [&](Elem x) {
    if (seen.test(x))
      return;
    reps.push_back(x);
    for (Elem s : a.elements()) {
      Elem sx = g.mul(s, x);
      for (Elem t : b.elements())
        seen.set(g.mul(sx, t));
    }
  };
  if (within) {
    for (Elem x : within->elements())
      visit(x);
  } else {
    for (Elem x = 0; x < g.order(); ++x)
      visit(x);
  }
  return reps;
}

/// Smallest element of every left coset xK of K in `within` (default: parent).
inline std::vector<Elem> left_coset_reps(const Subgroup &k, const Subgroup *within = nullptr) {
  const Group &g = k.group();
  ElemSet seen(g.order());
  std::vector<Elem> reps;
  auto visit = [&](Elem x) {
    if (seen.test(x))
      return;
    reps.push_back(x);
    for (Elem y : k.elements())
      seen.set(g.mul(x, y));
  };
  if (within) {
    for (Elem x : within->elements())
      visit(x);
  } else {
    for (Elem x = 0; x < g.order(); ++x)
      visit(x);
  }
  return reps;
}

/// c_g : H -> ^g H as an isomorphism between the materialized groups.
inline GroupHom conjugation_hom(Elem g, const Subgroup &h) {
  Subgroup target = h.conjugate(g);
  GroupPtr src = h.as_group();
  GroupPtr tgt = target.as_group();
  std::vector<Elem> images(h.order());
  for (std::size_t i = 0; i < h.order(); ++i)
    images[i] = static_cast<Elem>(target.position(h.group().conj(g, h.elements()[i])));
  return GroupHom::from_images(src, tgt, std::move(images), GroupHom::Kind::isomorphism);
}

/// G/N realized as the permutation action of G on the left cosets of N.
struct Quotient {
  GroupPtr source;     // the group being divided (materialized if a subgroup)
  GroupPtr group;      // the quotient
  GroupHom projection; // source -> group, kind epimorphism
};

inline Quotient quotient_group(const GroupPtr &g, const Subgroup &n) {
  if (!same_group(n.parent(), g))
    throw Error("normal subgroup belongs to a different group");
  if (!n.is_normal_in(Subgroup::full(g)))
    throw Error("subgroup is not normal");
  const std::size_t index = g->order() / n.order();
  std::vector<int> coset_of(g->order(), -1);
  std::vector<Elem> coset_rep;
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset_of[x] >= 0)
      continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (Elem y : n.elements())
      coset_of[g->mul(x, y)] = id;
  }
  std::size_t degree = std::max<std::size_t>(index, 1);
  auto action = [&](Elem x) {
    std::vector<Perm::value_type> img(degree);
    for (std::size_t c = 0; c < index; ++c)
      img[c] = static_cast<Perm::value_type>(coset_of[g->mul(x, coset_rep[c])]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Elem s : g->generator_indices())
    gens.push_back(action(s));
  std::string name = g->name() + "/" + std::to_string(n.order());
  GroupPtr q = Group::generate(name, degree, gens);
  std::vector<Elem> images(g->order());
  for (Elem x = 0; x < g->order(); ++x)
    images[x] = q->index_of(action(x));
  return Quotient{g, q, GroupHom::from_images(g, q, std::move(images), GroupHom::Kind::epimorphism)};
}

/// P/N for subgroups N ⊴ P of a common parent; the source is P materialized.
inline Quotient quotient_group(const Subgroup &p, const Subgroup &n) {
  if (!n.is_subgroup_of(p))
    throw Error("quotient: N is not contained in P");
  GroupPtr pg = p.as_group();
  std::vector<Elem> inner;
  for (Elem e : n.elements())
    inner.push_back(static_cast<Elem>(p.position(e)));
  return quotient_group(pg, Subgroup(pg, std::move(inner)));
}

/// Derived subgroup [H, H] as a subgroup of H's parent.
inline Subgroup commutator_subgroup(const Subgroup &h) {
  const Group &g = h.group();
  std::vector<Elem> gens;
  for (Elem a : h.elements())
    for (Elem b : h.elements())
      gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Subgroup c = Subgroup::generated(h.parent(), gens);
  // Normal closure is automatic: the set of commutators is conjugation-stable.
  return c;
}

/// Maps a subgroup S ≤ P (same parent) into the index space of P.as_group().
inline Subgroup restrict_to(const Subgroup &p, const GroupPtr &pg, const Subgroup &s) {
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem e : s.elements())
    out.push_back(static_cast<Elem>(p.position(e)));
  return Subgroup(pg, std::move(out));
}

/// Inverse of restrict_to: a subgroup of P.as_group() back in P's parent.
inline Subgroup lift_from(const Subgroup &p, const Subgroup &s) {
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem e : s.elements())
    out.push_back(p.elements()[e]);
  return Subgroup(p.parent(), std::move(out));
}

} // namespace bisetplus

#endif
