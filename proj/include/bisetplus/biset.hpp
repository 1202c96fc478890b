#ifndef BISETPLUS_BISET_HPP
#define BISETPLUS_BISET_HPP

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lattice.hpp"
#include "product_subgroup.hpp"

namespace bisetplus {

/// Orders element-index keys by size first, then lexicographically. This is
/// the canonical order on subgroups used for every basis listing.
struct SubgroupKeyLess {
  bool operator()(const std::vector<Elem> &a, const std::vector<Elem> &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// Cached direct product G × H (index g * |H| + h).
inline GroupPtr product_group(const GroupPtr &g, const GroupPtr &h) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::tuple<GroupPtr, GroupPtr, GroupPtr>>> cache;
  auto key = std::make_pair(g->fingerprint(), h->fingerprint());
  {
    std::lock_guard lock(mutex);
    for (const auto &[a, b, p] : cache[key])
      if (same_group(a, g) && same_group(b, h))
        return p;
  }
  GroupPtr p = direct_product(g, h);
  std::lock_guard lock(mutex);
  cache[key].emplace_back(g, h, p);
  return p;
}

/// An element of the double Burnside group B(G, H): an integer combination
/// of standard classes [G × H / D], each stored under its canonical
/// representative.
class BisetElement {
public:
  using Key = std::vector<Elem>;
  using Terms = std::map<Key, long long, SubgroupKeyLess>;

  BisetElement() = default;
  BisetElement(GroupPtr left, GroupPtr right) : left_(std::move(left)), right_(std::move(right)) {}

  static BisetElement standard(const ProductSubgroup &d, long long coeff = 1) {
    BisetElement out(d.left(), d.right());
    out.add(d, coeff);
    return out;
  }

  const GroupPtr &left() const { return left_; }
  const GroupPtr &right() const { return right_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ProductSubgroup subgroup(const Key &key) const { return ProductSubgroup(left_, right_, key); }

  void add(const ProductSubgroup &d, long long coeff) {
    if (coeff == 0)
      return;
    check_groups(d.left(), d.right());
    add_canonical(canonical_conjugate(d).elements(), coeff);
  }

  /// Adds a key that is already the canonical representative of its class.
  void add_canonical(const Key &key, long long coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  long long coefficient(const ProductSubgroup &d) const {
    auto it = terms_.find(canonical_conjugate(d).elements());
    return it == terms_.end() ? 0 : it->second;
  }

  BisetElement &operator+=(const BisetElement &o) {
    check_groups(o.left_, o.right_);
    for (const auto &[k, c] : o.terms_)
      add_canonical(k, c);
    return *this;
  }
  BisetElement &operator-=(const BisetElement &o) {
    check_groups(o.left_, o.right_);
    for (const auto &[k, c] : o.terms_)
      add_canonical(k, -c);
    return *this;
  }
  friend BisetElement operator+(BisetElement a, const BisetElement &b) { return a += b; }
  friend BisetElement operator-(BisetElement a, const BisetElement &b) { return a -= b; }
  friend BisetElement operator*(long long s, BisetElement a) {
    if (s == 0)
      a.terms_.clear();
    for (auto &[k, c] : a.terms_)
      c *= s;
    return a;
  }

  friend bool operator==(const BisetElement &a, const BisetElement &b) {
    return same_group(a.left_, b.left_) && same_group(a.right_, b.right_) && a.terms_ == b.terms_;
  }

private:
  void check_groups(const GroupPtr &l, const GroupPtr &r) const {
    if (!same_group(l, left_) || !same_group(r, right_))
      throw Error("biset element: groups differ");
  }

  GroupPtr left_, right_;
  Terms terms_;
};

/// One canonical subgroup per conjugacy class of subgroups of G × H, in
/// canonical order.
inline std::vector<ProductSubgroup> standard_basis(const GroupPtr &g, const GroupPtr &h) {
  check_cap(g->order() * h->order(), "standard basis");
  LatticePtr lat = lattice_of(product_group(g, h));
  std::vector<ProductSubgroup> out;
  out.reserve(lat->class_count());
  for (std::size_t c = 0; c < lat->class_count(); ++c)
    out.emplace_back(g, h, lat->rep_subgroup(c).elements());
  return out;
}

// ---------------------------------------------------------------------------
// Elementary bisets

enum class ElementaryKind { res, ind, inf, def, iso };

inline const char *to_string(ElementaryKind k) {
  switch (k) {
  case ElementaryKind::res: return "res";
  case ElementaryKind::ind: return "ind";
  case ElementaryKind::inf: return "inf";
  case ElementaryKind::def: return "def";
  case ElementaryKind::iso: return "iso";
  }
  return "?";
}

/// An elementary biset together with the data that defines it.
///
/// res/ind: `group` is G, `sub` is H ≤ G and `sub_group` its materialization.
/// inf/def: `group` is G, `sub` is N and `quotient` holds G/N.
/// iso: `hom` is the isomorphism α : G → G'.
struct Elementary {
  ElementaryKind kind;
  GroupPtr group;
  Subgroup sub;
  GroupPtr sub_group;
  std::optional<Quotient> quotient;
  std::optional<GroupHom> hom;
  BisetElement element;
};

/// res^G_H ∈ B(H, G)
inline Elementary restriction(const Subgroup &h, const std::string &name = {}) {
  GroupPtr hg = h.as_group(name);
  std::vector<Elem> c;
  for (std::size_t i = 0; i < h.order(); ++i)
    c.push_back(static_cast<Elem>(i * h.parent()->order() + h.elements()[i]));
  ProductSubgroup d(hg, h.parent(), std::move(c));
  return {ElementaryKind::res, h.parent(), h, hg, std::nullopt, std::nullopt, BisetElement::standard(d)};
}

/// ind_H^G ∈ B(G, H)
inline Elementary induction(const Subgroup &h, const std::string &name = {}) {
  GroupPtr hg = h.as_group(name);
  std::vector<Elem> c;
  for (std::size_t i = 0; i < h.order(); ++i)
    c.push_back(static_cast<Elem>(h.elements()[i] * h.order() + i));
  ProductSubgroup d(h.parent(), hg, std::move(c));
  return {ElementaryKind::ind, h.parent(), h, hg, std::nullopt, std::nullopt, BisetElement::standard(d)};
}

/// inf^G_{G/N} ∈ B(G, G/N)
inline Elementary inflation(const Subgroup &n) {
  const GroupPtr &g = n.parent();
  Quotient q = quotient_group(g, n);
  std::vector<Elem> c;
  for (Elem x = 0; x < g->order(); ++x)
    c.push_back(static_cast<Elem>(x * q.group->order() + q.projection(x)));
  ProductSubgroup d(g, q.group, std::move(c));
  return {ElementaryKind::inf, g, n, nullptr, q, std::nullopt, BisetElement::standard(d)};
}

/// def^G_{G/N} ∈ B(G/N, G)
inline Elementary deflation(const Subgroup &n) {
  const GroupPtr &g = n.parent();
  Quotient q = quotient_group(g, n);
  std::vector<Elem> c;
  for (Elem x = 0; x < g->order(); ++x)
    c.push_back(static_cast<Elem>(q.projection(x) * g->order() + x));
  ProductSubgroup d(q.group, g, std::move(c));
  return {ElementaryKind::def, g, n, nullptr, q, std::nullopt, BisetElement::standard(d)};
}

/// iso_α ∈ B(G', G) for an isomorphism α : G → G'
inline Elementary isogation(const GroupHom &alpha) {
  if (!alpha.is_injective() || !alpha.is_surjective())
    throw Error("isogation needs a bijective homomorphism");
  std::vector<Elem> c;
  for (Elem x = 0; x < alpha.source->order(); ++x)
    c.push_back(static_cast<Elem>(alpha(x) * alpha.source->order() + x));
  ProductSubgroup d(alpha.target, alpha.source, std::move(c));
  return {ElementaryKind::iso, alpha.source, Subgroup::full(alpha.source), nullptr, std::nullopt, alpha,
          BisetElement::standard(d)};
}

// ---------------------------------------------------------------------------
// Composition

/// Composite a ∘ b for a ∈ B(G, H) and b ∈ B(H, K), term by term:
/// [G×H/D] · [H×K/E] = Σ_t [G×K / D * ^(t,1)E], t over p2(D)\H/p1(E).
inline BisetElement mackey_compose(const BisetElement &a, const BisetElement &b) {
  if (!same_group(a.right(), b.left()))
    throw Error("mackey_compose: middle groups differ");
  BisetElement out(a.left(), b.right());
  for (const auto &[dk, dc] : a.terms()) {
    ProductSubgroup d = a.subgroup(dk);
    for (const auto &[ek, ec] : b.terms()) {
      ProductSubgroup e = b.subgroup(ek);
      for (Elem t : double_cosets(d.p2(), e.p1()))
        out.add(star(d, e.conjugate(t, Group::identity())), dc * ec);
    }
  }
  return out;
}

/// Composes a chain left to right: compose_all({x, y, z}) = x ∘ y ∘ z.
inline BisetElement compose_all(const std::vector<BisetElement> &chain) {
  if (chain.empty())
    throw Error("compose_all: empty chain");
  BisetElement acc = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i)
    acc = mackey_compose(acc, chain[i]);
  return acc;
}

/// [G × G / Δ(G)]
inline BisetElement identity_biset(const GroupPtr &g) {
  return BisetElement::standard(ProductSubgroup::diagonal(g));
}

/// The five factors of a standard class:
/// [G×H/D] = ind ∘ inf ∘ iso_η ∘ def ∘ res.
struct Decomposition {
  Elementary ind, inf, iso, def, res;
  GroupHom eta; // p2(D)/k2(D) → p1(D)/k1(D)

  BisetElement recompose() const {
    return compose_all({ind.element, inf.element, iso.element, def.element, res.element});
  }
};

inline Decomposition decompose_standard(const ProductSubgroup &d) {
  const Subgroup &p1 = d.p1(), &p2 = d.p2();
  Elementary ind = induction(p1);
  Elementary res = restriction(p2);
  GroupPtr p1g = ind.sub_group, p2g = res.sub_group;
  Elementary inf = inflation(restrict_to(p1, p1g, d.k1()));
  Elementary def = deflation(restrict_to(p2, p2g, d.k2()));
  const Quotient &q1 = *inf.quotient;
  const Quotient &q2 = *def.quotient;

  std::vector<Elem> images(q2.group->order(), 0);
  std::vector<bool> known(q2.group->order(), false);
  for (Elem c : d.elements()) {
    Elem x = static_cast<Elem>(p2.position(d.right_of(c)));
    Elem q = q2.projection(x);
    if (!known[q]) {
      known[q] = true;
      images[q] = q1.projection(static_cast<Elem>(p1.position(d.left_of(c))));
    }
  }
  GroupHom eta = GroupHom::from_images(q2.group, q1.group, std::move(images),
                                       GroupHom::Kind::isomorphism);
  Elementary iso = isogation(eta);
  return {std::move(ind), std::move(inf), std::move(iso), std::move(def), std::move(res), std::move(eta)};
}

// ---------------------------------------------------------------------------
// Concrete bisets (oracle side)

/// A finite (G, H)-biset with its actions tabulated: left(g, u) = g·u and
/// right(u, h) = u·h.
struct ConcreteBiset {
  GroupPtr left_group, right_group;
  std::size_t points = 0;
  std::vector<std::uint32_t> left_table;  // g * points + u
  std::vector<std::uint32_t> right_table; // u * |H| + h

  std::uint32_t left(Elem g, std::uint32_t u) const { return left_table[g * points + u]; }
  std::uint32_t right(std::uint32_t u, Elem h) const {
    return right_table[u * right_group->order() + h];
  }

  /// (G × H)_u = {(g, h) : g·u·h⁻¹ = u}
  ProductSubgroup stabilizer(std::uint32_t u) const {
    std::vector<Elem> c;
    const Group &h = *right_group;
    for (Elem a = 0; a < left_group->order(); ++a) {
      std::uint32_t v = left(a, u);
      for (Elem b = 0; b < h.order(); ++b)
        if (right(v, h.inv(b)) == u)
          c.push_back(static_cast<Elem>(a * h.order() + b));
    }
    return ProductSubgroup(left_group, right_group, std::move(c));
  }

  /// Checks g(uh) = (gu)h on every triple and the action laws on generators.
  bool is_consistent() const {
    const Group &g = *left_group, &h = *right_group;
    for (std::uint32_t u = 0; u < points; ++u)
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < h.order(); ++b)
          if (left(a, right(u, b)) != right(left(a, u), b))
            return false;
    for (std::uint32_t u = 0; u < points; ++u) {
      if (left(Group::identity(), u) != u || right(u, Group::identity()) != u)
        return false;
      for (Elem a : g.generator_indices())
        for (Elem a2 : g.generator_indices())
          if (left(g.mul(a, a2), u) != left(a, left(a2, u)))
            return false;
      for (Elem b : h.generator_indices())
        for (Elem b2 : h.generator_indices())
          if (right(u, h.mul(b, b2)) != right(right(u, b), b2))
            return false;
    }
    return true;
  }
};

/// (G × H)/D as the left cosets xD, with (g, h)·xD·... written as g·u·h⁻¹.
inline ConcreteBiset realize(const ProductSubgroup &d) {
  const Group &g = *d.left(), &h = *d.right();
  const std::size_t nh = h.order(), n = g.order() * nh;
  check_cap(n, "realize");
  auto mul = [&](Elem x, Elem y) {
    return static_cast<Elem>(g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh));
  };
  std::vector<std::uint32_t> coset(n, UINT32_MAX);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != UINT32_MAX)
      continue;
    for (Elem y : d.elements())
      coset[mul(x, y)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  ConcreteBiset u{d.left(), d.right(), reps.size(), {}, {}};
  u.left_table.resize(g.order() * u.points);
  u.right_table.resize(u.points * nh);
  for (Elem a = 0; a < g.order(); ++a)
    for (std::uint32_t p = 0; p < u.points; ++p)
      u.left_table[a * u.points + p] = coset[mul(static_cast<Elem>(a * nh), reps[p])];
  for (std::uint32_t p = 0; p < u.points; ++p)
    for (Elem b = 0; b < nh; ++b)
      u.right_table[p * nh + b] = coset[mul(h.inv(b), reps[p])];
  return u;
}

namespace detail {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace detail

/// The biset U ×_H V, tabulated. Points are the H-orbits of U × V under
/// h(u, v) = (u h⁻¹, h v).
inline ConcreteBiset tensor(const ConcreteBiset &u, const ConcreteBiset &v) {
  if (!same_group(u.right_group, v.left_group))
    throw Error("tensor: middle groups differ");
  const Group &h = *u.right_group;
  const std::size_t n = u.points * v.points;
  detail::UnionFind uf(n);
  for (std::uint32_t a = 0; a < u.points; ++a)
    for (std::uint32_t b = 0; b < v.points; ++b)
      for (Elem s : h.generator_indices())
        uf.unite(a * static_cast<std::uint32_t>(v.points) + b,
                 u.right(a, h.inv(s)) * static_cast<std::uint32_t>(v.points) + v.left(s, b));
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t r = uf.find(x);
    if (id[r] == UINT32_MAX) {
      id[r] = static_cast<std::uint32_t>(rep.size());
      rep.push_back(x);
    }
    id[x] = id[r];
  }
  ConcreteBiset w{u.left_group, v.right_group, rep.size(), {}, {}};
  const std::size_t ng = u.left_group->order(), nk = v.right_group->order();
  w.left_table.resize(ng * w.points);
  w.right_table.resize(w.points * nk);
  for (std::uint32_t p = 0; p < w.points; ++p) {
    std::uint32_t a = rep[p] / static_cast<std::uint32_t>(v.points);
    std::uint32_t b = rep[p] % static_cast<std::uint32_t>(v.points);
    for (Elem g = 0; g < ng; ++g)
      w.left_table[g * w.points + p] = id[u.left(g, a) * v.points + b];
    for (Elem k = 0; k < nk; ++k)
      w.right_table[p * nk + k] = id[a * v.points + v.right(b, k)];
  }
  return w;
}

/// Decomposes a concrete biset into standard classes: Σ over G×H-orbits of
/// [G × H / stabilizer].
inline BisetElement orbit_decomposition(const ConcreteBiset &w) {
  const Group &g = *w.left_group, &k = *w.right_group;
  detail::UnionFind uf(w.points);
  for (std::uint32_t p = 0; p < w.points; ++p) {
    for (Elem s : g.generator_indices())
      uf.unite(p, w.left(s, p));
    for (Elem s : k.generator_indices())
      uf.unite(p, w.right(p, s));
  }
  BisetElement out(w.left_group, w.right_group);
  for (std::uint32_t p = 0; p < w.points; ++p)
    if (uf.find(p) == p)
      out.add(w.stabilizer(p), 1);
  return out;
}

/// Independent evaluation of [U] ·_H [V] by forming U ×_H V and reading off
/// its orbits and stabilizers.
inline BisetElement tensor_oracle(const ConcreteBiset &u, const ConcreteBiset &v) {
  return orbit_decomposition(tensor(u, v));
}

/// ^uK = (G × H)_u * K for K ≤ H
inline Subgroup left_stab(const ConcreteBiset &u, std::uint32_t point, const Subgroup &k) {
  return star(u.stabilizer(point), k);
}

/// K^u = K * (G × H)_u for K ≤ G
inline Subgroup right_stab(const ConcreteBiset &u, std::uint32_t point, const Subgroup &k) {
  return star(k, u.stabilizer(point));
}

} // namespace bisetplus

#endif
