#ifndef BISETPLUS_FUNCTOR_HPP
#define BISETPLUS_FUNCTOR_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "category.hpp"

namespace bisetplus {

/// A basis element of F(H). The constant functor uses the empty label; the
/// fibered functor stores a homomorphism H → ℤ/n as its values on the
/// elements of H in sorted order.
using Label = std::vector<std::int32_t>;

/// Integer combination of basis labels.
using LabelComb = std::map<Label, long long>;

inline std::string label_to_string(const Label &l) {
  if (l.empty())
    return "*";
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i)
    s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Abelianization

struct Abelianization {
  GroupPtr source;
  Quotient quotient;                             // source / [source, source]
  std::vector<std::size_t> invariant_factors;    // d_1 | d_2 | ... (ascending)
  std::vector<Elem> generators;                  // e_i in the quotient, order d_i
  std::vector<std::vector<std::size_t>> coords;  // quotient element -> exponents of e_i

  /// Exponents of the image of x ∈ source in the basis e_i.
  const std::vector<std::size_t> &coordinates(Elem x) const {
    return coords[quotient.projection(x)];
  }
};

namespace detail {

inline std::size_t prime_power_count(const Group &a, std::size_t q) {
  std::size_t n = 0;
  for (Elem x = 0; x < a.order(); ++x)
    if (a.pow(x, static_cast<long long>(q)) == Group::identity())
      ++n;
  return n;
}

/// Invariant factors of a finite abelian group, ascending, from the counts
/// |A[p^k]| of elements killed by p^k.
inline std::vector<std::size_t> abelian_invariants(const Group &a) {
  std::size_t m = a.order();
  std::vector<std::vector<std::size_t>> by_prime; // per prime: exponents of the p-parts, descending
  std::vector<std::size_t> primes;
  for (std::size_t p = 2, rest = m; rest > 1; ++p) {
    if (rest % p)
      continue;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // number of cyclic factors of order >= p^k is log_p(|A[p^k]| / |A[p^(k-1)]|)
    std::vector<std::size_t> at_least(e + 2, 0);
    std::size_t prev = 1, q = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      q *= p;
      std::size_t cnt = prime_power_count(a, q);
      std::size_t ratio = cnt / prev, r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least[k] = r;
      prev = cnt;
    }
    std::vector<std::size_t> parts; // exponents of cyclic p-factors, descending
    for (std::size_t k = e; k >= 1; --k)
      for (std::size_t j = 0; j < at_least[k] - at_least[k + 1]; ++j)
        parts.push_back(k);
    primes.push_back(p);
    by_prime.push_back(parts);
  }
  std::size_t rank = 0;
  for (const auto &parts : by_prime)
    rank = std::max(rank, parts.size());
  std::vector<std::size_t> factors(rank, 1); // descending
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < by_prime[i].size(); ++j)
      for (std::size_t k = 0; k < by_prime[i][j]; ++k)
        factors[j] *= primes[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

/// Finds e_1, ..., e_r of orders d_1, ..., d_r spanning A as a direct sum.
inline bool find_basis(const Group &a, const std::vector<std::size_t> &orders, std::size_t i,
                       const std::vector<Elem> &span, std::vector<Elem> &chosen) {
  if (i == orders.size())
    return span.size() == a.order();
  const std::size_t want = orders[orders.size() - 1 - i]; // largest first
  ElemSet in_span(a.order());
  for (Elem s : span)
    in_span.set(s);
  for (Elem x = 1; x < a.order(); ++x) {
    if (a.element_order(x) != want)
      continue;
    // <x> ∩ span = 1
    bool free = true;
    for (Elem y = x; y != Group::identity(); y = a.mul(y, x))
      if (in_span.test(y)) {
        free = false;
        break;
      }
    if (!free)
      continue;
    std::vector<Elem> next;
    next.reserve(span.size() * want);
    for (Elem s : span)
      for (Elem y = s, j = 0; j < want; ++j, y = a.mul(y, x))
        next.push_back(y);
    chosen.push_back(x);
    if (find_basis(a, orders, i + 1, next, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

inline Abelianization abelianization(const GroupPtr &h) {
  check_cap(h->order(), "abelianization");
  Subgroup full = Subgroup::full(h);
  Quotient q = quotient_group(h, commutator_subgroup(full));
  const Group &a = *q.group;
  Abelianization out{h, q, detail::abelian_invariants(a), {}, {}};
  std::vector<Elem> chosen;
  if (!detail::find_basis(a, out.invariant_factors, 0, {Group::identity()}, chosen))
    throw Error("abelianization: no basis found");
  std::reverse(chosen.begin(), chosen.end()); // ascending orders
  out.generators = chosen;
  out.coords.assign(a.order(), std::vector<std::size_t>(chosen.size(), 0));
  std::vector<std::size_t> exps(chosen.size(), 0);
  // enumerate all exponent vectors
  while (true) {
    Elem x = Group::identity();
    for (std::size_t i = 0; i < chosen.size(); ++i)
      x = a.mul(x, a.pow(chosen[i], static_cast<long long>(exps[i])));
    out.coords[x] = exps;
    std::size_t i = 0;
    while (i < exps.size() && ++exps[i] == out.invariant_factors[i])
      exps[i++] = 0;
    if (i == exps.size())
      break;
  }
  return out;
}

/// All homomorphisms H → ℤ/n for H ≤ parent, as value tables over the
/// sorted elements of H. Sorted lexicographically; the trivial hom is first.
inline std::vector<Label> hom_group(const Subgroup &h, int n) {
  if (n < 1)
    throw Error("modulus must be positive");
  GroupPtr hg = h.as_group();
  Abelianization ab = abelianization(hg);
  const std::size_t r = ab.invariant_factors.size();
  std::vector<int> step(r), count(r);
  for (std::size_t i = 0; i < r; ++i) {
    int g = std::gcd(static_cast<int>(ab.invariant_factors[i]), n);
    count[i] = g;
    step[i] = n / g;
  }
  std::vector<Label> out;
  std::vector<int> k(r, 0);
  while (true) {
    Label values(hg->order());
    for (Elem x = 0; x < hg->order(); ++x) {
      long long v = 0;
      const auto &c = ab.coordinates(x);
      for (std::size_t i = 0; i < r; ++i)
        v += static_cast<long long>(c[i]) * k[i] * step[i];
      values[x] = static_cast<std::int32_t>(v % n);
    }
    out.push_back(std::move(values));
    std::size_t i = 0;
    while (i < r && ++k[i] == count[i])
      k[i++] = 0;
    if (i == r)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Label> hom_group(const GroupPtr &h, int n) { return hom_group(Subgroup::full(h), n); }

// ---------------------------------------------------------------------------
// Based functors

/// A biset functor on 𝒟 with a distinguished basis of each F(H) that the
/// structure maps send to basis elements or zero.
///
/// Values are always attached to a subgroup H of some parent group. act takes
/// E ≤ parent(P) × parent(Q) with p1(E) = P and p2(E) ≤ Q, standing for the
/// class of the (P, Q)-biset (P × Q)/E.
class BasedFunctor {
public:
  virtual ~BasedFunctor() = default;

  virtual std::string name() const = 0;
  /// n for "fibered:n", 1 for the constant functor.
  virtual int conductor() const = 0;
  virtual std::vector<Label> basis(const Subgroup &h) const = 0;
  virtual LabelComb act(const ProductSubgroup &e, const Subgroup &p, const Subgroup &q,
                        const Label &a) const = 0;
  /// The isogation by c_g: a label on H to the corresponding label on ^gH.
  virtual Label conj(Elem g, const Subgroup &h, const Label &a) const = 0;
  virtual LabelComb value_mult(const Subgroup &h, const Label &a, const Label &b) const = 0;
  virtual Label value_one(const Subgroup &h) const = 0;

  /// res^K_L for L ≤ K (same parent).
  virtual LabelComb restrict(const Subgroup &k, const Subgroup &l, const Label &a) const {
    return act(ProductSubgroup::diagonal(l), l, k, a);
  }

  /// The category on which the functor is defined.
  virtual CategorySpec base_spec() const {
    return CategorySpec::from_conditions(ConditionSet(ConditionSet::p1));
  }

protected:
  static void require_p1(const ProductSubgroup &e, const Subgroup &p, const Subgroup &q) {
    if (!same_group(e.left(), p.parent()) || !same_group(e.right(), q.parent()))
      throw Error(std::string("functor act: subgroup lives in a different product"));
    if (!(e.p1() == p))
      throw Error("functor act: p1(E) differs from the target group");
    if (!e.p2().is_subgroup_of(q))
      throw Error("functor act: p2(E) is not contained in the source group");
  }
};

using FunctorPtr = std::shared_ptr<const BasedFunctor>;

/// The constant functor: ℤ on every group, identity along every D with p1(D) = P.
class ConstantFunctor final : public BasedFunctor {
public:
  std::string name() const override { return "const"; }
  int conductor() const override { return 1; }
  std::vector<Label> basis(const Subgroup &) const override { return {Label{}}; }
  LabelComb act(const ProductSubgroup &e, const Subgroup &p, const Subgroup &q,
                const Label &) const override {
    require_p1(e, p, q);
    return {{Label{}, 1}};
  }
  Label conj(Elem, const Subgroup &, const Label &) const override { return {}; }
  LabelComb value_mult(const Subgroup &, const Label &, const Label &) const override {
    return {{Label{}, 1}};
  }
  Label value_one(const Subgroup &) const override { return {}; }
  LabelComb restrict(const Subgroup &, const Subgroup &, const Label &) const override {
    return {{Label{}, 1}};
  }
};

/// F(H) = ℤ[Hom(H, ℤ/n)].
class FiberedFunctor final : public BasedFunctor {
public:
  explicit FiberedFunctor(int n) : n_(n) {
    if (n < 1)
      throw Error("fibered functor needs n >= 1");
  }

  std::string name() const override { return "fibered:" + std::to_string(n_); }
  int conductor() const override { return n_; }
  int modulus() const { return n_; }

  std::vector<Label> basis(const Subgroup &h) const override {
    const std::uint64_t fp = h.parent()->fingerprint();
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find({fp, h.elements()});
      if (it != cache_.end())
        return it->second;
    }
    std::vector<Label> b = hom_group(h, n_);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::make_pair(fp, h.elements()), b);
    return b;
  }

  /// ψ(p) = φ(q) for (p, q) ∈ E when φ vanishes on k2(E); zero otherwise.
  LabelComb act(const ProductSubgroup &e, const Subgroup &p, const Subgroup &q,
                const Label &a) const override {
    require_p1(e, p, q);
    for (Elem x : e.k2().elements())
      if (a[q.position(x)] != 0)
        return {};
    Label out(p.order());
    for (Elem c : e.elements())
      out[p.position(e.left_of(c))] = a[q.position(e.right_of(c))];
    return {{std::move(out), 1}};
  }

  Label conj(Elem g, const Subgroup &h, const Label &a) const override {
    Subgroup gh = h.conjugate(g);
    Label out(h.order());
    for (std::size_t i = 0; i < h.order(); ++i)
      out[gh.position(h.group().conj(g, h.elements()[i]))] = a[i];
    return out;
  }

  LabelComb value_mult(const Subgroup &, const Label &a, const Label &b) const override {
    Label out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = (a[i] + b[i]) % n_;
    return {{std::move(out), 1}};
  }

  Label value_one(const Subgroup &h) const override { return Label(h.order(), 0); }

  LabelComb restrict(const Subgroup &k, const Subgroup &l, const Label &a) const override {
    Label out(l.order());
    for (std::size_t i = 0; i < l.order(); ++i)
      out[i] = a[k.position(l.elements()[i])];
    return {{std::move(out), 1}};
  }

private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::vector<Elem>> &k) const noexcept {
      return ElemVectorHash{}(k.second) ^ (k.first * 0x9e3779b97f4a7c15ull);
    }
  };
  int n_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<std::uint64_t, std::vector<Elem>>, std::vector<Label>, KeyHash> cache_;
};

inline FunctorPtr constant_functor() { return std::make_shared<const ConstantFunctor>(); }
inline FunctorPtr fibered_functor(int n) { return std::make_shared<const FiberedFunctor>(n); }

/// Parses "const" or "fibered:n".
inline FunctorPtr functor_from_string(const std::string &s) {
  if (s == "const" || s == "constant")
    return constant_functor();
  if (s.rfind("fibered:", 0) == 0) {
    const std::string tail = s.substr(8);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad fibered modulus in '" + s + "'");
    int n = std::stoi(tail);
    if (n < 1 || n > 24)
      throw ParseError("fibered modulus must be between 1 and 24");
    return fibered_functor(n);
  }
  throw ParseError("unknown functor '" + s + "'");
}

// ---------------------------------------------------------------------------
// Elements of F(H)

/// An element of F(H) with coefficients in Scalar.
template <class Scalar> struct FunctorValue {
  Subgroup group;
  std::map<Label, Scalar> coeffs;

  void add(const Label &l, const Scalar &c) {
    if (c == Scalar(0))
      return;
    auto [it, inserted] = coeffs.emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0))
        coeffs.erase(it);
    }
  }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const FunctorValue &a, const FunctorValue &b) {
    return a.group == b.group && a.coeffs == b.coeffs;
  }
};

using FunctorElement = FunctorValue<long long>;

/// F([U]) applied to a ∈ F(H) for U ∈ B(G, H) whose classes satisfy p1 = G.
inline FunctorElement act_biset(const BasedFunctor &f, const BisetElement &u, const FunctorElement &a) {
  Subgroup gf = Subgroup::full(u.left()), hf = Subgroup::full(u.right());
  if (!(a.group == hf))
    throw Error("act_biset: element lives on a different group");
  FunctorElement out{gf, {}};
  for (const auto &[key, coeff] : u.terms()) {
    ProductSubgroup d = u.subgroup(key);
    for (const auto &[label, c] : a.coeffs)
      for (const auto &[l2, c2] : f.act(d, gf, hf, label))
        out.add(l2, coeff * c * c2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Law checking

struct LawReport {
  std::string functor;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  void fail(std::string s) {
    if (failures.size() < 16)
      failures.push_back(std::move(s));
    else if (failures.size() == 16)
      failures.push_back("...");
  }
};

/// Checks identity and composition laws on every pair of standard classes in
/// the base category between groups of the list, plus the Green laws on all
/// basis pairs and triples of each group and its subgroups.
inline LawReport check_functor_laws(const BasedFunctor &f, const std::vector<GroupPtr> &groups) {
  LawReport rep{f.name(), 0, {}};
  CategorySpec base = f.base_spec();

  auto singleton = [](const Subgroup &h, const Label &l) {
    FunctorElement e{h, {}};
    e.add(l, 1);
    return e;
  };

  for (const auto &g : groups) {
    Subgroup gf = Subgroup::full(g);
    BisetElement id = identity_biset(g);
    for (const auto &a : f.basis(gf)) {
      ++rep.cases;
      if (!(act_biset(f, id, singleton(gf, a)) == singleton(gf, a)))
        rep.fail("identity on " + g->name() + " label " + label_to_string(a));
    }
  }

  for (const auto &g : groups)
    for (const auto &h : groups)
      for (const auto &k : groups) {
        std::vector<ProductSubgroup> ds, es;
        for (auto &d : standard_basis(g, h))
          if (s_member(base, d))
            ds.push_back(std::move(d));
        for (auto &e : standard_basis(h, k))
          if (s_member(base, e))
            es.push_back(std::move(e));
        Subgroup kf = Subgroup::full(k);
        auto labels = f.basis(kf);
        for (const auto &d : ds) {
          BisetElement bd = BisetElement::standard(d);
          for (const auto &e : es) {
            BisetElement be = BisetElement::standard(e);
            BisetElement de = mackey_compose(bd, be);
            for (const auto &c : labels) {
              ++rep.cases;
              FunctorElement x = singleton(kf, c);
              if (!(act_biset(f, de, x) == act_biset(f, bd, act_biset(f, be, x))))
                rep.fail("composition " + describe(d) + " o " + describe(e) + " on " + label_to_string(c));
            }
          }
        }
      }

  for (const auto &g : groups)
    for (const auto &h : lattice_of(g)->subgroups()) {
      auto labels = f.basis(h);
      Label one = f.value_one(h);
      auto mult = [&](const LabelComb &x, const LabelComb &y) {
        LabelComb out;
        for (const auto &[a, ca] : x)
          for (const auto &[b, cb] : y)
            for (const auto &[c, cc] : f.value_mult(h, a, b))
              if ((out[c] += ca * cb * cc) == 0)
                out.erase(c);
        return out;
      };
      for (const auto &a : labels) {
        ++rep.cases;
        LabelComb la{{a, 1}}, lone{{one, 1}};
        if (mult(la, lone) != la || mult(lone, la) != la)
          rep.fail("unit on subgroup of order " + std::to_string(h.order()));
        for (const auto &b : labels) {
          LabelComb lb{{b, 1}};
          ++rep.cases;
          if (mult(la, lb) != mult(lb, la))
            rep.fail("commutativity on subgroup of order " + std::to_string(h.order()));
          // restriction to every subgroup is multiplicative and unital
          for (const auto &l : lattice_of(g)->subgroups()) {
            if (!l.is_subgroup_of(h))
              continue;
            ++rep.cases;
            LabelComb lhs;
            for (const auto &[c, cc] : mult(la, lb))
              for (const auto &[d, cd] : f.restrict(h, l, c))
                if ((lhs[d] += cc * cd) == 0)
                  lhs.erase(d);
            LabelComb ra = f.restrict(h, l, a), rb = f.restrict(h, l, b);
            LabelComb rhs;
            for (const auto &[x, cx] : ra)
              for (const auto &[y, cy] : rb)
                for (const auto &[z, cz] : f.value_mult(l, x, y))
                  if ((rhs[z] += cx * cy * cz) == 0)
                    rhs.erase(z);
            if (lhs != rhs)
              rep.fail("restriction not multiplicative on orders " + std::to_string(h.order()) + ">" +
                       std::to_string(l.order()));
            if (f.restrict(h, l, one) != LabelComb{{f.value_one(l), 1}})
              rep.fail("restriction not unital");
          }
          for (const auto &c : labels) {
            ++rep.cases;
            LabelComb lc{{c, 1}};
            if (mult(mult(la, lb), lc) != mult(la, mult(lb, lc)))
              rep.fail("associativity on subgroup of order " + std::to_string(h.order()));
          }
        }
      }
    }
  return rep;
}

/// A functor whose act is deliberately wrong on classes with k1 ≠ 1; used to
/// confirm the law checker catches defects.
class CorruptedFunctor final : public BasedFunctor {
public:
  explicit CorruptedFunctor(FunctorPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name() + "!corrupt"; }
  int conductor() const override { return inner_->conductor(); }
  std::vector<Label> basis(const Subgroup &h) const override { return inner_->basis(h); }
  LabelComb act(const ProductSubgroup &e, const Subgroup &p, const Subgroup &q, const Label &a) const override {
    LabelComb r = inner_->act(e, p, q, a);
    if (!e.k1().is_trivial() && !e.k2().is_trivial())
      for (auto &[l, c] : r)
        c *= 2;
    return r;
  }
  Label conj(Elem g, const Subgroup &h, const Label &a) const override { return inner_->conj(g, h, a); }
  LabelComb value_mult(const Subgroup &h, const Label &a, const Label &b) const override {
    return inner_->value_mult(h, a, b);
  }
  Label value_one(const Subgroup &h) const override { return inner_->value_one(h); }

private:
  FunctorPtr inner_;
};

} // namespace bisetplus

#endif
