#ifndef BISETPLUS_CATEGORY_HPP
#define BISETPLUS_CATEGORY_HPP

#include <array>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "biset.hpp"

namespace bisetplus {

/// Subset of the four conditions {k1, k2, p1, p2} on D ≤ P × Q.
class ConditionSet {
public:
  enum Bit : unsigned { k1 = 1, k2 = 2, p1 = 4, p2 = 8 };

  constexpr ConditionSet() = default;
  constexpr explicit ConditionSet(unsigned bits) : bits_(bits & 15u) {}

  static ConditionSet parse(const std::vector<std::string> &names) {
    unsigned bits = 0;
    for (const auto &n : names) {
      if (n == "k1") bits |= k1;
      else if (n == "k2") bits |= k2;
      else if (n == "p1") bits |= p1;
      else if (n == "p2") bits |= p2;
      else throw ParseError("unknown condition '" + n + "'");
    }
    return ConditionSet(bits);
  }

  constexpr bool has(Bit b) const { return bits_ & b; }
  constexpr unsigned bits() const { return bits_; }
  constexpr ConditionSet without(unsigned b) const { return ConditionSet(bits_ & ~b); }
  constexpr bool operator==(const ConditionSet &) const = default;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (has(k1)) out.push_back("k1");
    if (has(k2)) out.push_back("k2");
    if (has(p1)) out.push_back("p1");
    if (has(p2)) out.push_back("p2");
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (const auto &n : names())
      s += (s.size() > 1 ? "," : "") + n;
    return s + "}";
  }

  /// Whether D ≤ P × Q satisfies every condition, read relative to (P, Q).
  bool satisfied_by(const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) const {
    if (has(k1) && !d.k1().is_trivial()) return false;
    if (has(k2) && !d.k2().is_trivial()) return false;
    if (has(p1) && d.p1().order() != p.order()) return false;
    if (has(p2) && d.p2().order() != q.order()) return false;
    return true;
  }

private:
  unsigned bits_ = 0;
};

/// Membership in 𝒮(P, Q) for D ≤ P × Q, where P and Q are subgroups of the
/// parents of D's two sides.
using Membership = std::function<bool(const ProductSubgroup &, const Subgroup &, const Subgroup &)>;
using Admissible = std::function<bool(const Subgroup &)>;

/// The data (𝒢, 𝒮).
struct CategorySpec {
  std::string name;
  Admissible admissible;
  Membership member;
  std::optional<ConditionSet> conditions; // set when 𝒮 = 𝒮_C

  static CategorySpec from_conditions(ConditionSet c, Admissible adm = {}) {
    CategorySpec s;
    s.name = "S_" + c.to_string();
    s.admissible = adm ? std::move(adm) : [](const Subgroup &) { return true; };
    s.member = [c](const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) {
      return c.satisfied_by(d, p, q);
    };
    s.conditions = c;
    return s;
  }

  /// D ≤ P × Q lies in 𝒮(P, Q); throws when P or Q is not admissible.
  bool in(const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) const {
    if (!admissible(p) || !admissible(q))
      throw Error("ambient group is not admissible");
    return member(d, p, q);
  }
};

inline Subgroup left_full(const ProductSubgroup &d) { return Subgroup::full(d.left()); }
inline Subgroup right_full(const ProductSubgroup &d) { return Subgroup::full(d.right()); }

/// D ∈ 𝒮(G, H)
inline bool s_member(const CategorySpec &spec, const ProductSubgroup &d) {
  return spec.in(d, left_full(d), right_full(d));
}

/// D ∈ 𝒮₊(G, H): p1(D) ∈ 𝒢 and D ∈ 𝒮(p1(D), H).
inline bool s_plus_member(const CategorySpec &spec, const ProductSubgroup &d,
                          const Subgroup &p, const Subgroup &q) {
  if (!spec.admissible(p) || !spec.admissible(q))
    throw Error("ambient group is not admissible");
  return spec.admissible(d.p1()) && spec.member(d, d.p1(), q);
}

inline bool s_plus_member(const CategorySpec &spec, const ProductSubgroup &d) {
  return s_plus_member(spec, d, left_full(d), right_full(d));
}

/// D ∈ 𝒮⁺(G, H): p1(D), p2(D) ∈ 𝒢 and D ∈ 𝒮(p1(D), p2(D)).
inline bool s_upper_member(const CategorySpec &spec, const ProductSubgroup &d,
                           const Subgroup &p, const Subgroup &q) {
  if (!spec.admissible(p) || !spec.admissible(q))
    throw Error("ambient group is not admissible");
  return spec.admissible(d.p1()) && spec.admissible(d.p2()) && spec.member(d, d.p1(), d.p2());
}

inline bool s_upper_member(const CategorySpec &spec, const ProductSubgroup &d) {
  return s_upper_member(spec, d, left_full(d), right_full(d));
}

/// (𝒢, 𝒮₊) as a spec of its own.
inline CategorySpec plus_spec(const CategorySpec &base) {
  CategorySpec s;
  s.name = base.name + "_+";
  s.admissible = base.admissible;
  s.member = [base](const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) {
    return s_plus_member(base, d, p, q);
  };
  return s;
}

/// (𝒢, 𝒮⁺) as a spec of its own.
inline CategorySpec upper_spec(const CategorySpec &base) {
  CategorySpec s;
  s.name = base.name + "^+";
  s.admissible = base.admissible;
  s.member = [base](const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) {
    return s_upper_member(base, d, p, q);
  };
  return s;
}

// ---------------------------------------------------------------------------
// Axiom checking

/// Human-readable generator list of a product subgroup, e.g. "<(1,0),(2,2)>".
inline std::string describe(const ProductSubgroup &d) {
  GroupPtr prod = product_group(d.left(), d.right());
  std::ostringstream os;
  os << d.left()->name() << "x" << d.right()->name() << "<";
  bool first = true;
  for (Elem c : d.as_subgroup_of(prod).generators()) {
    os << (first ? "" : ",") << "(" << d.left_of(c) << "," << d.right_of(c) << ")";
    first = false;
  }
  return os.str() + ">";
}

struct AxiomResult {
  int axiom = 0; // 1..7
  bool passed = true;
  std::size_t cases = 0;
  bool sampled = false;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    passed = false;
    if (counterexamples.size() < 8)
      counterexamples.push_back(std::move(what));
  }
};

struct AxiomReport {
  std::string spec;
  std::vector<AxiomResult> results;

  const AxiomResult &axiom(int i) const {
    for (const auto &r : results)
      if (r.axiom == i)
        return r;
    throw Error("axiom " + std::to_string(i) + " was not checked");
  }
  bool passed(int i) const { return axiom(i).passed; }
};

inline const char *roman(int i) {
  static const std::array<const char *, 8> r = {"", "i", "ii", "iii", "iv", "v", "vi", "vii"};
  return r.at(i);
}

/// Checks axioms (i)–(vii) for (𝒢, 𝒮) with ambient groups taken from
/// `groups`. Pairs with |G × H| ≤ exhaustive_limit are checked on every
/// subgroup; larger pairs (and axiom (iii) on triples that exceed the budget)
/// draw `budget` seeded samples.
inline AxiomReport check_axioms(const CategorySpec &spec, const std::vector<GroupPtr> &groups,
                                const std::vector<int> &which = {1, 2, 3, 4, 5, 6, 7},
                                std::size_t budget = 2000, std::uint64_t seed = 1,
                                std::size_t exhaustive_limit = 144) {
  AxiomReport report{spec.name, {}};
  std::mt19937_64 rng(seed);
  auto wanted = [&](int i) { return std::find(which.begin(), which.end(), i) != which.end(); };

  std::vector<GroupPtr> adm;
  for (const auto &g : groups)
    if (spec.admissible(Subgroup::full(g)))
      adm.push_back(g);

  // every subgroup D ≤ G × H as a ProductSubgroup (all of them, or a sample)
  auto subgroups_of = [&](const GroupPtr &g, const GroupPtr &h, bool &sampled) {
    std::vector<ProductSubgroup> out;
    sampled = false;
    GroupPtr prod = product_group(g, h);
    if (prod->order() <= exhaustive_limit) {
      for (const auto &s : lattice_of(prod)->subgroups())
        out.emplace_back(g, h, s.elements());
      return out;
    }
    sampled = true;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(prod->order() - 1));
    for (std::size_t i = 0; i < std::min<std::size_t>(budget, 200); ++i) {
      std::vector<ElemPair> gens;
      for (int j = 0; j < 2; ++j) {
        Elem c = pick(rng);
        gens.emplace_back(static_cast<Elem>(c / h->order()), static_cast<Elem>(c % h->order()));
      }
      out.push_back(ProductSubgroup::generated(g, h, std::span<const ElemPair>(gens)));
    }
    return out;
  };

  auto in = [&](const ProductSubgroup &d, const Subgroup &p, const Subgroup &q) {
    return spec.admissible(p) && spec.admissible(q) && spec.member(d, p, q);
  };
  auto full_in = [&](const ProductSubgroup &d) { return in(d, left_full(d), right_full(d)); };

  if (wanted(1)) {
    AxiomResult r{1, true, 0, false, {}};
    for (const auto &g : adm) {
      ++r.cases;
      ProductSubgroup delta = ProductSubgroup::diagonal(g);
      if (!full_in(delta))
        r.fail("Delta(" + g->name() + ")");
    }
    report.results.push_back(r);
  }

  if (wanted(2)) {
    AxiomResult r{2, true, 0, false, {}};
    for (const auto &g : adm)
      for (const auto &h : adm) {
        GroupPtr prod = product_group(g, h);
        if (prod->order() > exhaustive_limit) {
          r.sampled = true;
          bool s;
          for (const auto &d : subgroups_of(g, h, s)) {
            bool base = full_in(d);
            for (int t = 0; t < 4; ++t) {
              ++r.cases;
              Elem a = std::uniform_int_distribution<Elem>(0, g->order() - 1)(rng);
              Elem b = std::uniform_int_distribution<Elem>(0, h->order() - 1)(rng);
              if (full_in(d.conjugate(a, b)) != base)
                r.fail(describe(d));
            }
          }
          continue;
        }
        LatticePtr lat = lattice_of(prod);
        for (std::size_t c = 0; c < lat->class_count(); ++c) {
          ProductSubgroup rep(g, h, lat->rep_subgroup(c).elements());
          bool base = full_in(rep);
          for (std::size_t m : lat->class_members(c)) {
            ++r.cases;
            if (full_in(ProductSubgroup(g, h, lat->subgroup(m).elements())) != base)
              r.fail(describe(rep));
          }
        }
      }
    report.results.push_back(r);
  }

  if (wanted(3)) {
    AxiomResult r{3, true, 0, false, {}};
    for (const auto &g : adm)
      for (const auto &h : adm)
        for (const auto &k : adm) {
          if (g->order() * h->order() > exhaustive_limit || h->order() * k->order() > exhaustive_limit) {
            r.sampled = true;
            bool s1, s2;
            auto ds = subgroups_of(g, h, s1);
            auto es = subgroups_of(h, k, s2);
            for (std::size_t i = 0; i < std::min<std::size_t>(budget / 10 + 1, ds.size() * es.size()); ++i) {
              const auto &d = ds[rng() % ds.size()];
              const auto &e = es[rng() % es.size()];
              if (!full_in(d) || !full_in(e))
                continue;
              ++r.cases;
              if (!full_in(star(d, e)))
                r.fail(describe(d) + " * " + describe(e));
            }
            continue;
          }
          LatticePtr ldh = lattice_of(product_group(g, h));
          LatticePtr lhk = lattice_of(product_group(h, k));
          std::vector<ProductSubgroup> ds, es;
          for (std::size_t c = 0; c < ldh->class_count(); ++c) {
            ProductSubgroup d(g, h, ldh->rep_subgroup(c).elements());
            if (full_in(d))
              ds.push_back(std::move(d));
          }
          for (const auto &s : lhk->subgroups()) {
            ProductSubgroup e(h, k, s.elements());
            if (full_in(e))
              es.push_back(std::move(e));
          }
          const bool sample = ds.size() * es.size() > budget * 10;
          if (sample)
            r.sampled = true;
          const std::size_t n = sample ? budget : ds.size() * es.size();
          for (std::size_t i = 0; i < n; ++i) {
            std::size_t idx = sample ? static_cast<std::size_t>(rng() % (ds.size() * es.size())) : i;
            const auto &d = ds[idx / es.size()];
            const auto &e = es[idx % es.size()];
            ++r.cases;
            if (!full_in(star(d, e)))
              r.fail(describe(d) + " * " + describe(e));
          }
        }
    report.results.push_back(r);
  }

  // (iv) and (vii): D*K ∈ 𝒢 and D*Δ(K) ∈ 𝒮(D*K, K) for K ≤ H (resp. K ≤ p2(D))
  auto check_star_condition = [&](AxiomResult &r, bool within_p2) {
    for (const auto &g : adm)
      for (const auto &h : adm) {
        bool s;
        auto ds = subgroups_of(g, h, s);
        r.sampled = r.sampled || s;
        const auto &ks = lattice_of(h)->subgroups();
        for (const auto &d : ds) {
          if (!full_in(d))
            continue;
          if (within_p2 && !spec.admissible(d.p2())) {
            ++r.cases;
            r.fail(describe(d) + ": p2 not admissible");
            continue;
          }
          for (const auto &k : ks) {
            if (!spec.admissible(k))
              continue;
            if (within_p2 && !k.is_subgroup_of(d.p2()))
              continue;
            ++r.cases;
            Subgroup dk = star(d, k);
            if (!spec.admissible(dk) || !in(star_diagonal(d, k), dk, k))
              r.fail(describe(d) + " with K of order " + std::to_string(k.order()));
          }
        }
      }
  };

  if (wanted(4)) {
    AxiomResult r{4, true, 0, false, {}};
    check_star_condition(r, false);
    report.results.push_back(r);
  }

  if (wanted(5) || wanted(6)) {
    AxiomResult r5{5, true, 0, false, {}}, r6{6, true, 0, false, {}};
    for (const auto &g : adm) {
      Subgroup gf = Subgroup::full(g);
      for (const auto &hs : lattice_of(g)->subgroups()) {
        if (!spec.admissible(hs))
          continue;
        ProductSubgroup delta = ProductSubgroup::diagonal(hs);
        ++r5.cases;
        ++r6.cases;
        if (!in(delta, gf, hs))
          r5.fail("Delta of order " + std::to_string(hs.order()) + " in " + g->name() + "xH");
        if (!in(delta, hs, gf))
          r6.fail("Delta of order " + std::to_string(hs.order()) + " in Hx" + g->name());
      }
    }
    if (wanted(5))
      report.results.push_back(r5);
    if (wanted(6))
      report.results.push_back(r6);
  }

  if (wanted(7)) {
    AxiomResult r{7, true, 0, false, {}};
    check_star_condition(r, true);
    report.results.push_back(r);
  }
  return report;
}

/// Which axioms 𝒮_C satisfies when 𝒢 contains a group with a proper
/// nontrivial subgroup: (v) fails exactly when p1 ∈ C and (vi) exactly when
/// p2 ∈ C; the rest always hold.
inline std::array<bool, 8> predicted_axioms(ConditionSet c) {
  std::array<bool, 8> ok{};
  ok.fill(true);
  ok[0] = false;
  ok[5] = !c.has(ConditionSet::p1);
  ok[6] = !c.has(ConditionSet::p2);
  return ok;
}

} // namespace bisetplus

#endif
