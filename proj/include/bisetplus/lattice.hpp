#ifndef BISETPLUS_LATTICE_HPP
#define BISETPLUS_LATTICE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace bisetplus {

/// Every subgroup of a group, its conjugacy classes, the inclusion order and
/// the Möbius function of that order.
///
/// Subgroups are sorted by (order, element indices). The representative of a
/// class is its first member in that order, so index 0 is the trivial subgroup
/// and the last index is the whole group.
class SubgroupLattice {
public:
  explicit SubgroupLattice(GroupPtr g) : group_(std::move(g)) { enumerate(); }

  const GroupPtr &group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup &subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup> &subgroups() const { return subgroups_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(const Subgroup &s) const {
    auto it = index_.find(s.elements());
    if (it == index_.end() || !same_group(s.parent(), group_))
      return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const Subgroup &s) const {
    if (auto i = find(s))
      return *i;
    throw Error("subgroup does not belong to this lattice");
  }

  std::size_t class_count() const { return class_reps_.size(); }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  /// Subgroup index of the representative of class c.
  std::size_t class_rep(std::size_t c) const { return class_reps_[c]; }
  const Subgroup &rep_subgroup(std::size_t c) const { return subgroups_[class_reps_[c]]; }
  const std::vector<std::size_t> &class_members(std::size_t c) const { return members_[c]; }
  /// Some g with ^g S_i equal to the representative of its class.
  Elem to_rep(std::size_t i) const { return to_rep_[i]; }
  const Subgroup &class_normalizer(std::size_t c) const { return normalizers_[c]; }
  /// Smallest element of every coset of the representative in its normalizer.
  const std::vector<Elem> &normalizer_transversal(std::size_t c) const {
    return transversals_[c];
  }
  std::size_t class_of_subgroup(const Subgroup &s) const { return class_of(index_of(s)); }

  /// S_i ≤ S_j
  bool includes(std::size_t i, std::size_t j) const {
    return subgroups_[i].order() <= subgroups_[j].order() &&
           subgroups_[i].bits().subset_of(subgroups_[j].bits());
  }

  /// μ(L, K) for S_L ≤ S_K; throws when L is not contained in K.
  long long mobius(std::size_t l, std::size_t k) const {
    if (!includes(l, k))
      throw Error("mobius: first subgroup is not contained in the second");
    return mobius_row(l)[k];
  }

  /// All values μ(L, ·); zero where L is not contained in the argument.
  const std::vector<long long> &mobius_row(std::size_t l) const {
    std::lock_guard lock(mobius_mutex_);
    auto it = mobius_rows_.find(l);
    if (it != mobius_rows_.end())
      return it->second;
    std::vector<long long> row(size(), 0);
    row[l] = 1;
    // subgroups are sorted by order, so every proper subgroup of K precedes K
    for (std::size_t k = l + 1; k < size(); ++k) {
      if (!includes(l, k))
        continue;
      long long sum = 0;
      for (std::size_t m = l; m < k; ++m)
        if (row[m] != 0 && includes(m, k))
          sum += row[m];
      row[k] = -sum;
    }
    return mobius_rows_.emplace(l, std::move(row)).first->second;
  }

  /// Indices of subgroups satisfying a predicate (Σ_𝒢(G) for a class 𝒢).
  std::vector<std::size_t> filter(const std::function<bool(const Subgroup &)> &admissible) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (admissible(subgroups_[i]))
        out.push_back(i);
    return out;
  }

private:
  void enumerate() {
    const Group &g = *group_;
    check_cap(g.order(), "subgroup lattice");
    GroupPtr gp = group_;

    std::unordered_map<std::vector<Elem>, std::size_t, ElemVectorHash> found;
    std::vector<Subgroup> all;
    std::vector<std::vector<Elem>> gens_of;
    std::vector<bool> is_rep_candidate;

    auto add_with_conjugates = [&](const Subgroup &s, const std::vector<Elem> &gens) {
      if (found.count(s.elements()))
        return;
      // the new subgroup is processed; its conjugates are only recorded
      found.emplace(s.elements(), all.size());
      all.push_back(s);
      gens_of.push_back(gens);
      is_rep_candidate.push_back(true);
      for (Elem x = 1; x < g.order(); ++x) {
        Subgroup c = s.conjugate(x);
        if (found.count(c.elements()))
          continue;
        found.emplace(c.elements(), all.size());
        all.push_back(c);
        std::vector<Elem> cg;
        for (Elem y : gens)
          cg.push_back(g.conj(x, y));
        gens_of.push_back(std::move(cg));
        is_rep_candidate.push_back(false);
      }
    };

    add_with_conjugates(Subgroup::trivial(gp), {});
    // cyclic subgroups of prime-power order generate every subgroup by joins
    std::vector<Elem> prime_power_gens;
    {
      std::unordered_map<std::vector<Elem>, bool, ElemVectorHash> cyc_seen;
      for (Elem x = 1; x < g.order(); ++x) {
        std::size_t o = g.element_order(x);
        std::size_t p = 2;
        while (o % p)
          ++p;
        while (o % p == 0)
          o /= p;
        if (o != 1)
          continue;
        Subgroup c = Subgroup::generated(gp, {x});
        if (cyc_seen.emplace(c.elements(), true).second)
          prime_power_gens.push_back(x);
      }
    }
    for (Elem x : prime_power_gens)
      add_with_conjugates(Subgroup::generated(gp, {x}), {x});

    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!is_rep_candidate[i])
        continue;
      for (Elem c : prime_power_gens) {
        if (all[i].contains(c))
          continue;
        std::vector<Elem> gens = gens_of[i];
        gens.push_back(c);
        Subgroup j = closure_from(all[i], gens);
        add_with_conjugates(j, gens);
      }
    }

    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return all[a] < all[b]; });
    subgroups_.reserve(all.size());
    for (std::size_t i : order)
      subgroups_.push_back(std::move(all[i]));
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      index_.emplace(subgroups_[i].elements(), i);

    class_of_.assign(size(), static_cast<std::size_t>(-1));
    to_rep_.assign(size(), Group::identity());
    for (std::size_t i = 0; i < size(); ++i) {
      if (class_of_[i] != static_cast<std::size_t>(-1))
        continue;
      const std::size_t cls = class_reps_.size();
      class_reps_.push_back(i);
      members_.emplace_back();
      const Subgroup &rep = subgroups_[i];
      std::vector<Elem> norm;
      for (Elem x = 0; x < g.order(); ++x) {
        Subgroup c = rep.conjugate(x);
        std::size_t j = index_.at(c.elements());
        if (j == i)
          norm.push_back(x);
        if (class_of_[j] == static_cast<std::size_t>(-1)) {
          class_of_[j] = cls;
          to_rep_[j] = g.inv(x); // ^x rep = S_j, so ^{x^-1} S_j = rep
          members_[cls].push_back(j);
        }
      }
      std::sort(members_[cls].begin(), members_[cls].end());
      normalizers_.emplace_back(gp, std::move(norm));
      transversals_.push_back(left_coset_reps(rep, &normalizers_.back()));
    }
  }

  static Subgroup closure_from(const Subgroup &base, const std::vector<Elem> &gens) {
    const Group &g = base.group();
    ElemSet seen = base.bits();
    std::vector<Elem> elems = base.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Elem s : gens) {
        Elem y = g.mul(elems[i], s);
        if (!seen.test(y)) {
          seen.set(y);
          elems.push_back(y);
        }
      }
    return Subgroup(base.parent(), std::move(elems));
  }

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<std::vector<Elem>, std::size_t, ElemVectorHash> index_;
  std::vector<std::size_t> class_of_;
  std::vector<Elem> to_rep_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<Subgroup> normalizers_;
  std::vector<std::vector<Elem>> transversals_;
  mutable std::mutex mobius_mutex_;
  mutable std::map<std::size_t, std::vector<long long>> mobius_rows_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Shared, lazily built lattice for a group. Structurally equal groups share
/// one lattice; concurrent first requests may both build, one result wins.
inline LatticePtr lattice_of(const GroupPtr &g) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::vector<LatticePtr>> cache;
  {
    std::lock_guard lock(mutex);
    for (const auto &l : cache[g->fingerprint()])
      if (same_group(l->group(), g))
        return l;
  }
  auto built = std::make_shared<const SubgroupLattice>(g);
  std::lock_guard lock(mutex);
  for (const auto &l : cache[g->fingerprint()])
    if (same_group(l->group(), g))
      return l;
  cache[g->fingerprint()].push_back(built);
  return built;
}

/// Σ_𝒢(G) for an admissibility predicate on subgroups.
inline std::vector<Subgroup> sigma_g(const SubgroupLattice &lattice,
                                     const std::function<bool(const Subgroup &)> &admissible) {
  std::vector<Subgroup> out;
  for (std::size_t i : lattice.filter(admissible))
    out.push_back(lattice.subgroup(i));
  return out;
}

} // namespace bisetplus

#endif
