#ifndef BISETPLUS_SPECIES_HPP
#define BISETPLUS_SPECIES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "mark.hpp"

namespace bisetplus {

/// A species σ_{(H,τ)} of F₊(G). For the constant functor τ is the identity
/// of ℤ; for ℤ[Hom(H, ℤ/n)] it is the character φ ↦ ζ_n^{φ(h)} of the
/// element h ∈ H.
struct SpeciesDescriptor {
  GroupPtr group;
  FunctorPtr functor;
  std::size_t subgroup = 0;   // lattice index of the class representative H
  std::optional<Elem> element; // h ∈ H (parent indexing) for fibered values

  std::string to_string() const {
    std::string s = "(" + std::to_string(subgroup);
    if (element)
      s += ", tau_" + std::to_string(*element);
    return s + ")";
  }
};

/// τ on a single label attached to the subgroup h.
inline Cyclotomic species_character(const BasedFunctor &f, const Subgroup &h, std::optional<Elem> element,
                                    const Label &l) {
  const int n = f.conductor();
  if (!element || l.empty())
    return Cyclotomic(n, 1);
  return Cyclotomic::root_of_unity(l[h.position(*element)], n);
}

/// Evaluates σ_{(S, τ)} for any subgroup S = lattice.subgroup(index) using the
/// expanded ghost component at S.
inline Cyclotomic evaluate_at(const BasedFunctor &f, const GhostElement &m, std::size_t index,
                              std::optional<Elem> element) {
  const Subgroup &s = m.lattice().subgroup(index);
  Cyclotomic out(f.conductor());
  for (const auto &[l, c] : m.at(index))
    out += Cyclotomic(f.conductor(), c) * species_character(f, s, element, l);
  return out;
}

inline Cyclotomic evaluate_species(const SpeciesDescriptor &s, const PlusElement &x) {
  if (!same_group(s.group, x.group()))
    throw Error("species and element live on different groups");
  if (s.functor->name() != x.functor()->name())
    throw Error("species and element use different functors");
  return evaluate_at(*x.functor(), mark(x), s.subgroup, s.element);
}

/// One descriptor per G-orbit of pairs (H, τ).
inline std::vector<SpeciesDescriptor> enumerate_species(const GroupPtr &g, const FunctorPtr &f) {
  LatticePtr lat = lattice_of(g);
  std::vector<SpeciesDescriptor> out;
  for (std::size_t c = 0; c < lat->class_count(); ++c) {
    const std::size_t idx = lat->class_rep(c);
    const Subgroup &h = lat->subgroup(idx);
    if (f->conductor() == 1) {
      out.push_back({g, f, idx, std::nullopt});
      continue;
    }
    const std::vector<Label> labels = f->basis(h);
    auto signature = [&](Elem y) {
      std::vector<std::int32_t> sig;
      sig.reserve(labels.size());
      for (const auto &l : labels)
        sig.push_back(l[h.position(y)]);
      return sig;
    };
    const Subgroup &norm = lat->class_normalizer(c);
    std::map<std::vector<std::int32_t>, Elem> seen;
    for (Elem y : h.elements()) {
      std::vector<std::int32_t> best = signature(y);
      for (Elem n : norm.elements())
        best = std::min(best, signature(g->conj(n, y)));
      if (seen.emplace(best, y).second)
        out.push_back({g, f, idx, y});
    }
  }
  return out;
}

struct SpeciesReport {
  std::string group;
  std::string functor;
  std::size_t species = 0;
  std::size_t rank = 0;
  bool multiplicative = true;
  bool unital = true;
  bool distinct = true;
  bool conjugation_invariant = true;
  std::size_t matrix_rank = 0;
  std::vector<std::string> failures;

  bool nonsingular() const { return matrix_rank == rank; }
  bool passed() const {
    return multiplicative && unital && distinct && conjugation_invariant && species == rank && nonsingular();
  }
};

/// The evaluation matrix: rows are species, columns the canonical basis.
inline std::vector<std::vector<Cyclotomic>> species_table(const std::vector<SpeciesDescriptor> &sp,
                                                          const GroupPtr &g, const FunctorPtr &f) {
  std::vector<GhostElement> marks;
  for (const auto &k : plus_basis(g, *f))
    marks.push_back(mark(plus_generator(g, f, k)));
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto &s : sp) {
    std::vector<Cyclotomic> row;
    for (const auto &m : marks)
      row.push_back(evaluate_at(*f, m, s.subgroup, s.element));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline SpeciesReport check_species_theorem(const GroupPtr &g, const FunctorPtr &f, std::uint64_t seed = 1) {
  SpeciesReport rep;
  rep.group = g->name();
  rep.functor = f->name();
  const std::vector<PlusKey> basis = plus_basis(g, *f);
  const std::vector<SpeciesDescriptor> sp = enumerate_species(g, f);
  rep.species = sp.size();
  rep.rank = basis.size();

  std::vector<PlusElement> gens;
  for (const auto &k : basis)
    gens.push_back(plus_generator(g, f, k));
  std::vector<GhostElement> marks;
  for (const auto &x : gens)
    marks.push_back(mark(x));

  auto table = species_table(sp, g, f);
  const PlusElement one = plus_unit(g, f);
  const GhostElement mone = mark(one);
  const SubgroupLattice &lat = *lattice_of(g);
  std::mt19937_64 rng(seed);

  for (std::size_t si = 0; si < sp.size(); ++si) {
    const auto &s = sp[si];
    if (!(evaluate_at(*f, mone, s.subgroup, s.element) == Cyclotomic(f->conductor(), 1))) {
      rep.unital = false;
      rep.failures.push_back("species " + s.to_string() + " is not unital");
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i; j < gens.size(); ++j) {
        Cyclotomic prod = evaluate_at(*f, mark(plus_mult(gens[i], gens[j])), s.subgroup, s.element);
        if (!(prod == table[si][i] * table[si][j])) {
          rep.multiplicative = false;
          if (rep.failures.size() < 16)
            rep.failures.push_back("species " + s.to_string() + " not multiplicative on a generator pair");
        }
      }
    // the conjugate pair (^xH, ^xτ) gives the same function
    for (int t = 0; t < 3; ++t) {
      Elem x = static_cast<Elem>(rng() % g->order());
      const Subgroup hx = lat.subgroup(s.subgroup).conjugate(x);
      const std::size_t ix = lat.index_of(hx);
      std::optional<Elem> ex;
      if (s.element)
        ex = g->conj(x, *s.element);
      for (std::size_t i = 0; i < marks.size(); ++i)
        if (!(evaluate_at(*f, marks[i], ix, ex) == table[si][i])) {
          rep.conjugation_invariant = false;
          rep.failures.push_back("species " + s.to_string() + " changes under conjugation");
          break;
        }
    }
  }
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = a + 1; b < table.size(); ++b)
      if (table[a] == table[b]) {
        rep.distinct = false;
        rep.failures.push_back("species " + sp[a].to_string() + " and " + sp[b].to_string() + " coincide");
      }
  rep.matrix_rank = cyclotomic_rank(table);
  if (rep.species != rep.rank)
    rep.failures.push_back(std::to_string(rep.species) + " species for rank " + std::to_string(rep.rank));
  if (!rep.nonsingular())
    rep.failures.push_back("evaluation matrix is singular");
  return rep;
}

} // namespace bisetplus

#endif
