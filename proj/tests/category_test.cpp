#include <bisetplus/verify.hpp>
#include <gtest/gtest.h>

using namespace bisetplus;

namespace {

ConditionSet conditions(unsigned bits) { return ConditionSet(bits); }

ProductSubgroup inflation_subgroup(const GroupPtr &g, std::size_t n_order) {
  for (const auto &n : lattice_of(g)->subgroups())
    if (n.order() == n_order && n.is_normal_in(Subgroup::full(g))) {
      const BisetElement u = inflation(n).element;
      return u.subgroup(u.terms().begin()->first);
    }
  throw Error("no normal subgroup of that order");
}

std::vector<GroupPtr> small_groups() {
  return {preset_group("trivial"), preset_group("C2"), preset_group("C3"), preset_group("S3")};
}

} // namespace

TEST(Conditions, DiagonalSatisfiesEverything) {
  const CategorySpec all = CategorySpec::from_conditions(conditions(15));
  for (const char *name : {"C2", "S3", "Q8"})
    EXPECT_TRUE(s_member(all, ProductSubgroup::diagonal(preset_group(name)))) << name;
}

TEST(Conditions, InflationFailsOnlyK1) {
  ProductSubgroup d = inflation_subgroup(preset_group("C4"), 2);
  EXPECT_FALSE(s_member(CategorySpec::from_conditions(ConditionSet::parse({"k1"})), d));
  for (const char *c : {"k2", "p1", "p2"})
    EXPECT_TRUE(s_member(CategorySpec::from_conditions(ConditionSet::parse({c})), d)) << c;
}

TEST(Conditions, InductionFailsP1) {
  GroupPtr s3 = preset_group("S3");
  const BisetElement ind = induction(lattice_of(s3)->subgroup(1)).element;
  ProductSubgroup d = ind.subgroup(ind.terms().begin()->first);
  EXPECT_FALSE(s_member(CategorySpec::from_conditions(ConditionSet::parse({"p1"})), d));
  EXPECT_TRUE(s_member(CategorySpec::from_conditions(ConditionSet::parse({"p2", "k1", "k2"})), d));
}

TEST(Conditions, ParseRejectsUnknownNames) { EXPECT_THROW(ConditionSet::parse({"p3"}), ParseError); }

TEST(PlusCategory, AllSubgroupsWhenOnlyP1) {
  const CategorySpec spec = CategorySpec::from_conditions(ConditionSet::parse({"p1"}));
  GroupPtr s3 = preset_group("S3"), c2 = preset_group("C2");
  for (const auto &s : lattice_of(product_group(s3, c2))->subgroups())
    EXPECT_TRUE(s_plus_member(spec, ProductSubgroup::from_subgroup(s3, c2, s)));
}

TEST(PlusCategory, DeflationLeavesWhenK2Required) {
  const CategorySpec spec = CategorySpec::from_conditions(ConditionSet::parse({"p1", "k2"}));
  GroupPtr c4 = preset_group("C4");
  const BisetElement def = deflation(lattice_of(c4)->subgroup(1)).element;
  EXPECT_FALSE(s_plus_member(spec, def.subgroup(def.terms().begin()->first)));
}

TEST(PlusCategory, ContainsTheBaseCategory) {
  for (unsigned bits = 0; bits < 16; ++bits) {
    const CategorySpec spec = CategorySpec::from_conditions(conditions(bits));
    GroupPtr s3 = preset_group("S3"), c2 = preset_group("C2");
    for (const auto &d : standard_basis(s3, c2)) {
      if (!s_member(spec, d))
        continue;
      EXPECT_TRUE(s_plus_member(spec, d)) << describe(d);
      EXPECT_TRUE(s_upper_member(spec, d)) << describe(d);
    }
  }
}

TEST(UpperCategory, DropsProjectionConditions) {
  const CategorySpec spec = CategorySpec::from_conditions(conditions(15));
  const CategorySpec weaker = CategorySpec::from_conditions(ConditionSet::parse({"k1", "k2"}));
  GroupPtr s3 = preset_group("S3"), c3 = preset_group("C3");
  for (const auto &s : lattice_of(product_group(s3, c3))->subgroups()) {
    ProductSubgroup d = ProductSubgroup::from_subgroup(s3, c3, s);
    EXPECT_EQ(s_upper_member(spec, d), s_member(weaker, d)) << describe(d);
  }
}

TEST(UpperCategory, DiagonalsPassBothWays) {
  GroupPtr s3 = preset_group("S3");
  for (unsigned bits = 0; bits < 16; ++bits) {
    const CategorySpec spec = CategorySpec::from_conditions(conditions(bits));
    for (const auto &h : lattice_of(s3)->subgroups()) {
      EXPECT_TRUE(s_upper_member(spec, ProductSubgroup::diagonal(h)));
      const BisetElement res = restriction(h).element, ind = induction(h).element;
      EXPECT_TRUE(s_upper_member(spec, res.subgroup(res.terms().begin()->first)));
      EXPECT_TRUE(s_upper_member(spec, ind.subgroup(ind.terms().begin()->first)));
    }
  }
}

TEST(Axioms, OnlyP1FailsAxiomFive) {
  const AxiomReport rep = check_axioms(CategorySpec::from_conditions(ConditionSet::parse({"p1"})), small_groups());
  for (int i : {1, 2, 3, 4, 6, 7})
    EXPECT_TRUE(rep.passed(i)) << roman(i);
  EXPECT_FALSE(rep.passed(5));
  EXPECT_FALSE(rep.axiom(5).counterexamples.empty());
}

TEST(Axioms, EmptyConditionSetPassesEverything) {
  const AxiomReport rep = check_axioms(CategorySpec::from_conditions(conditions(0)), small_groups());
  for (int i = 1; i <= 7; ++i)
    EXPECT_TRUE(rep.passed(i)) << roman(i);
}

TEST(Axioms, KernelConditionsKeepFiveAndSix) {
  const AxiomReport rep =
      check_axioms(CategorySpec::from_conditions(ConditionSet::parse({"k1", "k2"})), small_groups());
  EXPECT_TRUE(rep.passed(5));
  EXPECT_TRUE(rep.passed(6));
}

TEST(Axioms, MatchPredictionForEveryConditionSet) {
  for (unsigned bits = 0; bits < 16; ++bits) {
    const ConditionSet c = conditions(bits);
    const auto predicted = predicted_axioms(c);
    const AxiomReport rep = check_axioms(CategorySpec::from_conditions(c), small_groups(), {1, 2, 4, 5, 6, 7});
    for (int i : {1, 2, 4, 5, 6, 7})
      EXPECT_EQ(rep.passed(i), predicted[i]) << c.to_string() << " axiom " << roman(i);
  }
}

TEST(Axioms, PlusAndUpperCategoriesSatisfyAll) {
  const CategorySpec base = CategorySpec::from_conditions(conditions(15));
  for (const CategorySpec &spec : {plus_spec(base), upper_spec(base)}) {
    const AxiomReport rep = check_axioms(spec, small_groups(), {1, 2, 4, 5, 6, 7});
    for (int i : {1, 2, 4, 7})
      EXPECT_TRUE(rep.passed(i)) << spec.name << " axiom " << roman(i);
  }
  const AxiomReport up = check_axioms(upper_spec(base), small_groups(), {5, 6});
  EXPECT_TRUE(up.passed(5));
  EXPECT_TRUE(up.passed(6));
}
