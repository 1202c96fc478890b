#include <bisetplus/verify.hpp>
#include <gtest/gtest.h>

using namespace bisetplus;

TEST(Cyclotomic, Relations) {
  const Cyclotomic z4 = Cyclotomic::root_of_unity(1, 4);
  EXPECT_EQ(z4 * z4, Cyclotomic(4, -1));
  const Cyclotomic z6 = Cyclotomic::root_of_unity(1, 6);
  EXPECT_TRUE((z6 * z6 - z6 + Cyclotomic(6, 1)).is_zero());
  for (int p : {2, 3, 5, 7, 11, 13}) {
    Cyclotomic sum(p);
    for (int k = 0; k < p; ++k)
      sum += Cyclotomic::root_of_unity(k, p);
    EXPECT_TRUE(sum.is_zero()) << p;
  }
  EXPECT_EQ(Cyclotomic::root_of_unity(5, 5), Cyclotomic(5, 1));
  EXPECT_EQ(Cyclotomic::root_of_unity(-1, 3) * Cyclotomic::root_of_unity(1, 3), Cyclotomic(3, 1));
}

TEST(Cyclotomic, InverseAndEmbedding) {
  const Cyclotomic a = Cyclotomic(12, 2) + Cyclotomic::root_of_unity(5, 12);
  EXPECT_EQ(a * a.inverse(), Cyclotomic(12, 1));
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 3).embed(6), Cyclotomic::root_of_unity(2, 6));
  EXPECT_THROW(Cyclotomic::root_of_unity(1, 4).embed(6), Error);
  EXPECT_THROW(Cyclotomic(25), Error);
}

TEST(Species, Counts) {
  EXPECT_EQ(enumerate_species(preset_group("S3"), constant_functor()).size(), 4u);
  EXPECT_EQ(enumerate_species(preset_group("trivial"), constant_functor()).size(), 1u);
  EXPECT_EQ(enumerate_species(preset_group("C2"), fibered_functor(2)).size(), 3u);
}

TEST(Species, ConstantValuesAreMarks) {
  GroupPtr s3 = preset_group("S3");
  FunctorPtr f = constant_functor();
  const auto sp = enumerate_species(s3, f);
  const auto table = species_table(sp, s3, f);
  const auto marks = table_of_marks(s3);
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < marks.size(); ++j)
      EXPECT_EQ(table[i][j], Cyclotomic(1, marks[j][i]));
  // σ_(C2) on [C2] is 1
  EXPECT_EQ(table[1][1], Cyclotomic(1, 1));
  for (const auto &s : sp)
    EXPECT_EQ(evaluate_species(s, plus_unit(s3, f)), Cyclotomic(1, 1));
}

TEST(Species, NormalizerIndexOnOwnSubgroup) {
  for (const char *name : {"S3", "D8", "A4"})
    for (FunctorPtr f : {constant_functor(), fibered_functor(2), fibered_functor(3)}) {
      GroupPtr g = preset_group(name);
      const SubgroupLattice &lat = *lattice_of(g);
      for (const auto &s : enumerate_species(g, f)) {
        const Subgroup &h = lat.subgroup(s.subgroup);
        const std::size_t cls = lat.class_of(s.subgroup);
        PlusElement x = plus_generator(g, f, h, f->value_one(h));
        const long long index = static_cast<long long>(lat.class_normalizer(cls).order() / h.order());
        EXPECT_EQ(evaluate_species(s, x), Cyclotomic(f->conductor(), index)) << name << " " << s.to_string();
      }
    }
}

TEST(Species, TheoremOnSmallGroups) {
  const std::vector<std::pair<const char *, std::size_t>> expected_const = {
      {"trivial", 1}, {"C2", 2}, {"S3", 4}, {"D8", 8}, {"A4", 5}, {"S4", 11}};
  for (const auto &[name, rank] : expected_const) {
    SpeciesReport rep = check_species_theorem(preset_group(name), constant_functor());
    EXPECT_TRUE(rep.passed()) << name;
    EXPECT_EQ(rep.rank, rank) << name;
  }
  SpeciesReport c2 = check_species_theorem(preset_group("C2"), fibered_functor(2));
  EXPECT_TRUE(c2.passed());
  EXPECT_EQ(c2.species, 3u);
  for (const char *name : {"C4", "S3", "Q8", "D12"})
    for (int n : {2, 3, 4}) {
      SpeciesReport rep = check_species_theorem(preset_group(name), fibered_functor(n));
      EXPECT_TRUE(rep.passed()) << name << " fibered:" << n << " "
                                << (rep.failures.empty() ? "" : rep.failures.front());
    }
}

TEST(Species, RejectsMismatchedElements) {
  GroupPtr s3 = preset_group("S3");
  const auto sp = enumerate_species(s3, constant_functor());
  EXPECT_THROW(evaluate_species(sp.front(), plus_unit(preset_group("C3"), constant_functor())), Error);
  EXPECT_THROW(evaluate_species(sp.front(), plus_unit(s3, fibered_functor(2))), Error);
}
