#include <bisetplus/verify.hpp>
#include <gtest/gtest.h>

#include <bisetplus/io.hpp>

using namespace bisetplus;

namespace {

Subgroup subgroup_of_order(const GroupPtr &g, std::size_t order) {
  for (const auto &s : lattice_of(g)->subgroups())
    if (s.order() == order)
      return s;
  throw Error("no subgroup of that order");
}

BisetElement oracle_compose(const BisetElement &a, const BisetElement &b) {
  BisetElement out(a.left(), b.right());
  for (const auto &[ka, ca] : a.terms())
    for (const auto &[kb, cb] : b.terms())
      out += (ca * cb) * tensor_oracle(realize(a.subgroup(ka)), realize(b.subgroup(kb)));
  return out;
}

} // namespace

TEST(StandardBasis, ClassCounts) {
  GroupPtr one = preset_group("trivial"), c2 = preset_group("C2"), s3 = preset_group("S3");
  EXPECT_EQ(standard_basis(c2, c2).size(), 5u);
  EXPECT_EQ(standard_basis(s3, one).size(), 4u);
  EXPECT_EQ(standard_basis(one, one).size(), 1u);
  EXPECT_EQ(standard_basis(s3, one).size(), lattice_of(s3)->class_count());
}

TEST(Mackey, RestrictionAfterInductionInS3) {
  GroupPtr s3 = preset_group("S3");
  BisetElement ind = induction(subgroup_of_order(s3, 3), "C3").element;
  BisetElement res = restriction(subgroup_of_order(s3, 2), "C2").element;
  BisetElement u = mackey_compose(res, ind);
  ASSERT_EQ(u.size(), 1u);
  const ProductSubgroup d = u.subgroup(u.terms().begin()->first);
  EXPECT_EQ(d.order(), 1u);
  EXPECT_EQ(u.terms().begin()->second, 1);
  EXPECT_EQ(u, oracle_compose(res, ind));
}

TEST(Mackey, InductionAfterRestrictionOfTrivial) {
  GroupPtr c2 = preset_group("C2");
  Subgroup one = Subgroup::trivial(c2);
  BisetElement ind = induction(one).element;
  BisetElement res = restriction(one).element;
  BisetElement u = mackey_compose(ind, res);
  EXPECT_EQ(u.size(), 1u);
  EXPECT_EQ(u.terms().begin()->first.size(), 1u);

  BisetElement v = mackey_compose(induction(Subgroup::full(c2)).element, restriction(Subgroup::full(c2)).element);
  EXPECT_EQ(v.size(), 1u);
}

TEST(Mackey, ResIndOfTrivialInC2IsDiagonalPlusFree) {
  GroupPtr c2 = preset_group("C2");
  Subgroup one = Subgroup::trivial(c2);
  // res^{C2}_1 ∘ ind^{C2}_1 ∈ B(1, 1) is [1×1/1] with coefficient |C2| = 2
  BisetElement u = mackey_compose(restriction(one).element, induction(one).element);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u.terms().begin()->second, 2);

  BisetElement w = mackey_compose(induction(one).element, restriction(one).element);
  EXPECT_EQ(w, oracle_compose(induction(one).element, restriction(one).element));
}

TEST(Mackey, ResIndForC2InsideC2xC2) {
  GroupPtr v4 = preset_group("V4");
  Subgroup c = subgroup_of_order(v4, 2);
  BisetElement u = mackey_compose(restriction(c, "C2").element, induction(c, "C2").element);
  // V4 = C ⊔ xC and both double cosets give the diagonal class
  EXPECT_EQ(u.size(), 1u);
  EXPECT_EQ(u.terms().begin()->second, 2);

  GroupPtr s3 = preset_group("S3");
  Subgroup t = subgroup_of_order(s3, 2);
  BisetElement r = mackey_compose(restriction(t, "C2").element, induction(t, "C2").element);
  ASSERT_EQ(r.size(), 2u);
  std::vector<std::size_t> orders;
  for (const auto &[k, coeff] : r.terms()) {
    orders.push_back(k.size());
    EXPECT_EQ(coeff, 1);
  }
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2}));
}

TEST(Elementary, InflationAndDeflationKernels) {
  GroupPtr c4 = preset_group("C4");
  Subgroup n = subgroup_of_order(c4, 2);
  BisetElement inf = inflation(n).element, def = deflation(n).element;
  ProductSubgroup di = inf.subgroup(inf.terms().begin()->first);
  ProductSubgroup dd = def.subgroup(def.terms().begin()->first);
  EXPECT_EQ(di.k1().order(), 2u);
  EXPECT_EQ(di.k2().order(), 1u);
  EXPECT_EQ(dd.k1().order(), 1u);
  EXPECT_EQ(dd.k2().order(), 2u);
  EXPECT_TRUE(di.p1().is_full());
  EXPECT_TRUE(dd.p2().is_full());
}

TEST(Elementary, DeflationAfterInflationIsIdentity) {
  GroupPtr d8 = preset_group("D8");
  for (const auto &n : lattice_of(d8)->subgroups()) {
    if (!n.is_normal_in(Subgroup::full(d8)))
      continue;
    Elementary inf = inflation(n), def = deflation(n);
    EXPECT_EQ(mackey_compose(def.element, inf.element), identity_biset(def.quotient->group));
  }
}

TEST(Elementary, IdentityIsNeutral) {
  GroupPtr s3 = preset_group("S3"), c2 = preset_group("C2");
  for (const auto &d : standard_basis(s3, c2)) {
    BisetElement u = BisetElement::standard(d);
    EXPECT_EQ(mackey_compose(identity_biset(s3), u), u);
    EXPECT_EQ(mackey_compose(u, identity_biset(c2)), u);
  }
}

TEST(Elementary, IsogationRejectsNonBijections) {
  GroupPtr c2 = preset_group("C2"), c4 = preset_group("C4");
  GroupHom trivial = GroupHom::from_images(c2, c4, {0, 0}, GroupHom::Kind::general);
  EXPECT_THROW(isogation(trivial), Error);
}

TEST(Decomposition, DiagonalOfC3) {
  GroupPtr c3 = preset_group("C3");
  ProductSubgroup d = ProductSubgroup::diagonal(c3);
  Decomposition dec = decompose_standard(d);
  EXPECT_EQ(dec.ind.sub.order(), 3u);
  EXPECT_EQ(dec.res.sub.order(), 3u);
  EXPECT_EQ(dec.inf.sub.order(), 1u);
  EXPECT_EQ(dec.def.sub.order(), 1u);
  EXPECT_EQ(dec.recompose(), BisetElement::standard(d));
}

TEST(Decomposition, RecomposesEveryClassForSmallPairs) {
  const std::vector<std::string> names = {"trivial", "C2", "C3", "C4", "V4", "S3"};
  for (const auto &a : names)
    for (const auto &b : names) {
      GroupPtr g = preset_group(a), h = preset_group(b);
      for (const auto &d : standard_basis(g, h))
        ASSERT_EQ(decompose_standard(d).recompose(), BisetElement::standard(d)) << a << " x " << b;
    }
}

TEST(Mackey, AgreesWithTensorOracleOnSmallTriples) {
  const std::vector<std::string> names = {"trivial", "C2", "C3", "C4", "V4"};
  std::size_t checked = 0;
  for (const auto &a : names)
    for (const auto &b : names)
      for (const auto &c : names) {
        GroupPtr g = preset_group(a), h = preset_group(b), k = preset_group(c);
        for (const auto &d : standard_basis(g, h))
          for (const auto &e : standard_basis(h, k)) {
            BisetElement x = BisetElement::standard(d), y = BisetElement::standard(e);
            ASSERT_EQ(mackey_compose(x, y), oracle_compose(x, y)) << a << "," << b << "," << c;
            ++checked;
          }
      }
  EXPECT_GT(checked, 1000u);
}

TEST(Mackey, AgreesWithTensorOracleThroughS3) {
  const std::vector<std::string> names = {"C2", "C3", "S3"};
  for (const auto &a : names)
    for (const auto &c : names) {
      GroupPtr g = preset_group(a), h = preset_group("S3"), k = preset_group(c);
      const auto left = standard_basis(g, h), right = standard_basis(h, k);
      for (std::size_t i = 0; i < left.size(); i += 2)
        for (std::size_t j = 0; j < right.size(); j += 3) {
          BisetElement x = BisetElement::standard(left[i]), y = BisetElement::standard(right[j]);
          ASSERT_EQ(mackey_compose(x, y), oracle_compose(x, y)) << a << ",S3," << c;
        }
    }
}

TEST(ConcreteBiset, RealizedSizes) {
  GroupPtr s3 = preset_group("S3"), c2 = preset_group("C2");
  for (const auto &d : standard_basis(s3, c2)) {
    ConcreteBiset u = realize(d);
    EXPECT_EQ(u.points * d.order(), s3->order() * c2->order());
    EXPECT_TRUE(u.is_consistent());
    EXPECT_EQ(canonical_conjugate(u.stabilizer(0)), canonical_conjugate(d));
  }
}

TEST(DoubleCosets, InS3) {
  GroupPtr s3 = preset_group("S3");
  Subgroup c2 = subgroup_of_order(s3, 2), c3 = subgroup_of_order(s3, 3);
  EXPECT_EQ(double_cosets(c2, c3).size(), 1u);
  EXPECT_EQ(double_cosets(c2, c2).size(), 2u);
}

TEST(BisetJson, RoundTrip) {
  GroupPtr s3 = preset_group("S3"), c2 = preset_group("C2");
  BisetElement u(s3, c2);
  const auto basis = standard_basis(s3, c2);
  for (std::size_t i = 0; i < basis.size(); ++i)
    u.add(basis[i], static_cast<long long>(i) - 2);
  EXPECT_EQ(biset_from_json(json::parse(to_json(u).dump())), u);
}

TEST(BisetSpec, ParsesCommandLineForms) {
  BisetElement res = parse_biset("res:S3>C2");
  EXPECT_EQ(res.left()->order(), 2u);
  EXPECT_EQ(res.right()->order(), 6u);
  BisetElement def = parse_biset("def:C4/C2");
  EXPECT_EQ(def.left()->order(), 2u);
  EXPECT_THROW(parse_biset("inf:S3/C2"), Error);
  EXPECT_THROW(parse_biset("xyz:S3"), ParseError);
  EXPECT_THROW(parse_biset("std:C2xC2:99"), ParseError);
}
