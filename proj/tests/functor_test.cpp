#include <bisetplus/verify.hpp>
#include <gtest/gtest.h>

using namespace bisetplus;

namespace {

/// Counts maps G → ℤ/n with f(xy) = f(x) + f(y) by brute force over all
/// assignments on a generating set.
std::size_t count_homs(const GroupPtr &g, int n) {
  const std::vector<Elem> gens = g->generator_indices();
  std::size_t found = 0;
  std::vector<int> images(gens.size(), 0);
  while (true) {
    // spread the generator values along a breadth-first walk
    std::vector<int> value(g->order(), -1);
    value[Group::identity()] = 0;
    std::vector<Elem> queue{Group::identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = g->mul(queue[i], gens[j]);
        int v = (value[queue[i]] + images[j]) % n;
        if (value[y] < 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          ok = false;
          break;
        }
      }
    if (ok)
      for (Elem a = 0; a < g->order() && ok; ++a)
        for (Elem b = 0; b < g->order(); ++b)
          if (value[g->mul(a, b)] != (value[a] + value[b]) % n) {
            ok = false;
            break;
          }
    found += ok;
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == n)
      images[i++] = 0;
    if (i == images.size())
      break;
  }
  return found;
}

Subgroup order_two_subgroup(const GroupPtr &g) {
  for (const auto &s : lattice_of(g)->subgroups())
    if (s.order() == 2)
      return s;
  throw Error("no subgroup of order 2");
}

} // namespace

TEST(Abelianization, InvariantFactors) {
  EXPECT_EQ(abelianization(preset_group("S3")).invariant_factors, (std::vector<std::size_t>{2}));
  EXPECT_EQ(abelianization(preset_group("C6")).invariant_factors, (std::vector<std::size_t>{6}));
  EXPECT_EQ(abelianization(preset_group("Q8")).invariant_factors, (std::vector<std::size_t>{2, 2}));
}

TEST(HomGroup, SpecExamples) {
  EXPECT_EQ(hom_group(preset_group("S3"), 2).size(), 2u);
  EXPECT_EQ(hom_group(preset_group("C3"), 2).size(), 1u);
  for (int n : {1, 2, 5, 12})
    EXPECT_EQ(hom_group(preset_group("trivial"), n).size(), 1u);
}

TEST(HomGroup, CountsMatchBruteForce) {
  for (const char *name : {"C2", "C4", "V4", "C6", "S3", "D8", "Q8", "A4", "D12"})
    for (int n : {2, 3, 4, 6}) {
      GroupPtr g = preset_group(name);
      const auto homs = hom_group(g, n);
      EXPECT_EQ(homs.size(), count_homs(g, n)) << name << " n=" << n;
      EXPECT_TRUE(std::is_sorted(homs.begin(), homs.end()));
      for (std::int32_t v : homs.front())
        EXPECT_EQ(v, 0);
    }
}

TEST(FunctorNames, Parse) {
  EXPECT_EQ(functor_from_string("const")->conductor(), 1);
  EXPECT_EQ(functor_from_string("fibered:6")->name(), "fibered:6");
  EXPECT_THROW(functor_from_string("fibered:0"), ParseError);
  EXPECT_THROW(functor_from_string("fibered:25"), ParseError);
  EXPECT_THROW(functor_from_string("fibered:x"), ParseError);
  EXPECT_THROW(functor_from_string("burnside"), ParseError);
}

TEST(ConstantFunctor, EveryStructureMapIsIdentity) {
  FunctorPtr f = constant_functor();
  GroupPtr c4 = preset_group("C4");
  Subgroup n = order_two_subgroup(c4);
  const FunctorElement one{Subgroup::full(c4), {{Label{}, 1}}};
  Elementary def = deflation(n);
  FunctorElement down = act_biset(*f, def.element, one);
  EXPECT_EQ(down.coeffs, (std::map<Label, long long>{{Label{}, 1}}));
  Elementary res = restriction(n);
  EXPECT_EQ(act_biset(*f, res.element, one).coeffs, (std::map<Label, long long>{{Label{}, 1}}));
  EXPECT_EQ(f->value_mult(n, {}, {}), (LabelComb{{Label{}, 1}}));
}

TEST(ConstantFunctor, RejectsClassesOutsideP1) {
  FunctorPtr f = constant_functor();
  GroupPtr s3 = preset_group("S3");
  Elementary ind = induction(order_two_subgroup(s3));
  const FunctorElement one{Subgroup::full(ind.sub_group), {{Label{}, 1}}};
  EXPECT_THROW(act_biset(*f, ind.element, one), Error);
}

TEST(FiberedFunctor, RestrictionIsRestrictionOfValues) {
  FunctorPtr f = fibered_functor(2);
  GroupPtr s3 = preset_group("S3");
  Subgroup full = Subgroup::full(s3), c2 = order_two_subgroup(s3);
  for (const auto &phi : f->basis(full)) {
    Label expected(c2.order());
    for (std::size_t i = 0; i < c2.order(); ++i)
      expected[i] = phi[full.position(c2.elements()[i])];
    EXPECT_EQ(f->restrict(full, c2, phi), (LabelComb{{expected, 1}}));
  }
}

TEST(FiberedFunctor, DeflationKillsCharactersNontrivialOnTheKernel) {
  FunctorPtr f = fibered_functor(2);
  GroupPtr c4 = preset_group("C4");
  Subgroup full = Subgroup::full(c4), n = order_two_subgroup(c4);
  Elementary def = deflation(n);
  for (const auto &phi : f->basis(full)) {
    const FunctorElement x{full, {{phi, 1}}};
    const FunctorElement y = act_biset(*f, def.element, x);
    const bool trivial_on_n = phi[full.position(n.elements()[1])] == 0;
    EXPECT_EQ(y.is_zero(), !trivial_on_n);
  }
  // over ℤ/4 exactly the two characters of odd degree are nontrivial on C2
  FunctorPtr f4 = fibered_functor(4);
  std::size_t killed = 0;
  for (const auto &phi : f4->basis(full))
    killed += act_biset(*f4, def.element, FunctorElement{full, {{phi, 1}}}).is_zero();
  EXPECT_EQ(killed, 2u);
}

TEST(FiberedFunctor, InflationComposesWithProjection) {
  FunctorPtr f = fibered_functor(2);
  GroupPtr c4 = preset_group("C4");
  Subgroup n = order_two_subgroup(c4);
  Elementary inf = inflation(n);
  const Quotient &q = *inf.quotient;
  Subgroup qfull = Subgroup::full(q.group), full = Subgroup::full(c4);
  for (const auto &phibar : f->basis(qfull)) {
    FunctorElement y = act_biset(*f, inf.element, FunctorElement{qfull, {{phibar, 1}}});
    ASSERT_EQ(y.coeffs.size(), 1u);
    const Label &phi = y.coeffs.begin()->first;
    for (Elem x = 0; x < c4->order(); ++x)
      EXPECT_EQ(phi[full.position(x)], phibar[q.projection(x)]);
  }
}

TEST(FiberedFunctor, PointwiseProductAndUnit) {
  FunctorPtr f = fibered_functor(2);
  GroupPtr c2 = preset_group("C2");
  Subgroup full = Subgroup::full(c2);
  const auto basis = f->basis(full);
  ASSERT_EQ(basis.size(), 2u);
  const Label &sgn = basis[1];
  EXPECT_EQ(f->value_mult(full, sgn, sgn), (LabelComb{{f->value_one(full), 1}}));
  EXPECT_EQ(f->value_mult(full, sgn, f->value_one(full)), (LabelComb{{sgn, 1}}));
}

TEST(FunctorLaws, ConstantAndFiberedPass) {
  const std::vector<GroupPtr> groups = {preset_group("trivial"), preset_group("C2"), preset_group("C3"),
                                        preset_group("S3")};
  for (FunctorPtr f : {constant_functor(), fibered_functor(2), fibered_functor(3)}) {
    LawReport rep = check_functor_laws(*f, groups);
    EXPECT_TRUE(rep.passed()) << f->name() << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_GT(rep.cases, 0u);
  }
}

TEST(FunctorLaws, CorruptedActionIsCaught) {
  const std::vector<GroupPtr> groups = {preset_group("trivial"), preset_group("C2"), preset_group("C3"),
                                        preset_group("S3")};
  CorruptedFunctor bad(constant_functor());
  LawReport rep = check_functor_laws(bad, groups);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.failures.empty());
}
