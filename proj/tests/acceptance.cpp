// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <bisetplus/io.hpp>
#include <bisetplus/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace bisetplus;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << " s";
  return os.str();
}

std::string first_failure(const SuiteReport &r) {
  if (!r.failures.empty())
    return "; first: " + r.failures.front().what;
  for (const auto &p : r.pins)
    if (!p.confirmed)
      return "; pin not observed: " + p.name;
  return "";
}

const std::vector<GroupPtr> &suite() {
  static const std::vector<GroupPtr> groups = parse_group_list("suite");
  return groups;
}

// 1
Outcome mackey_vs_oracle() {
  const auto t0 = Clock::now();
  std::size_t cases = 0, bad = 0;
  for (const auto &g : suite())
    for (const auto &h : suite()) {
      if (g->order() * h->order() > 144)
        continue;
      const auto gh = standard_basis(g, h), hg = standard_basis(h, g);
      std::vector<ConcreteBiset> rg, rh;
      for (const auto &d : gh)
        rg.push_back(realize(d));
      for (const auto &e : hg)
        rh.push_back(realize(e));
      for (std::size_t a = 0; a < gh.size(); ++a)
        for (std::size_t b = 0; b < hg.size(); ++b) {
          ++cases;
          if (!(mackey_compose(BisetElement::standard(gh[a]), BisetElement::standard(hg[b])) ==
                tensor_oracle(rg[a], rh[b])))
            ++bad;
        }
    }
  const double s = since(t0);
  return {bad == 0 && s < 60.0,
          std::to_string(cases) + " compositions, " + std::to_string(bad) + " mismatches, " + fmt_seconds(s)};
}

// 2
Outcome decomposition() {
  std::size_t cases = 0, bad = 0;
  for (const auto &g : suite())
    for (const auto &h : suite()) {
      if (g->order() * h->order() > 144)
        continue;
      for (const auto &d : standard_basis(g, h)) {
        ++cases;
        if (!(decompose_standard(d).recompose() == BisetElement::standard(d)))
          ++bad;
      }
    }
  return {bad == 0, std::to_string(cases) + " classes, " + std::to_string(bad) + " not recomposed"};
}

// 3
Outcome axioms() {
  SuiteReport r = run_suite("axioms", constant_functor(), suite());
  return {r.passed(), std::to_string(r.cases) + " cases, " + std::to_string(r.failure_count) + " failures, " +
                          fmt_seconds(r.seconds) + first_failure(r)};
}

// 4 and 5
std::vector<FunctorialityReports> functoriality() {
  SuiteOptions opt;
  opt.samples = 500;
  return check_functoriality(suite(), {constant_functor(), fibered_functor(2)}, opt);
}

Outcome functoriality_outcome(const std::vector<FunctorialityReports> &all, bool plus) {
  Outcome o{true, {}};
  for (const auto &fr : all) {
    const SuiteReport &r = plus ? fr.plus : fr.ghost;
    o.pass = o.pass && r.passed();
    o.detail += (o.detail.empty() ? "" : "; ") + r.functor + ": " + std::to_string(r.cases) + " cases, " +
                std::to_string(r.failure_count) + " failures" + first_failure(r);
  }
  return o;
}

// 6
Outcome marks() {
  const std::vector<std::vector<long long>> s3 = {{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
  const bool s3_ok = table_of_marks(preset_group("S3")) == s3;
  GroupPtr s4 = preset_group("S4");
  const SubgroupLattice &lat = *lattice_of(s4);
  std::vector<std::vector<long long>> oracle_table(lat.class_count());
  for (std::size_t i = 0; i < lat.class_count(); ++i)
    for (std::size_t c = 0; c < lat.class_count(); ++c)
      oracle_table[i].push_back(oracle::fixed_points(*s4, oracle::as_perm_set(lat.rep_subgroup(i)),
                                                     oracle::as_perm_set(lat.rep_subgroup(c))));
  const auto table = table_of_marks(s4);
  const bool s4_ok = table == oracle_table && table.size() == 11;
  return {s3_ok && s4_ok, std::string("S3 rows ") + (s3_ok ? "match" : "differ") + ", S4 " +
                              std::to_string(table.size()) + "x" + std::to_string(table.size()) + " " +
                              (s4_ok ? "matches" : "differs from") + " the fixed-point counts"};
}

// 7
Outcome mobius() {
  const auto t0 = Clock::now();
  std::size_t cases = 0, failures = 0;
  for (FunctorPtr f : {constant_functor(), fibered_functor(2)}) {
    SuiteReport r = run_suite("mobius", f, suite());
    cases += r.cases;
    failures += r.failure_count;
  }
  const double s = since(t0);
  return {failures == 0 && s < 120.0, std::to_string(cases) + " identity checks over Z and Q, " +
                                          std::to_string(failures) + " failures, " + fmt_seconds(s)};
}

// 8
Outcome green_and_naturality() {
  SuiteOptions opt;
  std::size_t cases = 0, failures = 0, pins = 0, confirmed = 0;
  std::string first;
  for (FunctorPtr f : {constant_functor(), fibered_functor(2)}) {
    SuiteReport g = run_suite("green", f, parse_group_list("S3,D8,A4"), opt);
    SuiteReport m = run_suite("mark", f, suite(), opt);
    for (const SuiteReport *r : {&g, &m}) {
      cases += r->cases;
      failures += r->failure_count;
      if (first.empty())
        first = first_failure(*r);
      for (const auto &p : r->pins) {
        ++pins;
        confirmed += p.confirmed;
      }
    }
  }
  const bool pass = failures == 0 && pins > 0 && confirmed == pins;
  return {pass, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, C4 deflation pin " +
                    std::to_string(confirmed) + "/" + std::to_string(pins) + " confirmed failing" + first};
}

// 9
Outcome burnside() {
  std::size_t products = 0, bad = 0;
  FunctorPtr f = constant_functor();
  for (const char *name : {"S3", "D8", "A4"}) {
    GroupPtr g = preset_group(name);
    const SubgroupLattice &lat = *lattice_of(g);
    // [H, ∗] ↦ [G/H] is a bijection of bases; the unit goes to [G/G]
    if (!(plus_unit(g, f) == plus_generator(g, f, Subgroup::full(g), Label{})))
      ++bad;
    for (std::size_t a = 0; a < lat.class_count(); ++a)
      for (std::size_t b = 0; b < lat.class_count(); ++b) {
        const Subgroup &h = lat.rep_subgroup(a), &k = lat.rep_subgroup(b);
        PlusElement expected(g, f);
        for (const auto &stab :
             oracle::product_orbit_stabilizers(*g, oracle::as_perm_set(h), oracle::as_perm_set(k)))
          expected.add(oracle::as_subgroup(g, stab), Label{}, 1);
        ++products;
        if (!(plus_mult(plus_generator(g, f, h, Label{}), plus_generator(g, f, k, Label{})) == expected))
          ++bad;
      }
  }
  return {bad == 0, std::to_string(products) + " basis products against G-set orbit counting, " +
                        std::to_string(bad) + " mismatches"};
}

// 10
Outcome species() {
  std::size_t groups = 0, failures = 0;
  std::string first;
  for (FunctorPtr f : {constant_functor(), fibered_functor(2)}) {
    SuiteReport r = run_suite("species", f, suite());
    groups += r.cases;
    failures += r.failure_count;
    if (first.empty())
      first = first_failure(r);
  }
  const SpeciesReport s4 = check_species_theorem(preset_group("S4"), constant_functor());
  const SpeciesReport c2 = check_species_theorem(preset_group("C2"), fibered_functor(2));
  const bool pins = s4.species == 11 && s4.rank == 11 && c2.species == 3 && c2.rank == 3;
  return {failures == 0 && pins && s4.passed() && c2.passed(),
          std::to_string(groups) + " cases, " + std::to_string(failures) + " failures, S4 const " +
              std::to_string(s4.species) + " species, C2 fibered:2 " + std::to_string(c2.species) + " species" +
              first};
}

// 11
Outcome adjunction() {
  SuiteOptions opt;
  opt.adjunction_samples = 100;
  std::vector<SuiteReport> reports;
  reports.push_back(adjunction_check(eta_psi(constant_functor()), suite(), opt, true));
  reports.push_back(adjunction_check(eta_psi(fibered_functor(2)), suite(), opt, true));
  reports.push_back(adjunction_check(burnside_psi(), suite(), opt, true));

  // φ([H, ∗]_G) = [G/H] literally, with [G/H] built as ind^G_H of the trivial H-set
  std::size_t literal = 0, bad = 0;
  FunctorPtr f = constant_functor();
  for (const char *name : {"S3", "D8", "A4", "S4"}) {
    GroupPtr g = preset_group(name);
    for (const auto &k : plus_basis(g, *f)) {
      ++literal;
      const Subgroup &h = lattice_of(g)->subgroup(k.subgroup);
      Elementary ind = induction(h);
      const PlusElement gh = plus_act(ind.element, plus_unit(ind.sub_group, f));
      if (!(adjunction_phi(burnside_psi(), plus_generator(g, f, k)) == gh))
        ++bad;
    }
  }
  bool pass = bad == 0 && reports[1].cases > 0;
  std::string detail;
  for (const auto &r : reports) {
    pass = pass && r.passed();
    detail += r.functor + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failure_count) +
              " failures" + first_failure(r) + "; ";
  }
  return {pass, detail + std::to_string(literal) + " Burnside basis images checked, " + std::to_string(bad) +
                    " wrong"};
}

} // namespace

int main() {
  const auto t0 = Clock::now();
  int failed = 0;
  auto report = [&](int n, const char *name, const std::function<Outcome()> &run) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.detail << " ["
              << fmt_seconds(since(t)) << "]" << std::endl;
  };

  report(1, "Mackey formula vs tensor oracle", mackey_vs_oracle);
  report(2, "elementary decomposition", decomposition);
  report(3, "axioms and closure laws", axioms);
  std::vector<FunctorialityReports> fr;
  const auto tf = Clock::now();
  try {
    fr = functoriality();
  } catch (const std::exception &e) {
    std::cerr << "functoriality run threw: " << e.what() << "\n";
  }
  const std::string shared = "; shared run with 5 took " + fmt_seconds(since(tf));
  auto split = [&](bool plus) {
    if (fr.empty())
      return Outcome{false, "not run"};
    Outcome o = functoriality_outcome(fr, plus);
    o.detail += shared;
    return o;
  };
  report(4, "F_+ functoriality", [&] { return split(true); });
  report(5, "F^+ functoriality", [&] { return split(false); });
  report(6, "table of marks", marks);
  report(7, "Mobius identities", mobius);
  report(8, "mark multiplicativity and naturality", green_and_naturality);
  report(9, "Burnside ring identification", burnside);
  report(10, "species", species);
  report(11, "adjunction", adjunction);

  std::cout << (failed == 0 ? "all 11 criteria pass" : std::to_string(failed) + " of 11 criteria fail") << " in "
            << fmt_seconds(since(t0)) << std::endl;
  return failed == 0 ? 0 : 1;
}
