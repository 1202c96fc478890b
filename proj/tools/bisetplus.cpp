#include <bisetplus/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace bisetplus;

namespace {

bool json_like(const std::string &text) { return !text.empty() && (text[0] == '{' || text[0] == '@'); }

enum class Format { text, json, tsv };

Format parse_format(const std::string &s) {
  if (s == "text")
    return Format::text;
  if (s == "json")
    return Format::json;
  if (s == "tsv")
    return Format::tsv;
  throw ParseError("unknown format '" + s + "'");
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

std::string perm_list(const std::vector<Perm> &ps) {
  std::string s;
  for (const auto &p : ps)
    s += (s.empty() ? "" : " ") + p.to_string();
  return s.empty() ? "-" : s;
}

/// JSON / @file, otherwise a literal such as "2*[1:1] - [S3:1]".
PlusElement plus_operand(const GroupPtr &g, const FunctorPtr &f, const std::string &text) {
  if (json_like(text)) {
    PlusElement x = plus_from_json(*maybe_json(text));
    if (!same_group(x.group(), g) || x.functor()->name() != f->name())
      throw Error("plus element JSON does not match the requested group and functor");
    return x;
  }
  return parse_plus_literal(g, f, text);
}

/// JSON / @file, "unit", or a plus literal whose mark is taken.
GhostElement ghost_operand(const GroupPtr &g, const FunctorPtr &f, const std::string &text) {
  if (json_like(text)) {
    GhostElement y = ghost_from_json(*maybe_json(text));
    if (!same_group(y.group(), g) || y.functor()->name() != f->name())
      throw Error("ghost element JSON does not match the requested group and functor");
    return y;
  }
  if (text == "unit")
    return ghost_unit(g, f);
  return mark(parse_plus_literal(g, f, text));
}

json ghost_json_with_rows(const GhostElement &y) {
  json j = to_json(y);
  json rows = json::array();
  const auto &lat = y.lattice();
  for (std::size_t c = 0; c < y.size(); ++c)
    rows.push_back({{"subgroup", lat.class_rep(c)},
                    {"order", lat.rep_subgroup(c).order()},
                    {"value", render_component(lat.rep_subgroup(c), y.component(c))}});
  j["rows"] = rows;
  return j;
}

int cmd_group(const std::string &gs, Format fmt) {
  GroupPtr g = parse_group(gs);
  const SubgroupLattice &lat = *lattice_of(g);
  if (fmt == Format::json) {
    emit(lattice_to_json(lat));
    return 0;
  }
  std::cout << "group " << g->name() << "  order " << g->order() << "  degree " << g->degree() << "\n";
  std::cout << "generators " << perm_list(g->generators()) << "\n";
  std::cout << "subgroups " << lat.size() << "  classes " << lat.class_count() << "\n";
  std::cout << "index\torder\tclass\tgenerators\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::vector<Perm> gens;
    for (Elem e : lat.subgroup(i).generators())
      gens.push_back(g->element(e));
    std::cout << i << "\t" << lat.subgroup(i).order() << "\t" << lat.class_of(i) << "\t" << perm_list(gens)
              << "\n";
  }
  std::cout << "class\trep\tsize\t|N(H)|\n";
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    std::cout << c << "\t" << lat.class_rep(c) << "\t" << lat.class_members(c).size() << "\t"
              << lat.class_normalizer(c).order() << "\n";
  return 0;
}

BisetElement oracle_compose(const BisetElement &a, const BisetElement &b) {
  BisetElement out(a.left(), b.right());
  for (const auto &[ka, ca] : a.terms())
    for (const auto &[kb, cb] : b.terms())
      out += (ca * cb) * tensor_oracle(realize(a.subgroup(ka)), realize(b.subgroup(kb)));
  return out;
}

int cmd_compose(const std::string &ls, const std::string &rs, bool check, Format fmt) {
  BisetElement a = parse_biset(ls), b = parse_biset(rs);
  BisetElement c = mackey_compose(a, b);
  std::optional<bool> agrees;
  if (check)
    agrees = oracle_compose(a, b) == c;
  if (fmt == Format::json) {
    json j = to_json(c);
    j["classes"] = c.size();
    if (agrees)
      j["oracle_agrees"] = *agrees;
    emit(j);
  } else {
    std::cout << render(c) << "\n";
    std::cout << "classes: " << c.size() << "\n";
    if (agrees)
      std::cout << "oracle agrees: " << (*agrees ? "true" : "false") << "\n";
  }
  return agrees && !*agrees ? 1 : 0;
}

int cmd_decompose(const std::string &bs, Format fmt) {
  BisetElement u = parse_biset(bs);
  json out = json::array();
  for (const auto &[key, coeff] : u.terms()) {
    ProductSubgroup d = u.subgroup(key);
    Decomposition dec = decompose_standard(d);
    const bool ok = dec.recompose() == BisetElement::standard(d);
    const std::vector<const Elementary *> factors = {&dec.ind, &dec.inf, &dec.iso, &dec.def, &dec.res};
    if (fmt == Format::json) {
      json fs = json::array();
      for (const Elementary *e : factors)
        fs.push_back({{"kind", to_string(e->kind)}, {"biset", to_json(e->element)}});
      out.push_back({{"class", to_json(BisetElement::standard(d))},
                     {"coefficient", coeff},
                     {"factors", fs},
                     {"recomposes", ok}});
    } else {
      std::cout << "class " << describe(d) << " (coefficient " << coeff << ")\n";
      for (const Elementary *e : factors)
        std::cout << "  " << to_string(e->kind) << "\t" << e->element.left()->name() << " <- "
                  << e->element.right()->name() << "\t" << render(e->element) << "\n";
      std::cout << "  recomposes: " << (ok ? "true" : "false") << "\n";
    }
  }
  if (fmt == Format::json)
    emit({{"schema", kSchema}, {"type", "decomposition"}, {"terms", out}});
  return 0;
}

void show_plus(const PlusElement &x, Format fmt) {
  if (fmt == Format::json)
    emit(to_json(x));
  else
    std::cout << render(x) << "\n";
}

void show_ghost(const GhostElement &y, Format fmt) {
  if (fmt == Format::json)
    emit(ghost_json_with_rows(y));
  else
    std::cout << render(y);
}

int cmd_marks(const std::string &gs, Format fmt) {
  GroupPtr g = parse_group(gs);
  const auto table = table_of_marks(g);
  const SubgroupLattice &lat = *lattice_of(g);
  if (fmt == Format::json) {
    json cols = json::array();
    for (std::size_t c = 0; c < lat.class_count(); ++c)
      cols.push_back({{"subgroup", lat.class_rep(c)}, {"order", lat.rep_subgroup(c).order()}});
    emit({{"schema", kSchema}, {"type", "table-of-marks"}, {"group", group_to_json(*g)}, {"classes", cols},
          {"rows", table}});
    return 0;
  }
  if (fmt == Format::text) {
    std::cout << "G/K \\ H";
    for (std::size_t c = 0; c < lat.class_count(); ++c)
      std::cout << "\t" << subgroup_name(lat, lat.class_rep(c));
    std::cout << "\n";
  }
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (fmt == Format::text)
      std::cout << "G/" << subgroup_name(lat, lat.class_rep(r)) << "\t";
    for (std::size_t c = 0; c < table[r].size(); ++c)
      std::cout << (c ? "\t" : "") << table[r][c];
    std::cout << "\n";
  }
  return 0;
}

int cmd_unmark(const std::string &gs, const std::string &fs, const std::string &es, const std::string &scalars,
               Format fmt) {
  GroupPtr g = parse_group(gs);
  FunctorPtr f = functor_from_string(fs);
  GhostElement y = ghost_operand(g, f, es);
  if (scalars == "q") {
    auto x = Rational(1, static_cast<long long>(g->order())) * mobius_inverse(ghost_convert<Rational>(y));
    if (fmt == Format::json)
      emit(to_json(x));
    else
      std::cout << render(x) << "\n";
    return 0;
  }
  show_plus(mobius_inverse(y), fmt);
  return 0;
}

int cmd_species(const std::string &gs, const std::string &fs, Format fmt) {
  GroupPtr g = parse_group(gs);
  FunctorPtr f = functor_from_string(fs);
  const auto sp = enumerate_species(g, f);
  const auto table = species_table(sp, g, f);
  const auto basis = plus_basis(g, *f);
  std::vector<std::string> cols;
  for (const auto &k : basis)
    cols.push_back(render(plus_generator(g, f, k)));
  if (fmt == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < sp.size(); ++i) {
      json vals = json::array();
      for (const auto &v : table[i])
        vals.push_back(v.to_string());
      json r = {{"subgroup", sp[i].subgroup}, {"values", vals}};
      if (sp[i].element)
        r["element"] = perm_to_json(g->element(*sp[i].element));
      rows.push_back(r);
    }
    emit({{"schema", kSchema}, {"type", "species-table"}, {"group", group_to_json(*g)}, {"functor", f->name()},
          {"conductor", f->conductor()}, {"columns", cols}, {"rows", rows}});
    return 0;
  }
  std::cout << "conductor " << f->conductor() << " (z = exp(2 pi i/" << f->conductor() << "))\n";
  std::cout << "species";
  for (const auto &c : cols)
    std::cout << "\t" << c;
  std::cout << "\n";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    std::cout << sp[i].to_string();
    for (const auto &v : table[i])
      std::cout << "\t" << v.to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string &suite, const std::string &groups, const std::string &fs, std::uint64_t seed,
               const std::string &scalars, std::size_t samples, Format fmt) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.rational = scalars == "q";
  opt.samples = samples;
  SuiteReport rep = run_suite(suite, functor_from_string(fs), parse_group_list(groups), opt);
  if (fmt == Format::json)
    emit(rep.to_json());
  else
    std::cout << rep.to_text();
  return rep.passed() ? 0 : 1;
}

void error_out(const std::string &kind, const std::string &message) {
  json j = {{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Biset functors, plus constructions, marks and species"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));

  std::string group, functor = "const", left, right, biset, element, suite, groups = "preset:upto24",
                     scalars = "z";
  bool check = false;
  std::uint64_t seed = 1;
  std::size_t samples = 500;

  auto *g_cmd = app.add_subcommand("group", "subgroup lattice and classes");
  g_cmd->add_option("group", group, "preset name, JSON or @file")->required();

  auto *c_cmd = app.add_subcommand("compose", "Mackey composition of two bisets");
  c_cmd->add_option("--left", left, "biset spec")->required();
  c_cmd->add_option("--right", right, "biset spec")->required();
  c_cmd->add_flag("--check", check, "compare with the tensor product oracle");

  auto *d_cmd = app.add_subcommand("decompose", "elementary factors of each class");
  d_cmd->add_option("biset", biset, "biset spec")->required();

  auto *p_cmd = app.add_subcommand("plus", "arithmetic in F_+");
  p_cmd->require_subcommand(1);
  auto *p_mult = p_cmd->add_subcommand("mult", "product of two elements");
  p_mult->add_option("group", group)->required();
  p_mult->add_option("--left", left)->required();
  p_mult->add_option("--right", right)->required();
  p_mult->add_option("--functor", functor, "const or fibered:n");
  auto *p_act = p_cmd->add_subcommand("act", "F_+ of a biset applied to an element");
  p_act->add_option("--biset", biset)->required();
  p_act->add_option("--element", element)->required();
  p_act->add_option("--functor", functor, "const or fibered:n");
  auto *p_basis = p_cmd->add_subcommand("basis", "canonical basis");
  p_basis->add_option("group", group)->required();
  p_basis->add_option("--functor", functor, "const or fibered:n");

  auto *h_cmd = app.add_subcommand("ghost", "arithmetic in F^+");
  h_cmd->require_subcommand(1);
  auto *h_mark = h_cmd->add_subcommand("mark", "mark of a plus element");
  h_mark->add_option("group", group)->required();
  h_mark->add_option("--element", element)->required();
  h_mark->add_option("--functor", functor, "const or fibered:n");
  auto *h_mult = h_cmd->add_subcommand("mult", "componentwise product");
  h_mult->add_option("group", group)->required();
  h_mult->add_option("--left", left)->required();
  h_mult->add_option("--right", right)->required();
  h_mult->add_option("--functor", functor, "const or fibered:n");
  auto *h_act = h_cmd->add_subcommand("act", "F^+ of a right-free biset");
  h_act->add_option("--biset", biset)->required();
  h_act->add_option("--element", element)->required();
  h_act->add_option("--functor", functor, "const or fibered:n");

  auto *m_cmd = app.add_subcommand("marks", "table of marks (constant functor)");
  m_cmd->add_option("group", group)->required();

  auto *u_cmd = app.add_subcommand("unmark", "Mobius inverse of a ghost element");
  u_cmd->add_option("group", group)->required();
  u_cmd->add_option("--element", element, "ghost JSON, unit, or a plus literal")->required();
  u_cmd->add_option("--functor", functor, "const or fibered:n");
  u_cmd->add_option("--scalars", scalars, "z: n(y); q: n(y)/|G|")->check(CLI::IsMember({"z", "q"}));

  auto *s_cmd = app.add_subcommand("species", "species table");
  s_cmd->add_option("group", group)->required();
  s_cmd->add_option("--functor", functor, "const or fibered:n");

  auto *v_cmd = app.add_subcommand("verify", "run a property suite");
  v_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  v_cmd->add_option("--groups", groups, "preset:uptoN or a comma separated list");
  v_cmd->add_option("--functor", functor, "const or fibered:n");
  v_cmd->add_option("--seed", seed);
  v_cmd->add_option("--scalars", scalars)->check(CLI::IsMember({"z", "q"}));
  v_cmd->add_option("--samples", samples, "seeded cases per sampled check");

  for (auto *sub : {g_cmd, c_cmd, d_cmd, m_cmd, u_cmd, s_cmd, v_cmd, p_mult, p_act, p_basis, h_mark, h_mult, h_act})
    sub->add_option("--format", format, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    error_out("usage", e.what());
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (*g_cmd)
      return cmd_group(group, fmt);
    if (*c_cmd)
      return cmd_compose(left, right, check, fmt);
    if (*d_cmd)
      return cmd_decompose(biset, fmt);
    if (*m_cmd)
      return cmd_marks(group, fmt);
    if (*u_cmd)
      return cmd_unmark(group, functor, element, scalars, fmt);
    if (*s_cmd)
      return cmd_species(group, functor, fmt);
    if (*v_cmd)
      return cmd_verify(suite, groups, functor, seed, scalars, samples, fmt);

    const FunctorPtr f = functor_from_string(functor);
    if (*p_mult) {
      GroupPtr g = parse_group(group);
      show_plus(plus_mult(plus_operand(g, f, left), plus_operand(g, f, right)), fmt);
    } else if (*p_act) {
      BisetElement u = parse_biset(biset);
      show_plus(plus_act(u, plus_operand(u.right(), f, element)), fmt);
    } else if (*p_basis) {
      GroupPtr g = parse_group(group);
      for (const auto &k : plus_basis(g, *f))
        show_plus(plus_generator(g, f, k), fmt);
    } else if (*h_mark) {
      GroupPtr g = parse_group(group);
      show_ghost(mark(plus_operand(g, f, element)), fmt);
    } else if (*h_mult) {
      GroupPtr g = parse_group(group);
      show_ghost(ghost_mult(ghost_operand(g, f, left), ghost_operand(g, f, right)), fmt);
    } else if (*h_act) {
      BisetElement u = parse_biset(biset);
      show_ghost(ghost_act(u, ghost_operand(u.right(), f, element)), fmt);
    }
    return 0;
  } catch (const ParseError &e) {
    error_out("parse", e.what());
    return 2;
  } catch (const CapExceeded &e) {
    error_out("cap", e.what());
    return 1;
  } catch (const Error &e) {
    error_out("domain", e.what());
    return 1;
  } catch (const json::exception &e) {
    error_out("parse", e.what());
    return 2;
  }
}
