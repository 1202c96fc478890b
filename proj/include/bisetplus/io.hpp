#ifndef BISETPLUS_IO_HPP
#define BISETPLUS_IO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mark.hpp"
#include "presets.hpp"

namespace bisetplus {

using json = nlohmann::json;

inline constexpr const char *kSchema = "bisetplus/1";

// ---------------------------------------------------------------------------
// Groups and subgroups

inline json perm_to_json(const Perm &p) {
  json a = json::array();
  for (std::size_t i = 0; i < p.degree(); ++i)
    a.push_back(static_cast<int>(p[i]));
  return a;
}

inline Perm perm_from_json(const json &j) {
  if (!j.is_array())
    throw ParseError("permutation must be an array of images");
  std::vector<int> v;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw ParseError("permutation image must be an integer");
    v.push_back(x.get<int>());
  }
  return Perm::from_images(std::span<const int>(v));
}

inline json group_to_json(const Group &g) {
  json gens = json::array();
  for (const auto &p : g.generators())
    gens.push_back(perm_to_json(p));
  return {{"name", g.name()}, {"degree", g.degree()}, {"generators", gens}};
}

/// Accepts a preset name, {"preset": name} or {"name", "degree", "generators"}.
inline GroupPtr group_from_json(const json &j) {
  if (j.is_string())
    return preset_group(j.get<std::string>());
  if (!j.is_object())
    throw ParseError("group must be a preset name or an object");
  if (j.contains("preset"))
    return preset_group(j.at("preset").get<std::string>());
  GroupDescriptor d;
  d.name = j.value("name", std::string("G"));
  if (!j.contains("degree") || !j.at("degree").is_number_integer())
    throw ParseError("group descriptor needs an integer degree");
  d.degree = j.at("degree").get<std::size_t>();
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw ParseError("group descriptor needs a generator list");
  for (const auto &gen : j.at("generators")) {
    if (!gen.is_array())
      throw ParseError("generator must be an array of images");
    d.generators.push_back(gen.get<std::vector<int>>());
  }
  return group_from_spec(d);
}

inline json subgroup_generators_json(const Subgroup &s) {
  json a = json::array();
  for (Elem e : s.generators())
    a.push_back(perm_to_json(s.group().element(e)));
  return a;
}

inline Subgroup subgroup_from_json(const GroupPtr &g, const json &gens) {
  if (!gens.is_array())
    throw ParseError("subgroup generators must be an array");
  std::vector<Elem> idx;
  for (const auto &p : gens) {
    auto e = g->find(perm_from_json(p));
    if (!e)
      throw ParseError("subgroup generator is not an element of " + g->name());
    idx.push_back(*e);
  }
  return Subgroup::generated(g, std::span<const Elem>(idx));
}

/// Reads `text` as JSON when it starts with '{' or '[', or from a file when it
/// starts with '@'.
inline std::optional<json> maybe_json(const std::string &text) {
  std::string body;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in)
      throw ParseError("cannot open " + text.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    body = os.str();
  } else if (!text.empty() && (text[0] == '{' || text[0] == '[')) {
    body = text;
  } else {
    return std::nullopt;
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

/// A preset name, inline JSON descriptor or @file.
inline GroupPtr parse_group(const std::string &text) {
  if (auto j = maybe_json(text))
    return group_from_json(*j);
  return preset_group(text);
}

/// "preset:uptoN" (the desk suite up to order N), "suite", or a comma
/// separated list of groups as accepted by parse_group.
inline std::vector<GroupPtr> parse_group_list(const std::string &text) {
  std::vector<GroupPtr> out;
  std::string names = text;
  if (text == "suite")
    names = "preset:upto24";
  if (names.rfind("preset:upto", 0) == 0) {
    const std::string n = names.substr(11);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad group list '" + text + "'");
    for (const auto &name : preset_suite_names(std::stoul(n)))
      out.push_back(preset_group(name));
    return out;
  }
  if (auto j = maybe_json(text)) {
    if (!j->is_array())
      throw ParseError("group list JSON must be an array");
    for (const auto &g : *j)
      out.push_back(group_from_json(g));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(parse_group(item));
  if (out.empty())
    throw ParseError("empty group list");
  return out;
}

namespace detail {

inline std::vector<std::size_t> order_profile(const Group &g, const std::vector<Elem> &elems) {
  std::vector<std::size_t> p;
  for (Elem e : elems)
    p.push_back(g.element_order(e));
  std::sort(p.begin(), p.end());
  return p;
}

inline bool all_digits(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace detail

/// A subgroup of G by lattice index, by G's own name (the whole group), or by
/// a preset name, matched to the first subgroup in lattice order with the
/// same order and element-order profile.
inline Subgroup parse_subgroup(const GroupPtr &g, const std::string &text) {
  LatticePtr lat = lattice_of(g);
  if (detail::all_digits(text)) {
    std::size_t i = std::stoul(text);
    if (i >= lat->size())
      throw ParseError("subgroup index " + text + " out of range for " + g->name());
    return lat->subgroup(i);
  }
  if (text == g->name() || text == "G")
    return Subgroup::full(g);
  GroupPtr model = preset_group(text);
  std::vector<Elem> all(model->order());
  std::iota(all.begin(), all.end(), Elem{0});
  const auto profile = detail::order_profile(*model, all);
  for (const auto &s : lat->subgroups())
    if (s.order() == model->order() && detail::order_profile(*g, s.elements()) == profile)
      return s;
  throw ParseError("no subgroup of " + g->name() + " looks like " + text);
}

// ---------------------------------------------------------------------------
// Labels

/// Values of a label at the generators of H; "1" denotes the unit label.
inline std::vector<std::int32_t> label_at_generators(const Subgroup &h, const Label &l) {
  std::vector<std::int32_t> v;
  if (l.empty())
    return v;
  for (Elem e : h.generators())
    v.push_back(l[h.position(e)]);
  return v;
}

inline bool is_unit_label(const Label &l) {
  return std::all_of(l.begin(), l.end(), [](std::int32_t x) { return x == 0; });
}

inline std::string render_label(const Subgroup &h, const Label &l) {
  if (is_unit_label(l))
    return "1";
  std::string s = "(";
  bool first = true;
  for (auto v : label_at_generators(h, l)) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + ")";
}

/// The basis label of H with the given values at H's generators.
inline Label label_from_generator_values(const BasedFunctor &f, const Subgroup &h,
                                         const std::vector<std::int32_t> &values) {
  const auto basis = f.basis(h);
  for (const auto &b : basis) {
    if (b.empty()) {
      if (std::all_of(values.begin(), values.end(), [](std::int32_t x) { return x == 0; }))
        return b;
      continue;
    }
    if (label_at_generators(h, b) == values)
      return b;
  }
  throw ParseError("no basis element of " + f.name() + " on this subgroup has those generator values");
}

inline Label parse_label(const BasedFunctor &f, const Subgroup &h, const std::string &text) {
  if (text == "1" || text == "*")
    return f.value_one(h);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("label must be 1 or a tuple of generator values, got '" + text + "'");
  std::vector<std::int32_t> values;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!detail::all_digits(item))
      throw ParseError("bad label entry '" + item + "'");
    values.push_back(static_cast<std::int32_t>(std::stoi(item)));
  }
  if (values.size() != h.generators().size())
    throw ParseError("label needs one value per generator of the subgroup");
  return label_from_generator_values(f, h, values);
}

inline json label_to_json(const Subgroup &h, const Label &l) {
  if (l.empty())
    return "*";
  return label_at_generators(h, l);
}

inline Label label_from_json(const BasedFunctor &f, const Subgroup &h, const json &j) {
  if (j.is_string() && (j.get<std::string>() == "*" || j.get<std::string>() == "1"))
    return f.value_one(h);
  if (!j.is_array())
    throw ParseError("label must be \"*\" or a list of generator values");
  auto values = j.get<std::vector<std::int32_t>>();
  if (values.size() != h.generators().size())
    throw ParseError("label needs one value per subgroup generator");
  return label_from_generator_values(f, h, values);
}

// ---------------------------------------------------------------------------
// Text rendering

inline std::string subgroup_name(const SubgroupLattice &lat, std::size_t index) {
  return index == lat.top() ? lat.group()->name() : std::to_string(index);
}

/// "0", "[S3:1]", "2*[1:1] - [3:(1)]".
template <class Scalar> std::string render(const PlusElementT<Scalar> &x) {
  if (x.is_zero())
    return "0";
  std::string s;
  for (const auto &[k, c] : x.terms()) {
    const bool neg = c < Scalar(0);
    const Scalar a = neg ? Scalar(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (!(a == Scalar(1)))
      s += scalar_to_string(a) + "*";
    s += "[" + subgroup_name(x.lattice(), k.subgroup) + ":" + render_label(x.subgroup(k), k.label) + "]";
  }
  return s;
}

template <class Scalar>
std::string render_component(const Subgroup &h, const std::map<Label, Scalar> &comp) {
  if (comp.empty())
    return "0";
  if (comp.size() == 1 && comp.begin()->first.empty())
    return scalar_to_string(comp.begin()->second);
  std::string s;
  for (const auto &[l, c] : comp) {
    const bool neg = c < Scalar(0);
    const Scalar a = neg ? Scalar(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (!(a == Scalar(1)))
      s += scalar_to_string(a) + "*";
    s += render_label(h, l);
  }
  return s;
}

/// One line per subgroup class: "<index>\t|H|=<order>\t<value>".
template <class Scalar> std::string render(const GhostElementT<Scalar> &y) {
  std::string s;
  const auto &lat = y.lattice();
  for (std::size_t c = 0; c < y.size(); ++c) {
    const Subgroup &h = lat.rep_subgroup(c);
    s += subgroup_name(lat, lat.class_rep(c)) + "\t|H|=" + std::to_string(h.order()) + "\t" +
         render_component(h, y.component(c)) + "\n";
  }
  return s;
}

inline std::string render(const BisetElement &u) {
  if (u.is_zero())
    return "0";
  std::string s;
  for (const auto &[k, c] : u.terms()) {
    if (!s.empty())
      s += c < 0 ? " - " : " + ";
    else if (c < 0)
      s += "-";
    const long long a = c < 0 ? -c : c;
    if (a != 1)
      s += std::to_string(a) + "*";
    s += "[" + describe(u.subgroup(k)) + "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Element literals: "H:label*coeff + ...", also accepting "coeff*[H:label]"

namespace detail {

inline std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

inline long long parse_coefficient(const std::string &s) {
  std::string t = trim(s);
  if (t.empty())
    throw ParseError("empty coefficient");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception &) {
    throw ParseError("bad coefficient '" + t + "'");
  }
  if (pos != t.size())
    throw ParseError("bad coefficient '" + t + "'");
  return v;
}

/// Splits at top-level '+' and '-' (outside brackets and parentheses),
/// returning (sign, term) pairs. A sign right after '*' belongs to the
/// coefficient that follows.
inline std::vector<std::pair<int, std::string>> split_terms(const std::string &text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  bool have_sign = false;
  std::string cur;
  for (char ch : text) {
    if (ch == '[' || ch == '(')
      ++depth;
    else if (ch == ']' || ch == ')')
      --depth;
    if (depth < 0)
      throw ParseError("unbalanced brackets in element literal");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      std::string t = trim(cur);
      if (!t.empty() && t.back() == '*') {
        cur += ch;
        continue;
      }
      if (t.empty()) {
        if (have_sign)
          throw ParseError("two signs in a row in element literal");
      } else {
        out.emplace_back(sign, t);
        cur.clear();
      }
      sign = ch == '-' ? -1 : 1;
      have_sign = true;
      continue;
    }
    cur += ch;
  }
  if (depth != 0)
    throw ParseError("unbalanced brackets in element literal");
  std::string t = trim(cur);
  if (t.empty())
    throw ParseError("element literal ends without a term");
  out.emplace_back(sign, t);
  return out;
}

} // namespace detail

inline PlusElement parse_plus_literal(const GroupPtr &g, const FunctorPtr &f, const std::string &text) {
  PlusElement x(g, f);
  if (detail::trim(text) == "0")
    return x;
  for (auto [sign, term] : detail::split_terms(text)) {
    long long coeff = sign;
    // optional leading "c*"
    std::size_t lb = term.find('[');
    if (lb != std::string::npos) {
      std::string pre = detail::trim(term.substr(0, lb));
      if (!pre.empty()) {
        if (pre.back() != '*')
          throw ParseError("expected '*' before '[' in '" + term + "'");
        coeff *= detail::parse_coefficient(pre.substr(0, pre.size() - 1));
      }
      std::size_t rb = term.find(']', lb);
      if (rb == std::string::npos)
        throw ParseError("missing ']' in '" + term + "'");
      std::string post = detail::trim(term.substr(rb + 1));
      if (!post.empty()) {
        if (post.front() != '*')
          throw ParseError("expected '*' after ']' in '" + term + "'");
        coeff *= detail::parse_coefficient(post.substr(1));
      }
      term = term.substr(lb + 1, rb - lb - 1);
    } else {
      // "H:label*coeff"
      std::size_t star = term.rfind('*');
      std::size_t close = term.rfind(')');
      if (star != std::string::npos && (close == std::string::npos || star > close)) {
        coeff *= detail::parse_coefficient(term.substr(star + 1));
        term = term.substr(0, star);
      }
    }
    std::size_t colon = term.find(':');
    const std::string hs = detail::trim(colon == std::string::npos ? term : term.substr(0, colon));
    const std::string ls = colon == std::string::npos ? "1" : detail::trim(term.substr(colon + 1));
    Subgroup h = parse_subgroup(g, hs);
    x.add(h, parse_label(*f, h, ls), coeff);
  }
  return x;
}

// ---------------------------------------------------------------------------
// JSON for elements

inline json to_json(const BisetElement &u) {
  json terms = json::array();
  for (const auto &[k, c] : u.terms()) {
    ProductSubgroup d = u.subgroup(k);
    json gens = json::array();
    GroupPtr prod = product_group(d.left(), d.right());
    for (Elem e : d.as_subgroup_of(prod).generators())
      gens.push_back({perm_to_json(d.left()->element(d.left_of(e))),
                      perm_to_json(d.right()->element(d.right_of(e)))});
    terms.push_back({{"generators", gens}, {"coefficient", c}});
  }
  return {{"schema", kSchema},
          {"type", "biset"},
          {"left", group_to_json(*u.left())},
          {"right", group_to_json(*u.right())},
          {"terms", terms}};
}

inline BisetElement biset_from_json(const json &j) {
  if (j.value("type", std::string()) != "biset")
    throw ParseError("expected a biset element");
  GroupPtr g = group_from_json(j.at("left")), h = group_from_json(j.at("right"));
  BisetElement u(g, h);
  for (const auto &t : j.at("terms")) {
    std::vector<ElemPair> gens;
    for (const auto &pair : t.at("generators")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("biset generator must be a pair of permutations");
      auto a = g->find(perm_from_json(pair[0]));
      auto b = h->find(perm_from_json(pair[1]));
      if (!a || !b)
        throw ParseError("biset generator is not in the product group");
      gens.emplace_back(*a, *b);
    }
    u.add(ProductSubgroup::generated(g, h, std::span<const ElemPair>(gens)), t.at("coefficient").get<long long>());
  }
  return u;
}

namespace detail {

inline json coefficient_json(long long c) { return c; }
inline json coefficient_json(const Rational &c) {
  if (c.denominator() == 1)
    return c.numerator();
  return scalar_to_string(c);
}

template <class Scalar> Scalar coefficient_from_json(const json &j);

template <> inline long long coefficient_from_json<long long>(const json &j) {
  if (!j.is_number_integer())
    throw ParseError("coefficient must be an integer");
  return j.get<long long>();
}

template <> inline Rational coefficient_from_json<Rational>(const json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  if (!j.is_string())
    throw ParseError("coefficient must be an integer or a string \"p/q\"");
  const std::string s = j.get<std::string>();
  const std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception &) {
    throw ParseError("bad rational coefficient '" + s + "'");
  }
}

} // namespace detail

template <class Scalar> json to_json(const PlusElementT<Scalar> &x) {
  json terms = json::array();
  for (const auto &[k, c] : x.terms()) {
    const Subgroup &h = x.subgroup(k);
    terms.push_back({{"subgroup_generators", subgroup_generators_json(h)},
                     {"label", label_to_json(h, k.label)},
                     {"coefficient", detail::coefficient_json(c)}});
  }
  return {{"schema", kSchema},
          {"type", "plus"},
          {"group", group_to_json(*x.group())},
          {"functor", x.functor()->name()},
          {"terms", terms}};
}

template <class Scalar = long long> PlusElementT<Scalar> plus_from_json(const json &j) {
  if (j.value("type", std::string()) != "plus")
    throw ParseError("expected a plus element");
  GroupPtr g = group_from_json(j.at("group"));
  FunctorPtr f = functor_from_string(j.at("functor").get<std::string>());
  PlusElementT<Scalar> x(g, f);
  for (const auto &t : j.at("terms")) {
    Subgroup h = subgroup_from_json(g, t.at("subgroup_generators"));
    x.add(h, label_from_json(*f, h, t.at("label")), detail::coefficient_from_json<Scalar>(t.at("coefficient")));
  }
  return x;
}

template <class Scalar> json component_to_json(const Subgroup &h, const std::map<Label, Scalar> &comp) {
  json v = json::array();
  for (const auto &[l, c] : comp)
    v.push_back({{"label", label_to_json(h, l)}, {"coefficient", detail::coefficient_json(c)}});
  return v;
}

template <class Scalar> json to_json(const GhostElementT<Scalar> &y) {
  json comps = json::array();
  const auto &lat = y.lattice();
  for (std::size_t c = 0; c < y.size(); ++c) {
    const Subgroup &h = lat.rep_subgroup(c);
    comps.push_back({{"subgroup_generators", subgroup_generators_json(h)},
                     {"value", component_to_json(h, y.component(c))}});
  }
  return {{"schema", kSchema},
          {"type", "ghost"},
          {"group", group_to_json(*y.group())},
          {"functor", y.functor()->name()},
          {"components", comps}};
}

/// Components may name any member of a class; they are moved to the
/// representative.
template <class Scalar = long long> GhostElementT<Scalar> ghost_from_json(const json &j) {
  if (j.value("type", std::string()) != "ghost")
    throw ParseError("expected a ghost element");
  GroupPtr g = group_from_json(j.at("group"));
  FunctorPtr f = functor_from_string(j.at("functor").get<std::string>());
  GhostElementT<Scalar> y(g, f);
  const auto &lat = y.lattice();
  std::vector<bool> seen(y.size(), false);
  for (const auto &comp : j.at("components")) {
    Subgroup h = subgroup_from_json(g, comp.at("subgroup_generators"));
    const std::size_t idx = lat.index_of(h);
    const std::size_t cls = lat.class_of(idx);
    if (seen[cls])
      throw ParseError("two components for the same subgroup class");
    seen[cls] = true;
    const Elem x = lat.to_rep(idx);
    for (const auto &v : comp.at("value"))
      y.add(cls, f->conj(x, h, label_from_json(*f, h, v.at("label"))),
            detail::coefficient_from_json<Scalar>(v.at("coefficient")));
  }
  if (!y.is_fixed())
    throw Error("ghost element is not fixed by the normalizers");
  return y;
}

inline json to_json(const FunctorElement &a, const BasedFunctor &f) {
  return {{"schema", kSchema},
          {"type", "functor-value"},
          {"group", group_to_json(*a.group.parent())},
          {"functor", f.name()},
          {"subgroup_generators", subgroup_generators_json(a.group)},
          {"value", component_to_json(a.group, a.coeffs)}};
}

inline FunctorElement functor_element_from_json(const json &j) {
  if (j.value("type", std::string()) != "functor-value")
    throw ParseError("expected a functor value");
  GroupPtr g = group_from_json(j.at("group"));
  FunctorPtr f = functor_from_string(j.at("functor").get<std::string>());
  FunctorElement a{subgroup_from_json(g, j.at("subgroup_generators")), {}};
  for (const auto &v : j.at("value"))
    a.add(label_from_json(*f, a.group, v.at("label")), detail::coefficient_from_json<long long>(v.at("coefficient")));
  return a;
}

inline json lattice_to_json(const SubgroupLattice &lat) {
  json subs = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    subs.push_back({{"index", i},
                    {"order", lat.subgroup(i).order()},
                    {"class", lat.class_of(i)},
                    {"generators", subgroup_generators_json(lat.subgroup(i))}});
  json classes = json::array();
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    classes.push_back({{"representative", lat.class_rep(c)},
                       {"members", lat.class_members(c)},
                       {"normalizer_order", lat.class_normalizer(c).order()}});
  json mob = json::array();
  for (std::size_t l = 0; l < lat.size(); ++l) {
    const auto &row = lat.mobius_row(l);
    for (std::size_t k = 0; k < lat.size(); ++k)
      if (row[k] != 0)
        mob.push_back({l, k, row[k]});
  }
  return {{"schema", kSchema},
          {"type", "lattice"},
          {"group", group_to_json(*lat.group())},
          {"subgroups", subs},
          {"classes", classes},
          {"mobius", mob}};
}

// ---------------------------------------------------------------------------
// Biset specifications on the command line

/// Parses a biset given as JSON (inline or @file) or as one of
///   res:G>H   ind:H>G   inf:G/N   def:G/N   id:G   std:GxH:i
/// where subgroups follow parse_subgroup and i is a lattice index of G × H.
inline BisetElement parse_biset(const std::string &text) {
  if (auto j = maybe_json(text))
    return biset_from_json(*j);
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("biset spec needs a kind prefix, got '" + text + "'");
  const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  auto split = [&](char sep) {
    const std::size_t p = rest.find(sep);
    if (p == std::string::npos)
      throw ParseError("biset spec '" + text + "' is missing '" + sep + "'");
    return std::make_pair(rest.substr(0, p), rest.substr(p + 1));
  };
  if (kind == "res") {
    auto [gs, hs] = split('>');
    GroupPtr g = parse_group(gs);
    return restriction(parse_subgroup(g, hs), hs).element;
  }
  if (kind == "ind") {
    auto [hs, gs] = split('>');
    GroupPtr g = parse_group(gs);
    return induction(parse_subgroup(g, hs), hs).element;
  }
  if (kind == "inf" || kind == "def") {
    auto [gs, ns] = split('/');
    GroupPtr g = parse_group(gs);
    Subgroup n = parse_subgroup(g, ns);
    if (!n.is_normal_in(Subgroup::full(g)))
      throw Error(ns + " is not normal in " + g->name());
    return kind == "inf" ? inflation(n).element : deflation(n).element;
  }
  if (kind == "id")
    return identity_biset(parse_group(rest));
  if (kind == "std") {
    auto [pair, idx] = split(':');
    const std::size_t x = pair.find('x');
    if (x == std::string::npos)
      throw ParseError("std biset needs GxH");
    GroupPtr g = parse_group(pair.substr(0, x)), h = parse_group(pair.substr(x + 1));
    LatticePtr lat = lattice_of(product_group(g, h));
    if (!detail::all_digits(idx) || std::stoul(idx) >= lat->size())
      throw ParseError("bad subgroup index '" + idx + "' for " + pair);
    return BisetElement::standard(ProductSubgroup(g, h, lat->subgroup(std::stoul(idx)).elements()));
  }
  throw ParseError("unknown biset kind '" + kind + "'");
}

} // namespace bisetplus

#endif
