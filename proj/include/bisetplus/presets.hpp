#ifndef BISETPLUS_PRESETS_HPP
#define BISETPLUS_PRESETS_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace bisetplus {

/// Explicit group descriptor: degree plus generator image sequences.
struct GroupDescriptor {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::vector<int>> generators;
};

inline GroupPtr group_from_spec(const GroupDescriptor &d) {
  if (d.degree == 0)
    throw ParseError("group degree must be positive");
  std::vector<Perm> gens;
  for (const auto &g : d.generators) {
    if (g.size() != d.degree)
      throw ParseError("generator length does not match degree " + std::to_string(d.degree));
    gens.push_back(Perm::from_images(std::span<const int>(g)));
  }
  return Group::generate(d.name, d.degree, std::move(gens));
}

namespace detail {

inline std::optional<int> preset_suffix(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  int n = 0;
  for (char c : name.substr(prefix.size())) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return std::nullopt;
    n = n * 10 + (c - '0');
    if (n > 1000)
      return std::nullopt;
  }
  return n;
}

inline Perm cycle_perm(std::size_t degree, const std::vector<int> &cycle) {
  std::vector<Perm::value_type> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = static_cast<Perm::value_type>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = static_cast<Perm::value_type>(cycle[(i + 1) % cycle.size()]);
  return Perm(std::move(img));
}

inline GroupPtr cyclic(int n, std::string name) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i)
    c[i] = i;
  if (n == 1)
    return Group::generate(std::move(name), 1, {});
  return Group::generate(std::move(name), n, {cycle_perm(n, c)});
}

inline GroupPtr symmetric(int n, std::string name) {
  if (n <= 1)
    return Group::generate(std::move(name), 1, {});
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i)
    c[i] = i;
  std::vector<Perm> gens{cycle_perm(n, {0, 1})};
  if (n > 2)
    gens.push_back(cycle_perm(n, c));
  return Group::generate(std::move(name), n, std::move(gens));
}

inline GroupPtr alternating(int n, std::string name) {
  if (n <= 2)
    return Group::generate(std::move(name), 1, {});
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k)
    gens.push_back(cycle_perm(n, {0, 1, k}));
  return Group::generate(std::move(name), n, std::move(gens));
}

/// Dihedral group of order n (n even) acting on n/2 points; order 4 is the
/// Klein four group on 4 points.
inline GroupPtr dihedral(int n, std::string name) {
  if (n == 2)
    return cyclic(2, std::move(name));
  if (n == 4)
    return Group::generate(std::move(name), 4,
                           {Perm::from_images({1, 0, 3, 2}), Perm::from_images({2, 3, 0, 1})});
  const int m = n / 2;
  std::vector<int> rot(m);
  for (int i = 0; i < m; ++i)
    rot[i] = i;
  std::vector<Perm::value_type> refl(m);
  for (int i = 0; i < m; ++i)
    refl[i] = static_cast<Perm::value_type>((m - i) % m);
  return Group::generate(std::move(name), m, {cycle_perm(m, rot), Perm(std::move(refl))});
}

} // namespace detail

/// Preset names: "trivial", "Cn" (n ≤ 30), "Sn" and "An" (n ≤ 5), "Dn" for the
/// dihedral group of order n (n even, 2 ≤ n ≤ 24), "Q8", "V4".
inline GroupPtr preset_group(std::string_view name) {
  std::string label(name);
  if (name == "trivial" || name == "1" || name == "C1")
    return detail::cyclic(1, label == "1" ? "trivial" : label);
  if (name == "V4")
    return Group::generate(label, 4,
                           {Perm::from_images({1, 0, 3, 2}), Perm::from_images({2, 3, 0, 1})});
  if (name == "Q8")
    // i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5) on the regular representation
    return Group::generate(label, 8,
                           {Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                            Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
  if (auto n = detail::preset_suffix(name, "C")) {
    if (*n < 1 || *n > 30)
      throw ParseError("cyclic preset must have 1 <= n <= 30");
    return detail::cyclic(*n, label);
  }
  if (auto n = detail::preset_suffix(name, "S")) {
    if (*n < 1 || *n > 5)
      throw ParseError("symmetric preset must have 1 <= n <= 5");
    return detail::symmetric(*n, label);
  }
  if (auto n = detail::preset_suffix(name, "A")) {
    if (*n < 1 || *n > 5)
      throw ParseError("alternating preset must have 1 <= n <= 5");
    return detail::alternating(*n, label);
  }
  if (auto n = detail::preset_suffix(name, "D")) {
    if (*n < 2 || *n > 24 || *n % 2 != 0)
      throw ParseError("dihedral preset Dn needs even order 2 <= n <= 24");
    return detail::dihedral(*n, label);
  }
  throw ParseError("unknown group preset '" + label + "'");
}

/// The desk-scale suite used throughout the verification harness.
inline std::vector<std::string> preset_suite_names(std::size_t max_order = 24) {
  static const std::vector<std::pair<std::string, std::size_t>> suite = {
      {"trivial", 1}, {"C2", 2}, {"C3", 3}, {"C4", 4},  {"V4", 4},   {"C6", 6},
      {"S3", 6},      {"D8", 8}, {"Q8", 8}, {"A4", 12}, {"D12", 12}, {"S4", 24}};
  std::vector<std::string> out;
  for (const auto &[name, order] : suite)
    if (order <= max_order)
      out.push_back(name);
  return out;
}

} // namespace bisetplus

#endif
