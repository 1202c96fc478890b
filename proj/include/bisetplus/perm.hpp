#ifndef BISETPLUS_PERM_HPP
#define BISETPLUS_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace bisetplus {

/// A permutation of {0, ..., d-1} stored as its image sequence.
///
/// Composition follows function notation: (a * b)(i) = a(b(i)). The total
/// order is lexicographic on image sequences, which makes the identity the
/// smallest permutation of every degree.
class Perm {
public:
  using value_type = std::uint16_t;

  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i)
      images_[i] = static_cast<value_type>(i);
  }

  explicit Perm(std::vector<value_type> images) : images_(std::move(images)) {
    validate();
  }

  static Perm from_images(std::span<const int> images) {
    std::vector<value_type> v;
    v.reserve(images.size());
    for (int x : images) {
      if (x < 0 || x > 0xFFFF)
        throw ParseError("permutation image out of range: " + std::to_string(x));
      v.push_back(static_cast<value_type>(x));
    }
    return Perm(std::move(v));
  }

  static Perm from_images(std::initializer_list<int> images) {
    std::vector<int> v(images);
    return from_images(std::span<const int>(v));
  }

  /// Builds a permutation of the given degree from disjoint cycles.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<int>> cycles) {
    Perm p(degree);
    for (const auto &cycle : cycles) {
      std::vector<int> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 0 || static_cast<std::size_t>(from) >= degree || to < 0 ||
            static_cast<std::size_t>(to) >= degree)
          throw ParseError("cycle entry outside degree");
        p.images_[from] = static_cast<value_type>(to);
      }
    }
    p.validate();
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  value_type operator[](std::size_t i) const { return images_[i]; }
  const std::vector<value_type> &images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  Perm operator*(const Perm &rhs) const {
    if (rhs.degree() != degree())
      throw Error("composing permutations of different degree");
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[i] = images_[rhs.images_[i]];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[images_[i]] = static_cast<value_type>(i);
    return out;
  }

  /// Places this permutation on the points [offset, offset + degree) of a
  /// larger domain of size new_degree, fixing everything else.
  Perm shifted(std::size_t offset, std::size_t new_degree) const {
    Perm out(new_degree);
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[offset + i] = static_cast<value_type>(offset + images_[i]);
    return out;
  }

  auto operator<=>(const Perm &) const = default;
  bool operator==(const Perm &) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

private:
  void validate() const {
    std::vector<bool> seen(images_.size(), false);
    for (value_type x : images_) {
      if (x >= images_.size() || seen[x])
        throw ParseError("not a permutation: " + to_string());
      seen[x] = true;
    }
  }

  std::vector<value_type> images_;
};

inline std::ostream &operator<<(std::ostream &os, const Perm &p) {
  return os << p.to_string();
}

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace bisetplus

#endif
