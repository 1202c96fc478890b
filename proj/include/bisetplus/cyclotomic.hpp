#ifndef BISETPLUS_CYCLOTOMIC_HPP
#define BISETPLUS_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace bisetplus {

using BigRational = boost::multiprecision::cpp_rational;

namespace poly {

/// Dense polynomial over ℚ, lowest degree first, no trailing zeros.
using Poly = std::vector<BigRational>;

inline void trim(Poly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline Poly sub(Poly a, const Poly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly &b) {
  if (b.empty())
    throw Error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size())
    return {{}, a};
  Poly q(a.size() - b.size() + 1, BigRational(0));
  const BigRational lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    BigRational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

/// Φ_n, computed as (xⁿ − 1) divided by Φ_d for every proper divisor d.
inline const Poly &cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1, BigRational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0)
      p = divmod(p, cyclotomic_polynomial(d)).first;
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

} // namespace poly

/// An element of ℚ(ζ_n), stored as a polynomial in ζ of degree < φ(n).
class Cyclotomic {
public:
  static constexpr int max_conductor = 24;

  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int n, const BigRational &c = 0) : n_(check(n)) {
    if (c != 0)
      coeffs_ = {c};
  }

  static Cyclotomic from_poly(int n, poly::Poly p) {
    Cyclotomic z(n);
    z.coeffs_ = std::move(p);
    z.reduce();
    return z;
  }

  /// ζ_n^k
  static Cyclotomic root_of_unity(long long k, int n) {
    check(n);
    const long long e = ((k % n) + n) % n;
    poly::Poly p(static_cast<std::size_t>(e) + 1, BigRational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return from_poly(n, std::move(p));
  }

  int conductor() const { return n_; }
  const poly::Poly &coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree_bound() const { return poly::cyclotomic_polynomial(n_).size() - 1; }

  /// The image under ℚ(ζ_n) → ℚ(ζ_m), ζ_n ↦ ζ_m^{m/n}, for n | m.
  Cyclotomic embed(int m) const {
    check(m);
    if (m % n_ != 0)
      throw Error("cannot embed conductor " + std::to_string(n_) + " into " + std::to_string(m));
    const std::size_t step = static_cast<std::size_t>(m / n_);
    poly::Poly p(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * step + 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      p[i * step] = coeffs_[i];
    return from_poly(m, std::move(p));
  }

  Cyclotomic &operator+=(const Cyclotomic &o) {
    align(o);
    if (coeffs_.size() < o.coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    poly::trim(coeffs_);
    return *this;
  }
  Cyclotomic &operator-=(const Cyclotomic &o) {
    align(o);
    coeffs_ = poly::sub(std::move(coeffs_), o.coeffs_);
    return *this;
  }
  Cyclotomic &operator*=(const Cyclotomic &o) {
    align(o);
    coeffs_ = poly::mul(coeffs_, o.coeffs_);
    reduce();
    return *this;
  }
  Cyclotomic &operator/=(const Cyclotomic &o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }
  Cyclotomic operator-() const { return Cyclotomic(n_) - *this; }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
  Cyclotomic inverse() const {
    if (is_zero())
      throw Error("inverse of zero");
    // invariant: r_i ≡ s_i · a (mod Φ_n)
    poly::Poly r0 = poly::cyclotomic_polynomial(n_), r1 = coeffs_;
    poly::Poly s0, s1 = {BigRational(1)};
    while (!r1.empty()) {
      auto [q, r] = poly::divmod(r0, r1);
      poly::Poly s = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant since Φ_n is irreducible
    const BigRational c = r0.at(0);
    for (auto &x : s0)
      x /= c;
    return from_poly(n_, std::move(s0));
  }

  /// E.g. "2*z^2 - z + 1/2", "0", "-1".
  std::string to_string() const {
    if (coeffs_.empty())
      return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigRational &c = coeffs_[i];
      if (c == 0)
        continue;
      const bool neg = c < 0;
      const BigRational a = neg ? BigRational(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      const std::string num = a.str();
      if (i == 0)
        s += num;
      else {
        if (a != 1)
          s += num + "*";
        s += i == 1 ? "z" : "z^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  static int check(int n) {
    if (n < 1 || n > max_conductor)
      throw CapExceeded("cyclotomic conductor " + std::to_string(n) + " outside 1.." +
                        std::to_string(max_conductor));
    return n;
  }

  void align(const Cyclotomic &o) const {
    if (o.n_ != n_)
      throw Error("cyclotomic conductors differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  void reduce() {
    poly::trim(coeffs_);
    const poly::Poly &phi = poly::cyclotomic_polynomial(n_);
    if (coeffs_.size() >= phi.size())
      coeffs_ = poly::divmod(std::move(coeffs_), phi).second;
  }

  int n_;
  poly::Poly coeffs_;
};

/// Rank of a matrix over ℚ(ζ_n) by Gauss-Jordan elimination.
inline std::size_t cyclotomic_rank(std::vector<std::vector<Cyclotomic>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero())
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[piv], m[rank]);
    const Cyclotomic inv = m[rank][c].inverse();
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero())
        continue;
      const Cyclotomic factor = m[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace bisetplus

#endif
