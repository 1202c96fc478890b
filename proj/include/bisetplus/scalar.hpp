#ifndef BISETPLUS_SCALAR_HPP
#define BISETPLUS_SCALAR_HPP

#include <string>

#include <boost/rational.hpp>

namespace bisetplus {

/// ℚ-mode coefficients.
using Rational = boost::rational<long long>;

inline std::string scalar_to_string(long long x) { return std::to_string(x); }

inline std::string scalar_to_string(const Rational &x) {
  if (x.denominator() == 1)
    return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

template <class To> To scalar_cast(long long x) { return To(x); }

} // namespace bisetplus

#endif
