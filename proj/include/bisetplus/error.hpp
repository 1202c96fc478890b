#ifndef BISETPLUS_ERROR_HPP
#define BISETPLUS_ERROR_HPP

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bisetplus {

/// Raised when an operation's precondition does not hold for the given data
/// (subgroup not contained, normal subgroup expected, middle groups differ, ...).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Raised when input text (group descriptors, element literals, JSON) is malformed.
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error(what) {}
};

class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string &what) : Error(what) {}
};

namespace detail {

inline std::size_t &order_cap_storage() {
  static std::size_t cap = [] {
    std::size_t value = 10000;
    if (const char *env = std::getenv("BISETPLUS_ORDER_CAP")) {
      char *end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && parsed > 0)
        value = static_cast<std::size_t>(parsed);
    }
    return value;
  }();
  return cap;
}

} // namespace detail

/// Largest group order any construction may enumerate. Defaults to 10000 and
/// can be overridden with the BISETPLUS_ORDER_CAP environment variable.
inline std::size_t order_cap() { return detail::order_cap_storage(); }

inline void set_order_cap(std::size_t cap) { detail::order_cap_storage() = cap; }

inline void check_cap(std::size_t order, const std::string &what) {
  if (order > order_cap())
    throw CapExceeded(what + ": order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(order_cap()));
}

} // namespace bisetplus

#endif
