#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigmastab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a cooperative cancellation token fires inside a long
// elimination loop.
struct cancelled_error : std::runtime_error {
  cancelled_error() : std::runtime_error("computation cancelled") {}
};

struct math_error : std::runtime_error {
  explicit math_error(const std::string& w) : std::runtime_error(w) {}
};

using CancelToken = std::atomic<bool>;

inline void check_cancel(const CancelToken* tok) {
  if (tok && tok->load(std::memory_order_relaxed)) throw cancelled_error();
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace sigmastab
