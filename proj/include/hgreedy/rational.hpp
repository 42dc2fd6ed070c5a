#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace hgreedy {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in exact arithmetic");
  return out;
}

}  // namespace hgreedy
