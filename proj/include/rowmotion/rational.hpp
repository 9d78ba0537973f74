#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace rowmotion {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", integers included, so the format is stable for parsers.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace rowmotion
