#ifndef HILB_BIGINT_HPP
#define HILB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hilb {

// All counts and transform values are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

inline bool fits_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace hilb

#endif
