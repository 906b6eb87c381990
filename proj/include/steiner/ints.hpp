#pragma once
/* Exact integers for all chain arithmetic; fixed width appears only at the JSON edge. */
#include "steiner/error.hpp"
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

namespace steiner {

using Int = boost::multiprecision::cpp_int;

inline long long to_int64_checked(const Int& v, const std::string& what) {
  if (v < (std::numeric_limits<long long>::min)() || v > (std::numeric_limits<long long>::max)())
    throw StructuralError("integer out of int64 range in " + what);
  return v.convert_to<long long>();
}

}
