#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tburau {

// Arbitrary-precision integer coefficients. Determinants of symbolic
// matrices grow quickly; fixed-width integers would silently overflow.
using Int = boost::multiprecision::cpp_int;

}  // namespace tburau
