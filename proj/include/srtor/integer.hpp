#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace srtor {

/// Arbitrary-precision integer used for every value that may grow during
/// elimination.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace srtor
