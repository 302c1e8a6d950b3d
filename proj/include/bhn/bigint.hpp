#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bhn {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive big integer, accurate to double precision.
double log_of(const BigInt& value);

/// n! computed exactly.
BigInt factorial(std::uint64_t n);

}  // namespace bhn
