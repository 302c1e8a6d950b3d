#include "bhn/bigint.hpp"

#include <cmath>

#include "bhn/error.hpp"

namespace bhn {

double log_of(const BigInt& value) {
  if (value <= 0) throw PreconditionError("log_of requires a positive integer");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 64) return std::log(static_cast<double>(static_cast<std::uint64_t>(value)));
  // Keep the top 64 bits as the mantissa.
  const std::size_t drop = bits - 64;
  const auto top = static_cast<std::uint64_t>(value >> drop);
  return std::log(static_cast<double>(top)) + static_cast<double>(drop) * std::log(2.0);
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace bhn
