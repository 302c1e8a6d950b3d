#pragma once

#include <cstdint>
#include <map>

#include "bhn/words.hpp"

namespace bhn {

/// An element of the lamplighter group C3 wr Z: a finitely supported
/// configuration of lamps in Z/3 together with a shift.
///
/// Stored canonically (no zero lamps), so structural equality is group
/// equality. Multiplication is (f, s)(g, t) = (f + g(. - s), s + t): the
/// right factor's lamps are moved s places before being added.
class WreathElement {
 public:
  using Lamps = std::map<std::int64_t, std::uint8_t>;

  WreathElement() = default;
  /// Lamp values are reduced mod 3; zero entries are dropped.
  WreathElement(const std::map<std::int64_t, std::int64_t>& lamps, std::int64_t shift);

  /// alpha_inf: the generator of Z.
  static WreathElement shift_generator() { return WreathElement({}, 1); }
  /// beta_inf: the generator of the lamp at position 0.
  static WreathElement lamp_generator() { return WreathElement({{0, 1}}, 0); }

  const Lamps& lamps() const { return lamps_; }
  std::int64_t shift() const { return shift_; }
  bool is_identity() const { return lamps_.empty() && shift_ == 0; }

  /// In-place right multiplication by a generator or its inverse.
  void multiply_right(Letter l);

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  void add_lamp(std::int64_t position, std::uint8_t value);

  Lamps lamps_;
  std::int64_t shift_ = 0;
};

WreathElement w_mul(const WreathElement& u, const WreathElement& v);
inline WreathElement operator*(const WreathElement& u, const WreathElement& v) { return w_mul(u, v); }
WreathElement w_inv(const WreathElement& u);

/// w(alpha_inf, beta_inf) with a -> alpha_inf, b -> beta_inf.
WreathElement w_eval(const Word& w);

/// Exponents c_i (mod 3, in {1, 2}) of the conjugates
/// alpha_inf^i beta_inf alpha_inf^-i, and the trailing shift l.
struct LampData {
  std::map<std::int64_t, int> exponents;
  std::int64_t shift = 0;
  friend bool operator==(const LampData&, const LampData&) = default;
};

LampData lamp_data(const WreathElement& u);

}  // namespace bhn
