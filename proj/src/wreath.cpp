#include "bhn/wreath.hpp"

namespace bhn {

WreathElement::WreathElement(const std::map<std::int64_t, std::int64_t>& lamps, std::int64_t shift) : shift_(shift) {
  for (const auto& [pos, value] : lamps) {
    const std::int64_t v = ((value % 3) + 3) % 3;
    if (v != 0) lamps_.emplace(pos, static_cast<std::uint8_t>(v));
  }
}

void WreathElement::add_lamp(std::int64_t position, std::uint8_t value) {
  auto [it, inserted] = lamps_.try_emplace(position, value);
  if (inserted) return;
  it->second = static_cast<std::uint8_t>((it->second + value) % 3);
  if (it->second == 0) lamps_.erase(it);
}

void WreathElement::multiply_right(Letter l) {
  switch (l) {
    case Letter::a: ++shift_; break;
    case Letter::A: --shift_; break;
    case Letter::b: add_lamp(shift_, 1); break;
    case Letter::B: add_lamp(shift_, 2); break;
  }
}

WreathElement w_mul(const WreathElement& u, const WreathElement& v) {
  std::map<std::int64_t, std::int64_t> lamps(u.lamps().begin(), u.lamps().end());
  for (const auto& [pos, value] : v.lamps()) lamps[pos + u.shift()] += value;
  return WreathElement(lamps, u.shift() + v.shift());
}

WreathElement w_inv(const WreathElement& u) {
  // (f, s)^-1 = (-f(. + s), -s)
  std::map<std::int64_t, std::int64_t> lamps;
  for (const auto& [pos, value] : u.lamps()) lamps[pos - u.shift()] = 3 - value;
  return WreathElement(lamps, -u.shift());
}

WreathElement w_eval(const Word& w) {
  WreathElement acc;
  for (Letter l : w) acc.multiply_right(l);
  return acc;
}

LampData lamp_data(const WreathElement& u) {
  LampData data;
  for (const auto& [pos, value] : u.lamps()) data.exponents.emplace(pos, value);
  data.shift = u.shift();
  return data;
}

}  // namespace bhn
