#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace bidscape {

// All monetary amounts are held in integer micro-units: 1 dollar = 1'000'000.
using Money = std::int64_t;

inline constexpr Money kMicro = 1'000'000;

inline constexpr Money money_from_units(std::int64_t units) { return units * kMicro; }

inline Money money_from_double(double dollars) {
  return static_cast<Money>(std::llround(dollars * static_cast<double>(kMicro)));
}

inline double money_to_double(Money m) {
  return static_cast<double>(m) / static_cast<double>(kMicro);
}

inline std::string money_to_string(Money m) {
  char buf[48];
  Money a = m < 0 ? -m : m;
  std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", m < 0 ? "-" : "",
                static_cast<long long>(a / kMicro), static_cast<long long>(a % kMicro));
  return buf;
}

}  // namespace bidscape
