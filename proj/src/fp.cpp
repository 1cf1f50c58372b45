#include "kwmod/fp.hpp"

namespace kwmod {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_odd_prime(p))
    throw error(errc::invalid_context, "p = " + std::to_string(p) + " is not an odd prime");
  if (p >= (1u << 16))
    throw error(errc::invalid_context, "p = " + std::to_string(p) + " exceeds 2^16");
  auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0u);
  for (std::uint32_t a = 1; a < p; ++a) {
    // a^(p-2) by square and multiply
    std::uint64_t base = a, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    (*table)[a] = static_cast<std::uint32_t>(acc);
  }
  inv_ = std::move(table);
}

} // namespace kwmod
