#ifndef KWMOD_FP_HPP
#define KWMOD_FP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "kwmod/errors.hpp"

namespace kwmod {

/// Scalar arithmetic in F_p for an odd prime p < 2^16. Inverses are
/// precomputed once; the table is shared, so copies are cheap and the type
/// can travel inside every algebra value.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw error(errc::bad_argument, "inverse of zero");
    return (*inv_)[a];
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint32_t>> inv_;
};

bool is_odd_prime(std::uint32_t p);

} // namespace kwmod

#endif
