#ifndef KWMOD_SDIM_HPP
#define KWMOD_SDIM_HPP

#include <string>

namespace kwmod {

/// Superdimension: (even dimension, odd dimension) of a Z_2-graded space.
struct SDim {
  int even = 0;
  int odd = 0;

  friend bool operator==(const SDim&, const SDim&) = default;
  SDim operator+(const SDim& o) const { return {even + o.even, odd + o.odd}; }
  SDim operator-(const SDim& o) const { return {even - o.even, odd - o.odd}; }
  SDim operator*(int k) const { return {even * k, odd * k}; }
  int total() const { return even + odd; }

  std::string str() const {
    return "(" + std::to_string(even) + "," + std::to_string(odd) + ")";
  }
};

} // namespace kwmod

#endif
