#ifndef KWMOD_SWEEP_HPP
#define KWMOD_SWEEP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "kwmod/pchar.hpp"

namespace kwmod {

struct SweepConfig {
  int max_size = 4;                           // bound on m+n
  std::vector<std::uint32_t> primes{3, 5, 7}; // odd primes
  std::vector<AlgebraKind> kinds{AlgebraKind::gl, AlgebraKind::sl};
  std::uint64_t seed = 1;
  int levi_random = 0; // random p-character instances per (m,n) size
  int threads = 1;     // verification fan-out; reports stay in instance order
};

/// One nilpotent-character instance of the sweep.
struct SweepInstance {
  int m = 0;
  int n = 0;
  std::uint32_t p = 3;
  AlgebraKind kind = AlgebraKind::gl;
  PartitionPair pp;
};

/// One random p-character instance.
struct LeviInstance {
  int m = 0;
  int n = 0;
  std::uint32_t p = 3;
  AlgebraKind kind = AlgebraKind::gl;
  SemisimplePart s;
  BlockTypes types;
};

struct SweepResult {
  SweepConfig config;
  std::vector<VerificationReport> reports;
  std::vector<VerificationReport> levi_reports;

  int failures() const;
  int skipped() const;
  int instances() const {
    return static_cast<int>(reports.size() + levi_reports.size());
  }
};

/// Deterministic RNG draws (std::uniform_int_distribution is
/// implementation-defined, so results would not be portable with it).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

std::vector<SweepInstance> enumerate_sweep(const SweepConfig& cfg);

/// Draws s uniformly (traceless for sl) and a uniform Jordan type per
/// eigenvalue block.
LeviInstance random_levi_instance(std::mt19937_64& rng, int m, int n, std::uint32_t p,
                                  AlgebraKind kind);

VerificationReport verify_sweep_instance(const SweepInstance& inst);
VerificationReport verify_levi_instance(const LeviInstance& inst);

/// Runs the nilpotent battery on every (r,q), p, kind with m+n <= max_size
/// (recording a skipped report for sl when p | m-n) plus the configured
/// number of random p-character instances. Deterministic for a fixed
/// (config, seed), independent of the thread count.
SweepResult run_sweep(const SweepConfig& cfg);

} // namespace kwmod

#endif
