#include "kwmod/sweep.hpp"

#include <atomic>
#include <thread>

namespace kwmod {

int SweepResult::failures() const {
  int bad = 0;
  for (const auto& r : reports) bad += r.failures();
  for (const auto& r : levi_reports) bad += r.failures();
  return bad;
}

int SweepResult::skipped() const {
  int count = 0;
  for (const auto& r : reports)
    for (const auto& [name, res] : r.checks) {
      (void)name;
      if (res.status == CheckStatus::skipped) ++count;
    }
  return count;
}

static void validate_config(const SweepConfig& cfg) {
  if (cfg.max_size < 1) throw error(errc::invalid_bound, "max_size must be at least 1");
  if (cfg.primes.empty()) throw error(errc::invalid_bound, "no primes given");
  for (std::uint32_t p : cfg.primes)
    if (!is_odd_prime(p))
      throw error(errc::invalid_context, std::to_string(p) + " is not an odd prime");
  if (cfg.kinds.empty()) throw error(errc::invalid_bound, "no kinds given");
}

std::vector<SweepInstance> enumerate_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  std::vector<SweepInstance> out;
  for (int total = 0; total <= cfg.max_size; ++total)
    for (int m = 0; m <= total; ++m) {
      int n = total - m;
      for (const auto& pp : partition_pairs(m, n))
        for (std::uint32_t p : cfg.primes)
          for (AlgebraKind kind : cfg.kinds) out.push_back({m, n, p, kind, pp});
    }
  return out;
}

VerificationReport verify_sweep_instance(const SweepInstance& inst) {
  if (inst.kind == AlgebraKind::sl) {
    int d = (inst.m - inst.n) % static_cast<int>(inst.p);
    if (d < 0) d += static_cast<int>(inst.p);
    if (d == 0) {
      VerificationReport rep;
      rep.instance = {inst.m, inst.n, inst.p, inst.kind, inst.pp, ""};
      rep.add_skipped("instance_constructible", "p | m-n");
      return rep;
    }
  }
  try {
    AlgebraContext ctx(inst.m, inst.n, inst.p, inst.kind);
    return verify_nilpotent_instance(ctx, inst.pp);
  } catch (const error& e) {
    VerificationReport rep;
    rep.instance = {inst.m, inst.n, inst.p, inst.kind, inst.pp, ""};
    rep.add("instance_constructible", false, e.what());
    return rep;
  }
}

LeviInstance random_levi_instance(std::mt19937_64& rng, int m, int n, std::uint32_t p,
                                  AlgebraKind kind) {
  LeviInstance inst;
  inst.m = m;
  inst.n = n;
  inst.p = p;
  inst.kind = kind;
  inst.s.even_diag.resize(m);
  inst.s.odd_diag.resize(n);
  for (auto& v : inst.s.even_diag) v = static_cast<std::uint32_t>(draw(rng, p));
  for (auto& v : inst.s.odd_diag) v = static_cast<std::uint32_t>(draw(rng, p));
  if (kind == AlgebraKind::sl) {
    // force supertrace zero by solving for one entry
    std::int64_t acc = 0;
    for (std::uint32_t v : inst.s.even_diag) acc += v;
    for (std::uint32_t v : inst.s.odd_diag) acc -= v;
    if (m > 0) {
      acc -= inst.s.even_diag[m - 1];
      std::int64_t want = ((-acc) % p + p) % p;
      inst.s.even_diag[m - 1] = static_cast<std::uint32_t>(want);
    } else if (n > 0) {
      acc += inst.s.odd_diag[n - 1];
      std::int64_t want = (acc % p + p) % p;
      inst.s.odd_diag[n - 1] = static_cast<std::uint32_t>(want);
    }
  }
  AlgebraContext ctx(m, n, p, kind);
  LeviDecomposition dec = levi_decompose(ctx, inst.s);
  for (const auto& block : dec.blocks) {
    auto rs = all_partitions(block.block_m());
    auto qs = all_partitions(block.block_n());
    PartitionPair pp{rs[draw(rng, rs.size())], qs[draw(rng, qs.size())]};
    inst.types[block.eigenvalue] = pp;
  }
  return inst;
}

VerificationReport verify_levi_instance(const LeviInstance& inst) {
  try {
    AlgebraContext ctx(inst.m, inst.n, inst.p, inst.kind);
    return check_levi_identities(ctx, inst.s, inst.types);
  } catch (const error& e) {
    VerificationReport rep;
    rep.instance = {inst.m, inst.n, inst.p, inst.kind, std::nullopt, "s=" + inst.s.str()};
    rep.add("instance_constructible", false, e.what());
    return rep;
  }
}

SweepResult run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  SweepResult result;
  result.config = cfg;

  std::vector<SweepInstance> instances = enumerate_sweep(cfg);

  // The random instances are drawn up front in enumeration order so the
  // worker fan-out cannot disturb them.
  std::vector<LeviInstance> levi_instances;
  if (cfg.levi_random > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int total = 0; total <= cfg.max_size; ++total)
      for (int m = 0; m <= total; ++m) {
        int n = total - m;
        for (int k = 0; k < cfg.levi_random; ++k) {
          std::uint32_t p = cfg.primes[draw(rng, cfg.primes.size())];
          std::vector<AlgebraKind> usable;
          for (AlgebraKind kind : cfg.kinds) {
            if (kind == AlgebraKind::sl) {
              int d = ((m - n) % static_cast<int>(p) + static_cast<int>(p)) %
                      static_cast<int>(p);
              if (d == 0) continue;
            }
            usable.push_back(kind);
          }
          if (usable.empty()) continue;
          AlgebraKind kind = usable[draw(rng, usable.size())];
          levi_instances.push_back(random_levi_instance(rng, m, n, p, kind));
        }
      }
  }

  result.reports.resize(instances.size());
  result.levi_reports.resize(levi_instances.size());

  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (size_t i = 0; i < instances.size(); ++i)
      result.reports[i] = verify_sweep_instance(instances[i]);
    for (size_t i = 0; i < levi_instances.size(); ++i)
      result.levi_reports[i] = verify_levi_instance(levi_instances[i]);
    return result;
  }

  std::atomic<size_t> next{0};
  const size_t total_work = instances.size() + levi_instances.size();
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= total_work) return;
      if (i < instances.size())
        result.reports[i] = verify_sweep_instance(instances[i]);
      else
        result.levi_reports[i - instances.size()] =
            verify_levi_instance(levi_instances[i - instances.size()]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return result;
}

} // namespace kwmod
