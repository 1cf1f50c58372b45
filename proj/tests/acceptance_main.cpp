// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
//   1. golden reproduction of the gl(4|3), r=(3,1), q=(2,1) example
//   2. exhaustive sweep m+n <= 8, p in {3,5,7}, gl and sl
//   3. centralizer kernel dimensions equal the combinatorial formula
//   4. >= 200 seeded random p-character instances, m,n <= 5
//   5. gl/sl agreement of the kw dimensions, typed rejection of bad sl
//
// KWMOD_THREADS widens the sweep worker pool; results are identical either
// way.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>

#include "kwmod/sweep.hpp"

using namespace kwmod;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PartitionPair example_pair() {
  return {validate_partition({3, 1}), validate_partition({2, 1})};
}

void criterion_1() {
  auto start = Clock::now();
  bool ok = true;
  std::string why;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    AlgebraContext ctx(4, 3, p, AlgebraKind::gl);
    PartitionPair pp = example_pair();
    Pyramid dynkin = dynkin_pyramid(pp);
    Pyramid shifted = shift_pyramid(dynkin);

    ok = ok && parabolic(ctx, dynkin).sdim() == SDim{17, 14};
    ok = ok && grading_subspace(ctx, dynkin, -1).sdim() == SDim{2, 6};
    ok = ok && parabolic(ctx, shifted).sdim() == SDim{18, 17};

    // basis of p' over p: exactly e_{1,b1}, e_{2,b2}, e_{2,3}, e_{2,b4}
    Subspace l1 =
        intersect(grading_subspace(ctx, dynkin, -1), grading_subspace(ctx, shifted, 0));
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& b : l1.basis()) {
      if (b.entries().size() != 1 || b.entries().begin()->second != 1) {
        ok = false;
        break;
      }
      const auto& key = b.entries().begin()->first;
      got.insert({box_str(box_of(ctx, key.first)), box_str(box_of(ctx, key.second))});
    }
    std::set<std::pair<std::string, std::string>> want = {
        {"1", "b1"}, {"2", "b2"}, {"2", "3"}, {"2", "b4"}};
    ok = ok && got == want;
    ok = ok && sum(parabolic(ctx, dynkin), l1) == parabolic(ctx, shifted);
    if (!ok) {
      why = "mismatch at p = " + std::to_string(p);
      break;
    }
  }
  double dt = seconds_since(start);
  ok = ok && dt < 1.0;
  report(1, ok,
         "golden gl(4|3) example, p in {3,5,7}: dim p = (17,14), dim g(-1) = (2,6), "
         "dim p' = (18,17), p' \\ p basis exact" +
             (why.empty() ? "" : "; " + why) + " [" + std::to_string(dt) + "s]");
}

SweepResult sweep_result_for_criteria_2_3_5() {
  SweepConfig cfg;
  cfg.max_size = 8;
  cfg.primes = {3, 5, 7};
  cfg.kinds = {AlgebraKind::gl, AlgebraKind::sl};
  cfg.levi_random = 0;
  const char* env = std::getenv("KWMOD_THREADS");
  cfg.threads = env ? std::max(1, std::atoi(env)) : 1;
  return run_sweep(cfg);
}

void criteria_2_3(const SweepResult& result, double dt) {
  // criterion 2: every check of every instance passes
  int verified = 0, skipped_instances = 0;
  for (const auto& rep : result.reports) {
    bool constructed = true;
    for (const auto& [name, res] : rep.checks)
      if (res.status == CheckStatus::skipped && name == "instance_constructible")
        constructed = false;
    if (constructed)
      ++verified;
    else
      ++skipped_instances;
  }
  bool ok2 = result.failures() == 0 && verified > 0 && dt < 300.0;
  report(2, ok2,
         "exhaustive sweep m+n <= 8, p in {3,5,7}, gl/sl: " + std::to_string(verified) +
             " instances verified, " + std::to_string(skipped_instances) +
             " sl instances skipped (p | m-n), " + std::to_string(result.failures()) +
             " failures [" + std::to_string(dt) + "s]");

  // criterion 3: the oracle check ran and passed on every verified instance
  int oracle_checked = 0;
  bool ok3 = true;
  for (const auto& rep : result.reports)
    for (const auto& [name, res] : rep.checks)
      if (name == "centralizer_formula_agrees") {
        ++oracle_checked;
        ok3 = ok3 && res.status == CheckStatus::pass;
      }
  ok3 = ok3 && oracle_checked == verified;
  report(3, ok3,
         "centralizer kernel = combinatorial formula on " + std::to_string(oracle_checked) +
             " instances");
}

void criterion_5(const SweepResult& result) {
  // 5a: kw dims agree across kinds whenever sl exists
  int compared = 0;
  bool ok5 = true;
  for (const auto& rep : result.reports)
    for (const auto& [name, res] : rep.checks)
      if (name == "kw_dims_match_gl") {
        ++compared;
        ok5 = ok5 && res.status == CheckStatus::pass;
      }
  ok5 = ok5 && compared > 0;
  // 5b: typed rejection of sl with p | m-n
  bool rejected = false;
  try {
    AlgebraContext bad(4, 1, 3, AlgebraKind::sl);
    (void)bad;
  } catch (const error& e) {
    rejected = e.code() == errc::invalid_context;
  }
  ok5 = ok5 && rejected;
  report(5, ok5,
         "kw dims gl = sl on " + std::to_string(compared) +
             " instances; sl with p | m-n rejected with InvalidContext");
}

void criterion_4() {
  auto start = Clock::now();
  std::mt19937_64 rng(20240001);
  const std::vector<std::uint32_t> primes{3, 5, 7};
  int verified = 0;
  bool ok = true;
  std::string why;
  while (verified < 200) {
    int m = static_cast<int>(draw(rng, 6)); // m, n <= 5
    int n = static_cast<int>(draw(rng, 6));
    std::uint32_t p = primes[draw(rng, primes.size())];
    AlgebraKind kind = draw(rng, 2) ? AlgebraKind::sl : AlgebraKind::gl;
    if (kind == AlgebraKind::sl) {
      int d = ((m - n) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p);
      if (d == 0) kind = AlgebraKind::gl;
    }
    LeviInstance inst = random_levi_instance(rng, m, n, p, kind);
    VerificationReport rep = verify_levi_instance(inst);
    ++verified;
    if (rep.failures() != 0) {
      ok = false;
      why = rep.summary();
      break;
    }
    bool saw_xi = false, saw_bound = false;
    for (const auto& [name, res] : rep.checks) {
      saw_xi = saw_xi || (name == "xi_vanishes_on_u" && res.status == CheckStatus::pass);
      saw_bound = saw_bound || (name == "bound_product" && res.status == CheckStatus::pass);
    }
    if (!saw_xi || !saw_bound) {
      ok = false;
      why = "missing xi/bound check on " + rep.instance.str();
      break;
    }
  }
  double dt = seconds_since(start);
  ok = ok && dt < 120.0;
  report(4, ok,
         std::to_string(verified) + " random (s, Jordan) instances, m,n <= 5, p in {3,5,7}: "
         "Levi identities, xi(u) = 0, bound factorization" +
             (why.empty() ? "" : "; " + why) + " [" + std::to_string(dt) + "s]");
}

} // namespace

int main() {
  criterion_1();
  auto start = Clock::now();
  SweepResult result = sweep_result_for_criteria_2_3_5();
  double dt = seconds_since(start);
  criteria_2_3(result, dt);
  criterion_4();
  criterion_5(result);
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
