#include "kwmod/json_io.hpp"

namespace kwmod {

using nlohmann::json;

json to_json(const SuperMatrix& x) {
  json out = json::array();
  for (const auto& [key, val] : x.entries()) {
    out.push_back({{"row", box_str(box_of(x.ctx(), key.first))},
                   {"col", box_str(box_of(x.ctx(), key.second))},
                   {"val", val}});
  }
  return out;
}

json to_json(const ExponentDim& b) {
  return {{"p_exp", b.p_exp}, {"two_exp", b.two_exp}};
}

static std::string status_str(const CheckResult& res) {
  switch (res.status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return res.detail.empty() ? "fail" : "fail: " + res.detail;
    case CheckStatus::skipped:
      return res.detail.empty() ? "skipped" : "skipped: " + res.detail;
  }
  return "unknown";
}

json to_json(const VerificationReport& rep) {
  json instance{{"m", rep.instance.m},
                {"n", rep.instance.n},
                {"p", rep.instance.p},
                {"kind", kind_name(rep.instance.kind)}};
  if (rep.instance.pp) {
    instance["r"] = rep.instance.pp->r.parts;
    instance["q"] = rep.instance.pp->q.parts;
  }
  if (!rep.instance.extra.empty()) instance["detail"] = rep.instance.extra;

  json checks = json::object();
  for (const auto& [name, res] : rep.checks) checks[name] = status_str(res);

  json out{{"schema", 1}, {"instance", instance}, {"checks", checks}};
  if (rep.bound) out["kw_bound"] = to_json(*rep.bound);
  if (!rep.notes.empty()) {
    json notes = json::object();
    for (const auto& [k, v] : rep.notes) notes[k] = v;
    out["notes"] = notes;
  }
  return out;
}

json to_json(const SweepResult& result) {
  json kinds = json::array();
  for (AlgebraKind k : result.config.kinds) kinds.push_back(kind_name(k));
  json cfg{{"max_size", result.config.max_size},
           {"primes", result.config.primes},
           {"kinds", kinds},
           {"seed", result.config.seed},
           {"levi_random", result.config.levi_random}};
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  json levi = json::array();
  for (const auto& r : result.levi_reports) levi.push_back(to_json(r));
  return {{"schema", 1},
          {"config", cfg},
          {"summary",
           {{"instances", result.instances()},
            {"failures", result.failures()},
            {"skipped", result.skipped()}}},
          {"reports", reports},
          {"levi_reports", levi}};
}

} // namespace kwmod
