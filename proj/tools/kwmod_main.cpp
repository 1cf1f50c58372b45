// kwmod: pyramid gradings of gl(m|n)/sl(m|n) over F_p and the dimension
// identities behind Kac-Weisfeiler modules.
//
// Subcommands: inspect, sweep, render, levi. Exit codes: 0 success,
// 1 verification failure, 2 invalid input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kwmod/json_io.hpp"
#include "kwmod/sweep.hpp"

using namespace kwmod;

namespace {

int env_threads() {
  const char* env = std::getenv("KWMOD_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t < 1 ? 1 : t;
}

AlgebraKind parse_kind(const std::string& s) {
  if (s == "gl") return AlgebraKind::gl;
  if (s == "sl") return AlgebraKind::sl;
  throw error(errc::bad_argument, "kind must be gl or sl");
}

void print_report(std::ostream& os, const VerificationReport& rep) {
  os << rep.instance.str() << "\n";
  for (const auto& [name, res] : rep.checks) {
    const char* tag = res.status == CheckStatus::pass      ? "pass"
                      : res.status == CheckStatus::skipped ? "skip"
                                                           : "FAIL";
    os << "  [" << tag << "] " << name;
    if (res.status != CheckStatus::pass && !res.detail.empty()) os << "  (" << res.detail << ")";
    os << "\n";
  }
}

struct InstanceArgs {
  int m = 0, n = 0;
  std::uint32_t p = 5;
  std::string kind = "gl";
  std::string r, q;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args, bool with_p) {
  cmd->add_option("--m", args.m, "even box count")->required();
  cmd->add_option("--n", args.n, "odd box count")->required();
  if (with_p) cmd->add_option("--p", args.p, "odd prime")->required();
  cmd->add_option("--kind", args.kind, "gl or sl")->default_val("gl");
  cmd->add_option("--r", args.r, "even partition, e.g. 3,1")->required();
  cmd->add_option("--q", args.q, "odd partition, e.g. 2,1")->required();
}

PartitionPair parse_pair(const InstanceArgs& args) {
  PartitionPair pp{parse_partition(args.r), parse_partition(args.q)};
  if (pp.m() != args.m || pp.n() != args.n)
    throw error(errc::invalid_partition_pair,
                "(r|q) = " + pp.str() + " is a partition of (" + std::to_string(pp.m()) + "|" +
                    std::to_string(pp.n()) + "), not of (" + std::to_string(args.m) + "|" +
                    std::to_string(args.n) + ")");
  return pp;
}

int run_inspect(const InstanceArgs& args, bool as_json, const std::string& out_path) {
  AlgebraContext ctx(args.m, args.n, args.p, parse_kind(args.kind));
  PartitionPair pp = parse_pair(args);

  VerificationReport rep = verify_nilpotent_instance(ctx, pp);

  if (as_json) {
    nlohmann::json doc = to_json(rep);
    if (out_path.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) throw error(errc::bad_argument, "cannot open " + out_path);
      out << doc.dump(2) << "\n";
    }
    return rep.failures() == 0 ? 0 : 1;
  }

  Pyramid dynkin = dynkin_pyramid(pp);
  Pyramid shifted = shift_pyramid(dynkin);
  Pyramid young = young_pyramid(pp);
  SuperMatrix e = nilpotent_e(ctx, pp);

  std::cout << "instance: " << rep.instance.str() << "\n";
  std::cout << "e = " << e.str() << "\n\n";
  std::cout << "Dynkin pyramid:\n" << render_ascii(dynkin);
  std::cout << "shifted pyramid:\n" << render_ascii(shifted);
  std::cout << "Young pyramid:\n" << render_ascii(young) << "\n";

  std::cout << "graded pieces (Dynkin):\n";
  for (const auto& [k, piece] : pyramid_grading(ctx, dynkin))
    std::cout << "  g(" << k << ") sdim " << piece.sdim().str() << "\n";
  std::cout << "sdim p  = " << parabolic(ctx, dynkin).sdim().str() << "\n";
  std::cout << "sdim p' = " << parabolic(ctx, shifted).sdim().str() << "\n";

  KwDims d = kw_dims(ctx, e);
  std::cout << "kw dims  = " << d.str() << "\n";
  std::cout << "kw bound = " << kw_bound(d).str(ctx.p()) << "\n\n";
  print_report(std::cout, rep);
  return rep.failures() == 0 ? 0 : 1;
}

int run_render(const InstanceArgs& args, const std::string& which, bool numbered,
               const std::string& svg_path) {
  PartitionPair pp = parse_pair(args);
  RenderOptions opts{numbered};
  Pyramid dynkin = dynkin_pyramid(pp);
  auto pick = [&](const std::string& name) -> Pyramid {
    if (name == "dynkin") return dynkin;
    if (name == "shifted") return shift_pyramid(dynkin);
    if (name == "young") return young_pyramid(pp);
    throw error(errc::bad_argument, "pyramid must be dynkin, shifted, young or all");
  };
  if (!svg_path.empty()) {
    if (which == "all") throw error(errc::bad_argument, "--svg needs a single pyramid choice");
    std::ofstream out(svg_path);
    if (!out) throw error(errc::bad_argument, "cannot open " + svg_path);
    out << render_svg(pick(which), opts);
    std::cout << "wrote " << svg_path << "\n";
    return 0;
  }
  if (which == "all") {
    for (const char* name : {"dynkin", "shifted", "young"})
      std::cout << name << ":\n" << render_ascii(pick(name), opts) << "\n";
  } else {
    std::cout << render_ascii(pick(which), opts);
  }
  return 0;
}

int cmd_sweep(SweepConfig cfg, const std::string& out_path) {
  cfg.threads = env_threads();
  SweepResult result = run_sweep(cfg);
  std::cout << "instances: " << result.instances() << " (" << result.levi_reports.size()
            << " random p-character), skipped checks: " << result.skipped()
            << ", failures: " << result.failures() << "\n";
  for (const auto& r : result.reports)
    if (r.failures() > 0) print_report(std::cout, r);
  for (const auto& r : result.levi_reports)
    if (r.failures() > 0) print_report(std::cout, r);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw error(errc::bad_argument, "cannot open " + out_path);
    out << to_json(result).dump(2) << "\n";
    std::cout << "wrote " << out_path << "\n";
  }
  return result.failures() == 0 ? 0 : 1;
}

int run_levi(int m, int n, std::uint32_t p, const std::string& kind, const std::string& s_text,
             const std::vector<std::string>& block_texts, bool as_json) {
  AlgebraContext ctx(m, n, p, parse_kind(kind));
  SemisimplePart s = parse_semisimple(ctx, s_text);
  BlockTypes types;
  for (const auto& text : block_texts) {
    auto [lambda, pp] = parse_block_type(ctx, text);
    if (types.count(lambda))
      throw error(errc::bad_argument, "eigenvalue " + std::to_string(lambda) + " given twice");
    types[lambda] = pp;
  }
  VerificationReport rep = check_levi_identities(ctx, s, types);
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    print_report(std::cout, rep);
    if (rep.bound) std::cout << "kw bound = " << rep.bound->str(p) << "\n";
  }
  return rep.failures() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pyramid gradings and Kac-Weisfeiler dimension checks for gl(m|n)/sl(m|n)"};
  app.require_subcommand(1);

  // inspect
  InstanceArgs inspect_args;
  bool inspect_json = false;
  std::string inspect_out;
  CLI::App* inspect = app.add_subcommand("inspect", "pyramids, gradings and the full battery");
  add_instance_options(inspect, inspect_args, true);
  inspect->add_flag("--json", inspect_json, "emit the verification report as JSON");
  inspect->add_option("--out", inspect_out, "write the JSON report to a file");

  // render
  InstanceArgs render_args;
  std::string render_which = "all";
  bool render_numbered = false;
  std::string render_svg_path;
  CLI::App* render = app.add_subcommand("render", "draw the pyramids");
  add_instance_options(render, render_args, false);
  render->add_option("--pyramid", render_which, "dynkin, shifted, young or all")
      ->default_val("all");
  render->add_flag("--numbered", render_numbered, "label boxes instead of +/- signs");
  render->add_option("--svg", render_svg_path, "write an SVG file");

  // sweep
  SweepConfig cfg;
  std::string sweep_out;
  std::string sweep_kinds = "gl,sl";
  std::string sweep_primes = "3,5,7";
  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive verification up to a size bound");
  sweep->add_option("--max-size", cfg.max_size, "bound on m+n")->required();
  sweep->add_option("--primes", sweep_primes, "comma-separated odd primes")->default_val("3,5,7");
  sweep->add_option("--kinds", sweep_kinds, "subset of gl,sl")->default_val("gl,sl");
  sweep->add_option("--seed", cfg.seed, "seed for the random p-character instances");
  sweep->add_option("--levi-random", cfg.levi_random,
                    "random p-character instances per (m,n) size");
  sweep->add_option("--out", sweep_out, "write the aggregate JSON report here");

  // levi
  int levi_m = 0, levi_n = 0;
  std::uint32_t levi_p = 5;
  std::string levi_kind = "gl", levi_s;
  std::vector<std::string> levi_blocks;
  bool levi_json = false;
  CLI::App* levi = app.add_subcommand("levi", "arbitrary p-character reduction checks");
  levi->add_option("--m", levi_m, "even box count")->required();
  levi->add_option("--n", levi_n, "odd box count")->required();
  levi->add_option("--p", levi_p, "odd prime")->required();
  levi->add_option("--kind", levi_kind, "gl or sl")->default_val("gl");
  levi->add_option("--s", levi_s, "diagonal of s, e.g. \"0,1|0\"")->required();
  levi->add_option("--block", levi_blocks, "Jordan type per eigenvalue, e.g. \"0:3,1|2,1\"");
  levi->add_flag("--json", levi_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inspect) return run_inspect(inspect_args, inspect_json, inspect_out);
    if (*render)
      return run_render(render_args, render_which, render_numbered, render_svg_path);
    if (*sweep) {
      cfg.primes.clear();
      {
        std::stringstream ss(sweep_primes);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.primes.push_back(std::stoul(item));
      }
      cfg.kinds.clear();
      {
        std::stringstream ss(sweep_kinds);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.kinds.push_back(parse_kind(item));
      }
      return cmd_sweep(cfg, sweep_out);
    }
    if (*levi)
      return run_levi(levi_m, levi_n, levi_p, levi_kind, levi_s, levi_blocks, levi_json);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
