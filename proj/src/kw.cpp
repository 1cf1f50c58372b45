#include "kwmod/kw.hpp"

#include <cmath>
#include <sstream>

namespace kwmod {

std::string ExponentDim::str(std::uint32_t p) const {
  std::string out = std::to_string(p) + "^" + std::to_string(p_exp) + " * 2^" +
                    std::to_string(two_exp);
  if (auto v = small_value(p)) out += " = " + std::to_string(*v);
  return out;
}

std::optional<unsigned long long> ExponentDim::small_value(std::uint32_t p) const {
  long double bits = static_cast<long double>(p_exp) * std::log2(static_cast<long double>(p)) +
                     static_cast<long double>(two_exp);
  if (p_exp < 0 || two_exp < 0 || bits > 62.0L) return std::nullopt;
  unsigned long long v = 1;
  for (long long i = 0; i < p_exp; ++i) v *= p;
  for (long long i = 0; i < two_exp; ++i) v *= 2;
  return v;
}

std::string InstanceDesc::str() const {
  std::ostringstream os;
  os << kind_name(kind) << "(" << m << "|" << n << "), p=" << p;
  if (pp) os << ", (r|q)=" << pp->str();
  if (!extra.empty()) os << ", " << extra;
  return os.str();
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& detail) {
  for (const auto& [existing, res] : checks) {
    (void)res;
    if (existing == name) throw error(errc::bad_argument, "duplicate check " + name);
  }
  checks.emplace_back(name, CheckResult{ok ? CheckStatus::pass : CheckStatus::fail, detail});
}

void VerificationReport::add_skipped(const std::string& name, const std::string& why) {
  for (const auto& [existing, res] : checks) {
    (void)res;
    if (existing == name) throw error(errc::bad_argument, "duplicate check " + name);
  }
  checks.emplace_back(name, CheckResult{CheckStatus::skipped, why});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [name, res] : other.checks) {
    if (res.status == CheckStatus::skipped)
      add_skipped(name, res.detail);
    else
      add(name, res.status == CheckStatus::pass, res.detail);
  }
}

void VerificationReport::note(const std::string& key, const std::string& value) {
  notes.emplace_back(key, value);
}

int VerificationReport::failures() const {
  int bad = 0;
  for (const auto& [name, res] : checks) {
    (void)name;
    if (res.status == CheckStatus::fail) ++bad;
  }
  return bad;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << instance.str() << ": " << checks.size() << " checks, " << failures() << " failures";
  return os.str();
}

Subspace centralizer(const AlgebraContext& ctx, const SuperMatrix& x) {
  if (x.parity() == MatrixParity::mixed || x.parity() == MatrixParity::odd)
    throw error(errc::parity_violation, "centralizer requires an even element");
  Subspace g = full_algebra(ctx);
  FpMatrix lifted_even(ctx.field, 0, ctx.coords());
  FpMatrix lifted_odd(ctx.field, 0, ctx.coords());
  for (Parity par : {Parity::even, Parity::odd}) {
    const FpMatrix& rows = g.rows(par);
    if (rows.rows() == 0) continue;
    FpMatrix mat = bracket_matrix(x, rows, rows);
    KernelBasis ker = kernel(mat);
    FpMatrix lift = matmul(ker.vectors, rows);
    (par == Parity::even ? lifted_even : lifted_odd) = std::move(lift);
  }
  return Subspace::from_rows(ctx, std::move(lifted_even), std::move(lifted_odd));
}

KwDims kw_dims(const AlgebraContext& ctx, const SuperMatrix& x) {
  SDim whole = ctx.algebra_sdim();
  SDim fixed = centralizer(ctx, x).sdim();
  return {whole.even - fixed.even, whole.odd - fixed.odd};
}

ExponentDim kw_bound(const KwDims& d) {
  if (d.d0 % 2 != 0)
    throw error(errc::odd_d0, "d0 = " + std::to_string(d.d0) + " is odd");
  return {d.d0 / 2, (d.d1 + 1) / 2};
}

ExponentDim uchi_dimension(const AlgebraContext& ctx) {
  SDim g = ctx.algebra_sdim();
  return {g.even, g.odd};
}

namespace {

SDim sdim_at(const std::map<int, Subspace>& grading, int k) {
  auto it = grading.find(k);
  return it == grading.end() ? SDim{} : it->second.sdim();
}

const Subspace* piece_at(const std::map<int, Subspace>& grading, int k) {
  auto it = grading.find(k);
  return it == grading.end() ? nullptr : &it->second;
}

} // namespace

VerificationReport check_dynkin_properties(const AlgebraContext& ctx, const PartitionPair& pp) {
  VerificationReport rep;
  rep.instance = {ctx.m, ctx.n, ctx.p(), ctx.kind, pp, ""};
  auto grading = dynkin_grading(ctx, pp);
  SuperMatrix e = nilpotent_e(ctx, pp);
  Subspace zero = Subspace::zero(ctx);
  int min_deg = grading.empty() ? 0 : grading.begin()->first;
  int max_deg = grading.empty() ? 0 : grading.rbegin()->first;

  // (1) ad e : g(j) -> g(j+2) injective for j <= -1
  {
    bool ok = true;
    std::string why;
    for (int j = min_deg; j <= -1 && ok; ++j) {
      const Subspace* dom = piece_at(grading, j);
      if (!dom) continue;
      const Subspace* codom = piece_at(grading, j + 2);
      for (Parity par : {Parity::even, Parity::odd}) {
        const FpMatrix& drows = dom->rows(par);
        if (drows.rows() == 0) continue;
        FpMatrix mat = bracket_matrix(e, drows, codom ? codom->rows(par) : zero.rows(par));
        if (rank(mat) != drows.rows()) {
          ok = false;
          why = "ad e not injective on degree " + std::to_string(j);
          break;
        }
      }
    }
    rep.add("dynkin_1_injective", ok, why);
  }
  // (2) surjective for j >= -1
  {
    bool ok = true;
    std::string why;
    for (int j = -1; j <= max_deg && ok; ++j) {
      const Subspace* dom = piece_at(grading, j);
      const Subspace* codom = piece_at(grading, j + 2);
      if (!codom) continue;
      for (Parity par : {Parity::even, Parity::odd}) {
        const FpMatrix& crows = codom->rows(par);
        if (crows.rows() == 0) continue;
        if (!dom) {
          ok = false;
          why = "degree " + std::to_string(j + 2) + " not reached";
          break;
        }
        FpMatrix mat = bracket_matrix(e, dom->rows(par), crows);
        if (rank(mat) != crows.rows()) {
          ok = false;
          why = "ad e not surjective onto degree " + std::to_string(j + 2);
          break;
        }
      }
    }
    rep.add("dynkin_2_surjective", ok, why);
  }
  // (3) each piece splits by parity and the pieces exhaust the algebra
  {
    SDim total{};
    for (const auto& [k, piece] : grading) {
      (void)k;
      total = total + piece.sdim();
    }
    rep.add("dynkin_3_parity_split", total == ctx.algebra_sdim(),
            total == ctx.algebra_sdim() ? "" : "graded pieces sum to " + total.str());
  }
  Subspace ge = centralizer(ctx, e);
  // (4) e in g(2) even, and the centralizer meets no negative degree
  {
    const Subspace* g2 = piece_at(grading, 2);
    bool ok = e.parity() == MatrixParity::even;
    if (ok) ok = e.is_zero() || (g2 && g2->contains(e));
    std::string why = ok ? "" : "e outside g(2)_even";
    for (int k = min_deg; k < 0 && ok; ++k) {
      const Subspace* piece = piece_at(grading, k);
      if (!piece) continue;
      if (!(intersect(ge, *piece).sdim() == SDim{})) {
        ok = false;
        why = "centralizer meets degree " + std::to_string(k);
      }
    }
    rep.add("dynkin_4_e_position", ok, why);
  }
  // (5) sdim g^e = sdim g(0) + sdim g(1)
  {
    SDim want = sdim_at(grading, 0) + sdim_at(grading, 1);
    rep.add("dynkin_5_centralizer_dim", ge.sdim() == want,
            "g^e " + ge.sdim().str() + " vs g(0)+g(1) " + want.str());
  }
  // (6) (g(k), g(l)) = 0 unless k + l = 0, and sdim g(k) = sdim g(-k)
  {
    bool ok = true;
    std::string why;
    for (const auto& [k, pk] : grading) {
      if (!(sdim_at(grading, k) == sdim_at(grading, -k))) {
        ok = false;
        why = "sdim g(" + std::to_string(k) + ") != sdim g(" + std::to_string(-k) + ")";
        break;
      }
      for (const auto& [l, pl] : grading) {
        if (k + l == 0) continue;
        for (const auto& a : pk.basis())
          for (const auto& b : pl.basis())
            if (supertrace_form(a, b) != 0) {
              ok = false;
              why = "degrees " + std::to_string(k) + "," + std::to_string(l) + " not orthogonal";
              goto done6;
            }
      }
    }
  done6:
    rep.add("dynkin_6_form_orthogonality", ok, why);
  }
  return rep;
}

bool check_dim_identity(const AlgebraContext& ctx, const PartitionPair& pp) {
  auto grading = dynkin_grading(ctx, pp);
  SuperMatrix e = nilpotent_e(ctx, pp);
  KwDims d = kw_dims(ctx, e);
  SDim rhs{};
  for (const auto& [k, piece] : grading) {
    if (k == -1) rhs = rhs + piece.sdim();
    if (k <= -2) rhs = rhs + piece.sdim() * 2;
  }
  return d.d0 == rhs.even && d.d1 == rhs.odd;
}

bool check_gradings_agree(const AlgebraContext& ctx, const PartitionPair& pp) {
  auto from_weights = dynkin_grading(ctx, pp);
  auto from_pyramid = pyramid_grading(ctx, dynkin_pyramid(pp));
  if (from_weights.size() != from_pyramid.size()) return false;
  for (const auto& [k, piece] : from_weights) {
    auto it = from_pyramid.find(k);
    if (it == from_pyramid.end() || !(it->second == piece)) return false;
  }
  return true;
}

bool check_degree_shift(const AlgebraContext& ctx, const PartitionPair& pp) {
  (void)ctx;
  Pyramid p = dynkin_pyramid(pp);
  Pyramid shifted = shift_pyramid(p);
  for (BoxId i : p.boxes())
    for (BoxId j : p.boxes()) {
      int d = degree(p, i, j);
      int ds = degree(shifted, i, j);
      if (d % 2 == 0 && ds != d) return false;
      if (d % 2 != 0 && ds != d - 1 && ds != d + 1) return false;
    }
  return true;
}

VerificationReport check_parabolic_identity(const AlgebraContext& ctx, const PartitionPair& pp) {
  VerificationReport rep;
  rep.instance = {ctx.m, ctx.n, ctx.p(), ctx.kind, pp, ""};
  Pyramid dynkin = dynkin_pyramid(pp);
  Pyramid shifted = shift_pyramid(dynkin);
  Subspace para = parabolic(ctx, dynkin);
  Subspace para_shifted = parabolic(ctx, shifted);
  Subspace g_minus1 = grading_subspace(ctx, dynkin, -1);
  Subspace l1 = intersect(g_minus1, grading_subspace(ctx, shifted, 0));
  Subspace l2 = intersect(g_minus1, grading_subspace(ctx, shifted, -2));

  rep.add("parabolic_inclusion", para_shifted.contains(para));
  rep.add("parabolic_l1_l2_split",
          sum(l1, l2) == g_minus1 && intersect(l1, l2).sdim() == SDim{},
          "g(-1) = " + g_minus1.sdim().str() + ", l1 = " + l1.sdim().str() +
              ", l2 = " + l2.sdim().str());
  rep.add("parabolic_half_dim",
          l1.sdim() == l2.sdim() && l1.sdim() * 2 == g_minus1.sdim());
  rep.add("parabolic_direct_sum",
          sum(para, l1) == para_shifted && intersect(para, l1).sdim() == SDim{});
  rep.add("parabolic_dim_identity",
          para_shifted.sdim() * 2 == para.sdim() * 2 + g_minus1.sdim(),
          "p' = " + para_shifted.sdim().str() + ", p = " + para.sdim().str());
  return rep;
}

ExponentDim induced_dimension(const AlgebraContext& ctx, const PartitionPair& pp) {
  Pyramid shifted = shift_pyramid(dynkin_pyramid(pp));
  Subspace para_shifted = parabolic(ctx, shifted);
  SuperMatrix e = nilpotent_e(ctx, pp);
  ChiFunctional chi = chi_functional(ctx, e);
  if (!chi.vanishes_on(para_shifted))
    throw error(errc::chi_nonzero_on_parabolic, "chi does not vanish on p'");
  SDim g = ctx.algebra_sdim();
  SDim sub = para_shifted.sdim();
  return {g.even - sub.even, g.odd - sub.odd};
}

VerificationReport verify_nilpotent_instance(const AlgebraContext& ctx,
                                             const PartitionPair& pp) {
  VerificationReport rep;
  rep.instance = {ctx.m, ctx.n, ctx.p(), ctx.kind, pp, ""};

  auto guarded = [&rep](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const error& e) {
      rep.add(name, false, e.what());
    }
  };

  guarded("gradings_agree", [&] { rep.add("gradings_agree", check_gradings_agree(ctx, pp)); });
  guarded("dynkin_properties", [&] { rep.merge(check_dynkin_properties(ctx, pp)); });
  guarded("dim_identity", [&] { rep.add("dim_identity", check_dim_identity(ctx, pp)); });
  guarded("shifted_pyramid_even", [&] {
    rep.add("shifted_pyramid_even", is_even_pyramid(shift_pyramid(dynkin_pyramid(pp))));
  });
  guarded("young_pyramid_even",
          [&] { rep.add("young_pyramid_even", is_even_pyramid(young_pyramid(pp))); });
  guarded("degree_shift", [&] { rep.add("degree_shift", check_degree_shift(ctx, pp)); });
  guarded("parabolic_identity", [&] { rep.merge(check_parabolic_identity(ctx, pp)); });

  guarded("chi_vanishes_on_p", [&] {
    ChiFunctional chi = chi_functional(ctx, nilpotent_e(ctx, pp));
    rep.add("chi_vanishes_on_p", chi.vanishes_on(parabolic(ctx, dynkin_pyramid(pp))));
  });
  guarded("chi_vanishes_on_p_prime", [&] {
    ChiFunctional chi = chi_functional(ctx, nilpotent_e(ctx, pp));
    rep.add("chi_vanishes_on_p_prime",
            chi.vanishes_on(parabolic(ctx, shift_pyramid(dynkin_pyramid(pp)))));
  });

  // combinatorial centralizer dimension against the kernel computation
  guarded("centralizer_formula_agrees", [&] {
    auto [even_dim, odd_dim] = centralizer_dims_formula(pp);
    AlgebraContext glctx(ctx.m, ctx.n, ctx.p(), AlgebraKind::gl);
    SDim kerdim = centralizer(glctx, nilpotent_e(glctx, pp)).sdim();
    bool ok = kerdim == SDim{even_dim, odd_dim};
    if (ctx.kind == AlgebraKind::sl) {
      SDim sldim = centralizer(ctx, nilpotent_e(ctx, pp)).sdim();
      ok = ok && sldim == SDim{even_dim - 1, odd_dim};
    }
    rep.add("centralizer_formula_agrees", ok,
            "formula (" + std::to_string(even_dim) + "," + std::to_string(odd_dim) +
                "), kernel " + kerdim.str());
  });

  guarded("young_parabolic_dim", [&] {
    // the Young parabolic has the same size as p': 2 dim p_Y = dim g + dim g^e
    SDim py = parabolic(ctx, young_pyramid(pp)).sdim();
    SDim ge = centralizer(ctx, nilpotent_e(ctx, pp)).sdim();
    rep.add("young_parabolic_dim", py * 2 == ctx.algebra_sdim() + ge);
  });

  guarded("kw_bound", [&] {
    SuperMatrix e = nilpotent_e(ctx, pp);
    KwDims d = kw_dims(ctx, e);
    rep.add("d0_even", d.d0 % 2 == 0, "d0 = " + std::to_string(d.d0));
    rep.add("d1_even", d.d1 % 2 == 0, "d1 = " + std::to_string(d.d1));
    ExponentDim bound = kw_bound(d);
    rep.bound = bound;
    ExponentDim induced = induced_dimension(ctx, pp);
    rep.add("induced_dim_equals_kw_bound", induced == bound,
            "induced " + induced.str(ctx.p()) + ", bound " + bound.str(ctx.p()));
    if (ctx.kind == AlgebraKind::sl) {
      AlgebraContext glctx(ctx.m, ctx.n, ctx.p(), AlgebraKind::gl);
      KwDims dgl = kw_dims(glctx, nilpotent_e(glctx, pp));
      rep.add("kw_dims_match_gl", d == dgl, "sl " + d.str() + ", gl " + dgl.str());
    }
  });

  return rep;
}

} // namespace kwmod
