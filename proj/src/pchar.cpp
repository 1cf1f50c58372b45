#include "kwmod/pchar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kwmod {

std::string SemisimplePart::str() const {
  std::string out;
  for (size_t i = 0; i < even_diag.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(even_diag[i]);
  }
  out += "|";
  for (size_t i = 0; i < odd_diag.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(odd_diag[i]);
  }
  return out;
}

namespace {

std::vector<std::uint32_t> parse_diag(const AlgebraContext& ctx, const std::string& text,
                                      int want) {
  std::vector<std::uint32_t> out;
  std::string trimmed = text;
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (!trimmed.empty()) {
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(ctx.field.reduce(std::stoll(item)));
      } catch (const std::exception&) {
        throw error(errc::bad_argument, "cannot parse diagonal entry '" + item + "'");
      }
    }
  }
  if (static_cast<int>(out.size()) != want)
    throw error(errc::bad_argument, "expected " + std::to_string(want) +
                                        " diagonal entries, got " + std::to_string(out.size()));
  return out;
}

} // namespace

SemisimplePart parse_semisimple(const AlgebraContext& ctx, const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw error(errc::bad_argument, "semisimple part needs the form \"evens|odds\"");
  SemisimplePart s;
  s.even_diag = parse_diag(ctx, text.substr(0, bar), ctx.m);
  s.odd_diag = parse_diag(ctx, text.substr(bar + 1), ctx.n);
  if (ctx.kind == AlgebraKind::sl && semisimple_matrix(ctx, s).supertrace() != 0)
    throw error(errc::bad_argument, "semisimple part has nonzero supertrace, not in sl");
  return s;
}

SuperMatrix semisimple_matrix(const AlgebraContext& ctx, const SemisimplePart& s) {
  if (static_cast<int>(s.even_diag.size()) != ctx.m ||
      static_cast<int>(s.odd_diag.size()) != ctx.n)
    throw error(errc::bad_argument, "diagonal length disagrees with (m|n)");
  SuperMatrix out(ctx);
  for (int i = 0; i < ctx.m; ++i) out.add_entry(even_box(i + 1), even_box(i + 1), s.even_diag[i]);
  for (int i = 0; i < ctx.n; ++i) out.add_entry(odd_box(i + 1), odd_box(i + 1), s.odd_diag[i]);
  return out;
}

LeviDecomposition levi_decompose(const AlgebraContext& ctx, const SemisimplePart& s) {
  if (static_cast<int>(s.even_diag.size()) != ctx.m ||
      static_cast<int>(s.odd_diag.size()) != ctx.n)
    throw error(errc::bad_argument, "diagonal length disagrees with (m|n)");

  std::set<std::uint32_t> values(s.even_diag.begin(), s.even_diag.end());
  values.insert(s.odd_diag.begin(), s.odd_diag.end());

  std::vector<LeviBlock> blocks;
  for (std::uint32_t lambda : values) {
    LeviBlock b;
    b.eigenvalue = lambda;
    for (int i = 0; i < ctx.m; ++i)
      if (s.even_diag[i] == lambda) b.even_indices.push_back(i + 1);
    for (int i = 0; i < ctx.n; ++i)
      if (s.odd_diag[i] == lambda) b.odd_indices.push_back(i + 1);
    blocks.push_back(std::move(b));
  }

  auto eigen_of = [&](BoxId b) {
    return b.parity == Parity::even ? s.even_diag[b.index - 1] : s.odd_diag[b.index - 1];
  };
  std::vector<BoxId> all;
  for (int i = 1; i <= ctx.m; ++i) all.push_back(even_box(i));
  for (int i = 1; i <= ctx.n; ++i) all.push_back(odd_box(i));

  std::vector<SuperMatrix> levi_gens, u_gens, uminus_gens;
  for (BoxId i : all)
    for (BoxId j : all) {
      std::uint32_t li = eigen_of(i), lj = eigen_of(j);
      auto unit = SuperMatrix::unit(ctx, i, j);
      if (li == lj)
        levi_gens.push_back(std::move(unit));
      else if (li < lj)
        u_gens.push_back(std::move(unit));
      else
        uminus_gens.push_back(std::move(unit));
    }

  // toral part: traceless combinations of the block centers (sl only; for gl
  // the centers already sit inside the blocks)
  std::vector<SuperMatrix> toral_gens;
  if (ctx.kind == AlgebraKind::sl) {
    std::vector<SuperMatrix> centers;
    std::vector<std::uint32_t> traces;
    for (const auto& b : blocks) {
      SuperMatrix c(ctx);
      for (int i : b.even_indices) c.add_entry(even_box(i), even_box(i), 1);
      for (int i : b.odd_indices) c.add_entry(odd_box(i), odd_box(i), 1);
      traces.push_back(c.supertrace());
      centers.push_back(std::move(c));
    }
    size_t witness = 0;
    while (witness < traces.size() && traces[witness] == 0) ++witness;
    for (size_t i = 0; i < centers.size(); ++i) {
      if (i == witness) continue;
      if (traces[i] == 0) {
        toral_gens.push_back(centers[i]);
      } else {
        std::uint32_t c = ctx.field.div(traces[i], traces[witness]);
        toral_gens.push_back(centers[i] - centers[witness].scaled(c));
      }
    }
  }

  LeviDecomposition dec{ctx,
                        s,
                        std::move(blocks),
                        Subspace::span(ctx, levi_gens),
                        Subspace::span(ctx, u_gens),
                        Subspace::span(ctx, uminus_gens),
                        Subspace::span(ctx, toral_gens)};
  return dec;
}

std::pair<std::uint32_t, PartitionPair> parse_block_type(const AlgebraContext& ctx,
                                                         const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw error(errc::bad_argument, "block type needs the form \"LAMBDA:R|Q\"");
  std::uint32_t lambda;
  try {
    lambda = ctx.field.reduce(std::stoll(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw error(errc::bad_argument, "cannot parse eigenvalue in '" + text + "'");
  }
  std::string rest = text.substr(colon + 1);
  auto bar = rest.find('|');
  if (bar == std::string::npos)
    throw error(errc::bad_argument, "block type needs the form \"LAMBDA:R|Q\"");
  PartitionPair pp{parse_partition(rest.substr(0, bar)), parse_partition(rest.substr(bar + 1))};
  return {lambda, pp};
}

namespace {

Partition trivial_partition(int k) {
  Partition p;
  p.parts.assign(k, 1);
  p.total = k;
  return p;
}

} // namespace

SuperMatrix build_x(LeviDecomposition& dec, const BlockTypes& types) {
  const AlgebraContext& ctx = dec.ctx;
  for (const auto& [lambda, pp] : types) {
    (void)pp;
    bool found = false;
    for (const auto& b : dec.blocks) found = found || b.eigenvalue == lambda;
    if (!found)
      throw error(errc::block_shape_mismatch,
                  "no eigenvalue block " + std::to_string(lambda));
  }

  SuperMatrix x = semisimple_matrix(ctx, dec.s);
  SuperMatrix nil(ctx);
  for (auto& block : dec.blocks) {
    auto it = types.find(block.eigenvalue);
    PartitionPair pp = it != types.end()
                           ? it->second
                           : PartitionPair{trivial_partition(block.block_m()),
                                           trivial_partition(block.block_n())};
    if (pp.m() != block.block_m() || pp.n() != block.block_n())
      throw error(errc::block_shape_mismatch,
                  "type " + pp.str() + " does not partition block (" +
                      std::to_string(block.block_m()) + "|" + std::to_string(block.block_n()) +
                      ") at eigenvalue " + std::to_string(block.eigenvalue));
    block.jordan = pp;
    if (block.block_m() + block.block_n() == 0) continue;
    AlgebraContext local(block.block_m(), block.block_n(), ctx.p(), AlgebraKind::gl);
    SuperMatrix local_e = nilpotent_e(local, pp);
    for (const auto& [key, val] : local_e.entries()) {
      BoxId lr = box_of(local, key.first), lc = box_of(local, key.second);
      BoxId gr = lr.parity == Parity::even ? even_box(block.even_indices[lr.index - 1])
                                           : odd_box(block.odd_indices[lr.index - 1]);
      BoxId gc = lc.parity == Parity::even ? even_box(block.even_indices[lc.index - 1])
                                           : odd_box(block.odd_indices[lc.index - 1]);
      nil.add_entry(gr, gc, val);
    }
  }
  if (!supercommutator(semisimple_matrix(ctx, dec.s), nil).is_zero())
    throw error(errc::block_shape_mismatch, "nilpotent part does not commute with s");
  return x + nil;
}

SuperMatrix build_x(const AlgebraContext& ctx, const SemisimplePart& s, const BlockTypes& types) {
  LeviDecomposition dec = levi_decompose(ctx, s);
  return build_x(dec, types);
}

KwDims levi_kw_dims(const LeviDecomposition& dec) {
  KwDims total{0, 0};
  for (const auto& block : dec.blocks) {
    if (!block.jordan)
      throw error(errc::bad_argument, "levi_kw_dims needs the Jordan types (run build_x)");
    if (block.block_m() + block.block_n() == 0) continue;
    AlgebraContext local(block.block_m(), block.block_n(), dec.ctx.p(), AlgebraKind::gl);
    KwDims d = kw_dims(local, nilpotent_e(local, *block.jordan));
    total.d0 += d.d0;
    total.d1 += d.d1;
  }
  return total;
}

Subspace centralizer_in(const Subspace& domain, const SuperMatrix& x) {
  if (x.parity() != MatrixParity::even)
    throw error(errc::parity_violation, "centralizer requires an even element");
  const AlgebraContext& ctx = domain.ctx();
  FpMatrix lifted_even(ctx.field, 0, ctx.coords());
  FpMatrix lifted_odd(ctx.field, 0, ctx.coords());
  for (Parity par : {Parity::even, Parity::odd}) {
    const FpMatrix& rows = domain.rows(par);
    if (rows.rows() == 0) continue;
    FpMatrix mat = bracket_matrix(x, rows, rows);
    KernelBasis ker = kernel(mat);
    (par == Parity::even ? lifted_even : lifted_odd) = matmul(ker.vectors, rows);
  }
  return Subspace::from_rows(ctx, std::move(lifted_even), std::move(lifted_odd));
}

VerificationReport check_levi_identities(const AlgebraContext& ctx, const SemisimplePart& s,
                                         const BlockTypes& types) {
  VerificationReport rep;
  rep.instance = {ctx.m, ctx.n, ctx.p(), ctx.kind, std::nullopt, "s=" + s.str()};

  LeviDecomposition dec = levi_decompose(ctx, s);
  SuperMatrix x = build_x(dec, types);
  {
    std::ostringstream os;
    os << "s=" << s.str();
    for (const auto& b : dec.blocks)
      os << "; " << b.eigenvalue << ":" << b.jordan->r.str() << "|" << b.jordan->q.str();
    rep.instance.extra = os.str();
  }
  SuperMatrix smat = semisimple_matrix(ctx, s);
  SuperMatrix nil = x - smat;

  auto guarded = [&rep](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const error& e) {
      rep.add(name, false, e.what());
    }
  };

  guarded("levi_dim_is_block_sum", [&] {
    SDim want{};
    for (const auto& b : dec.blocks) {
      want.even += b.block_m() * b.block_m() + b.block_n() * b.block_n();
      want.odd += 2 * b.block_m() * b.block_n();
    }
    if (ctx.kind == AlgebraKind::sl) want.even -= 1;
    rep.add("levi_dim_is_block_sum", dec.levi.sdim() == want,
            "l = " + dec.levi.sdim().str() + ", blocks give " + want.str());
  });
  guarded("levi_is_ad_s_kernel", [&] {
    rep.add("levi_is_ad_s_kernel", centralizer(ctx, smat) == dec.levi);
  });
  guarded("triangular_decomposition", [&] {
    bool dims_ok = ctx.algebra_sdim() == dec.levi.sdim() + dec.nilradical.sdim() * 2 &&
                   dec.nilradical.sdim() == dec.nilradical_minus.sdim();
    rep.add("triangular_decomposition", dims_ok,
            "l = " + dec.levi.sdim().str() + ", u = " + dec.nilradical.sdim().str());
  });
  guarded("xi_vanishes_on_u", [&] {
    bool ok = true;
    for (const auto& b : dec.nilradical.basis()) ok = ok && supertrace_form(x, b) == 0;
    rep.add("xi_vanishes_on_u", ok);
  });
  guarded("p_pi_closed_with_ideal_u", [&] {
    Subspace p_pi = sum(dec.levi, dec.nilradical);
    rep.add("p_pi_closed_with_ideal_u",
            bracket_closed(p_pi) && is_bracket_ideal(dec.nilradical, p_pi));
  });

  Subspace gx = centralizer(ctx, x);
  Subspace ln = centralizer_in(dec.levi, nil);
  KwDims dprime = levi_kw_dims(dec);
  KwDims d = {ctx.algebra_sdim().even - gx.sdim().even, ctx.algebra_sdim().odd - gx.sdim().odd};

  guarded("levi_reduction_identity", [&] {
    SDim lhs = ctx.algebra_sdim() - gx.sdim();
    SDim rhs = dec.nilradical_minus.sdim() * 2 + (dec.levi.sdim() - ln.sdim());
    rep.add("levi_reduction_identity", lhs == rhs,
            "g - g^x = " + lhs.str() + ", 2u⁻ + (l - l^n) = " + rhs.str());
  });
  guarded("dprime_matches_ln", [&] {
    SDim drop = dec.levi.sdim() - ln.sdim();
    rep.add("dprime_matches_ln", drop.even == dprime.d0 && drop.odd == dprime.d1,
            "l - l^n = " + drop.str() + ", d' = " + dprime.str());
  });
  guarded("u_dim_identity", [&] {
    bool even_ok = (d.d0 - dprime.d0) % 2 == 0 &&
                   dec.nilradical.sdim().even == (d.d0 - dprime.d0) / 2;
    bool odd_ok = (d.d1 - dprime.d1) % 2 == 0 &&
                  dec.nilradical.sdim().odd == (d.d1 - dprime.d1) / 2;
    rep.add("u_dim_identity", even_ok && odd_ok,
            "u = " + dec.nilradical.sdim().str() + ", d = " + d.str() + ", d' = " + dprime.str());
  });
  guarded("toral_in_ln", [&] { rep.add("toral_in_ln", ln.contains(dec.toral)); });
  guarded("bound_product", [&] {
    ExponentDim general = kw_bound_general(ctx, s, types);
    ExponentDim direct = kw_bound(d);
    rep.bound = general;
    rep.add("bound_product", general == direct,
            "levi route " + general.str(ctx.p()) + ", direct " + direct.str(ctx.p()));
  });

  rep.note("morita", "U_xi(g) and U_xi(l) are Morita equivalent; induction from p_Pi = l + u");
  if (ctx.kind == AlgebraKind::sl)
    rep.note("block_split", "dimension checks only; the gl/sl split per block is not asserted");
  return rep;
}

ExponentDim kw_bound_general(const AlgebraContext& ctx, const SemisimplePart& s,
                             const BlockTypes& types) {
  LeviDecomposition dec = levi_decompose(ctx, s);
  SuperMatrix x = build_x(dec, types);
  KwDims d = kw_dims(ctx, x);
  KwDims dprime = levi_kw_dims(dec);
  if (dprime.d0 % 2 != 0 || dprime.d1 % 2 != 0)
    throw error(errc::parity_violation, "d' = " + dprime.str() + " not even");
  if (d.d1 % 2 != 0)
    throw error(errc::parity_violation, "d1 = " + std::to_string(d.d1) + " odd");
  if ((d.d0 - dprime.d0) % 2 != 0 || (d.d1 - dprime.d1) % 2 != 0 || d.d0 < dprime.d0 ||
      d.d1 < dprime.d1)
    throw error(errc::parity_violation,
                "d - d' = (" + std::to_string(d.d0 - dprime.d0) + "," +
                    std::to_string(d.d1 - dprime.d1) + ") not an even non-negative pair");
  ExponentDim bound = kw_bound(d); // throws odd_d0 when d0 is odd
  ExponentDim via_levi{dprime.d0 / 2 + (d.d0 - dprime.d0) / 2,
                       dprime.d1 / 2 + (d.d1 - dprime.d1) / 2};
  if (!(via_levi == bound))
    throw error(errc::parity_violation, "factorization through the Levi step broke");
  return bound;
}

std::pair<SemisimplePart, BlockTypes> jordan_pair(const AlgebraContext& ctx,
                                                  const SuperMatrix& x) {
  if (x.parity() != MatrixParity::even)
    throw error(errc::parity_violation, "jordan_pair requires an even element");
  SemisimplePart s;
  s.even_diag.assign(ctx.m, 0u);
  s.odd_diag.assign(ctx.n, 0u);
  for (const auto& [key, val] : x.entries())
    if (key.first == key.second) {
      if (key.first < ctx.m)
        s.even_diag[key.first] = val;
      else
        s.odd_diag[key.first - ctx.m] = val;
    }
  SuperMatrix smat = semisimple_matrix(ctx, s);
  SuperMatrix nil = x - smat;
  if (!supercommutator(smat, nil).is_zero())
    throw error(errc::bad_argument, "off-diagonal part does not commute with the diagonal");
  if (!matpow(nil, ctx.total()).is_zero())
    throw error(errc::bad_argument, "off-diagonal part is not nilpotent");

  LeviDecomposition dec = levi_decompose(ctx, s);
  BlockTypes types;
  for (const auto& block : dec.blocks) {
    auto jordan_type = [&](const std::vector<int>& indices, Parity par) {
      int k = static_cast<int>(indices.size());
      FpMatrix local(ctx.field, k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          BoxId ra = par == Parity::even ? even_box(indices[a]) : odd_box(indices[a]);
          BoxId cb = par == Parity::even ? even_box(indices[b]) : odd_box(indices[b]);
          local.set(a, b, nil.entry(ra, cb));
        }
      // kernel growth of the powers gives the conjugate partition
      std::vector<int> conj;
      FpMatrix power = local;
      int prev = 0;
      for (int j = 1; j <= k && prev < k; ++j) {
        int dim = kernel(power).dim();
        conj.push_back(dim - prev);
        prev = dim;
        power = matmul(power, local);
      }
      std::vector<int> parts;
      for (int i = 1; !conj.empty() && i <= conj[0]; ++i) {
        int count = 0;
        for (int c : conj) count += (c >= i) ? 1 : 0;
        if (count > 0) parts.push_back(count);
      }
      return validate_partition(parts);
    };
    PartitionPair pp{jordan_type(block.even_indices, Parity::even),
                     jordan_type(block.odd_indices, Parity::odd)};
    types[block.eigenvalue] = pp;
  }
  return {std::move(s), std::move(types)};
}

} // namespace kwmod
