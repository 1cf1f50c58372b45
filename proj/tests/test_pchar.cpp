#include <doctest.h>

#include "kwmod/pchar.hpp"
#include "kwmod/sweep.hpp"

using namespace kwmod;

namespace {

PartitionPair pair(std::vector<int> r, std::vector<int> q) {
  return {validate_partition(r), validate_partition(q)};
}

bool check_passed(const VerificationReport& rep, const std::string& name) {
  for (const auto& [n, res] : rep.checks)
    if (n == name) return res.status == CheckStatus::pass;
  return false;
}

} // namespace

TEST_SUITE("pchar") {

TEST_CASE("parse_semisimple") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  SemisimplePart s = parse_semisimple(ctx, "0,1|0");
  CHECK(s.even_diag == std::vector<std::uint32_t>{0, 1});
  CHECK(s.odd_diag == std::vector<std::uint32_t>{0});
  CHECK(s.str() == "0,1|0");
  CHECK(parse_semisimple(ctx, "-1,6|0").even_diag == std::vector<std::uint32_t>{4, 1});
  CHECK_THROWS_AS(parse_semisimple(ctx, "0,1,2|0"), error);
  CHECK_THROWS_AS(parse_semisimple(ctx, "0,1"), error);

  AlgebraContext sl(2, 1, 5, AlgebraKind::sl);
  CHECK_NOTHROW(parse_semisimple(sl, "3,2|0")); // supertrace 5 = 0
  CHECK_THROWS_AS(parse_semisimple(sl, "0,1|0"), error);
}

TEST_CASE("levi_decompose worked instances") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  LeviDecomposition dec = levi_decompose(ctx, parse_semisimple(ctx, "0,1|0"));
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].eigenvalue == 0);
  CHECK(dec.blocks[0].even_indices == std::vector<int>{1});
  CHECK(dec.blocks[0].odd_indices == std::vector<int>{1});
  CHECK(dec.blocks[1].eigenvalue == 1);
  CHECK(dec.blocks[1].even_indices == std::vector<int>{2});
  CHECK(dec.blocks[1].odd_indices.empty());
  CHECK(dec.levi.sdim() == SDim{3, 2});
  CHECK(dec.nilradical.sdim() == SDim{1, 1});
  CHECK(dec.nilradical_minus.sdim() == SDim{1, 1});
  CHECK(dec.toral.is_zero());
  CHECK(centralizer(ctx, semisimple_matrix(ctx, dec.s)) == dec.levi);

  AlgebraContext gl11(1, 1, 3, AlgebraKind::gl);
  LeviDecomposition two = levi_decompose(gl11, parse_semisimple(gl11, "0|1"));
  CHECK(two.levi.sdim() == SDim{2, 0});
  CHECK(two.nilradical.sdim() == SDim{0, 1});
  CHECK(two.nilradical.contains(SuperMatrix::unit(gl11, even_box(1), odd_box(1))));
  CHECK(two.nilradical_minus.contains(SuperMatrix::unit(gl11, odd_box(1), even_box(1))));

  LeviDecomposition whole = levi_decompose(ctx, parse_semisimple(ctx, "0,0|0"));
  CHECK(whole.blocks.size() == 1);
  CHECK(whole.levi.sdim() == ctx.algebra_sdim());
  CHECK(whole.nilradical.is_zero());
}

TEST_CASE("toral part for sl") {
  AlgebraContext sl(2, 1, 3, AlgebraKind::sl);
  SemisimplePart s = parse_semisimple(sl, "0,1|1"); // supertrace 0+1-1 = 0
  LeviDecomposition dec = levi_decompose(sl, s);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.toral.sdim() == SDim{1, 0});
  CHECK(dec.levi.contains(dec.toral));
  // the toral element commutes with everything block-diagonal
  for (const auto& t : dec.toral.basis())
    for (const auto& b : dec.levi.basis())
      CHECK(dec.levi.contains(supercommutator(t, b)));
}

TEST_CASE("build_x") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  SemisimplePart s = parse_semisimple(ctx, "0,1|0");
  LeviDecomposition dec = levi_decompose(ctx, s);
  SuperMatrix x = build_x(dec, {});
  CHECK(x == semisimple_matrix(ctx, s));
  REQUIRE(dec.blocks[0].jordan.has_value());
  CHECK(*dec.blocks[0].jordan == pair({1}, {1}));

  // zero s with a single block reduces to the plain nilpotent
  AlgebraContext gl43(4, 3, 5, AlgebraKind::gl);
  SemisimplePart zero{std::vector<std::uint32_t>(4, 0), std::vector<std::uint32_t>(3, 0)};
  BlockTypes types{{0, pair({3, 1}, {2, 1})}};
  CHECK(build_x(gl43, zero, types) == nilpotent_e(gl43, pair({3, 1}, {2, 1})));

  // gl(2|2) split into two gl(1|1) blocks forces n = 0
  AlgebraContext gl22(2, 2, 3, AlgebraKind::gl);
  SemisimplePart s22{{0, 1}, {0, 1}};
  BlockTypes t22{{0, pair({1}, {1})}, {1, pair({1}, {1})}};
  CHECK(build_x(gl22, s22, t22) == semisimple_matrix(gl22, s22));

  bool typed = false;
  try {
    build_x(ctx, s, {{0, pair({2}, {})}}); // block 0 is gl(1|1), not gl(2|0)
  } catch (const error& e) {
    typed = e.code() == errc::block_shape_mismatch;
  }
  CHECK(typed);
  CHECK_THROWS_AS(build_x(ctx, s, {{3, pair({1}, {})}}), error); // no such eigenvalue
}

TEST_CASE("levi_kw_dims worked values") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  LeviDecomposition dec = levi_decompose(ctx, parse_semisimple(ctx, "0,1|0"));
  build_x(dec, {});
  CHECK(levi_kw_dims(dec) == KwDims{0, 0});

  AlgebraContext gl43(4, 3, 5, AlgebraKind::gl);
  SemisimplePart zero{std::vector<std::uint32_t>(4, 0), std::vector<std::uint32_t>(3, 0)};
  LeviDecomposition one = levi_decompose(gl43, zero);
  build_x(one, {{0, pair({3, 1}, {2, 1})}});
  CHECK(levi_kw_dims(one) == KwDims{14, 14});

  // gl(3|2), s = diag(0,0,1|0,0): block 0 is gl(2|2) with type ((2),(2))
  AlgebraContext gl32(3, 2, 3, AlgebraKind::gl);
  SemisimplePart s32{{0, 0, 1}, {0, 0}};
  LeviDecomposition dec32 = levi_decompose(gl32, s32);
  build_x(dec32, {{0, pair({2}, {2})}});
  CHECK(levi_kw_dims(dec32) == KwDims{4, 4});
}

TEST_CASE("levi identities on worked instances") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  VerificationReport rep = check_levi_identities(ctx, parse_semisimple(ctx, "0,1|0"), {});
  INFO(rep.summary());
  CHECK(rep.failures() == 0);
  CHECK(rep.bound == ExponentDim{1, 1}); // d = (2,2)

  AlgebraContext gl11(1, 1, 3, AlgebraKind::gl);
  VerificationReport rep11 = check_levi_identities(gl11, parse_semisimple(gl11, "0|1"), {});
  CHECK(rep11.failures() == 0);
  CHECK(rep11.bound == ExponentDim{0, 1}); // d = (0,2)

  // s = 0 with one block reproduces the nilpotent pipeline
  AlgebraContext gl43(4, 3, 5, AlgebraKind::gl);
  SemisimplePart zero{std::vector<std::uint32_t>(4, 0), std::vector<std::uint32_t>(3, 0)};
  VerificationReport rep43 =
      check_levi_identities(gl43, zero, {{0, pair({3, 1}, {2, 1})}});
  CHECK(rep43.failures() == 0);
  CHECK(rep43.bound == ExponentDim{7, 7});
  CHECK(rep43.bound == induced_dimension(gl43, pair({3, 1}, {2, 1})));
}

TEST_CASE("kw_bound_general worked values") {
  AlgebraContext ctx(2, 1, 5, AlgebraKind::gl);
  CHECK(kw_bound_general(ctx, parse_semisimple(ctx, "0,1|0"), {}) == ExponentDim{1, 1});

  AlgebraContext gl43(4, 3, 5, AlgebraKind::gl);
  SemisimplePart zero{std::vector<std::uint32_t>(4, 0), std::vector<std::uint32_t>(3, 0)};
  CHECK(kw_bound_general(gl43, zero, {{0, pair({3, 1}, {2, 1})}}) == ExponentDim{7, 7});

  AlgebraContext gl11(1, 1, 3, AlgebraKind::gl);
  CHECK(kw_bound_general(gl11, parse_semisimple(gl11, "0|1"), {}) == ExponentDim{0, 1});
}

TEST_CASE("jordan_pair recovers the construction") {
  AlgebraContext ctx(3, 2, 5, AlgebraKind::gl);
  SemisimplePart s{{0, 0, 1}, {0, 0}};
  BlockTypes types{{0, pair({2}, {2})}, {1, pair({1}, {})}};
  SuperMatrix x = build_x(ctx, s, types);
  auto [s2, types2] = jordan_pair(ctx, x);
  CHECK(s2 == s);
  CHECK(types2 == types);

  // a matrix whose off-diagonal part mixes eigenvalues is rejected
  SuperMatrix bad = semisimple_matrix(ctx, s);
  bad.add_entry(even_box(1), even_box(3), 1); // eigenvalues 0 and 1
  CHECK_THROWS_AS(jordan_pair(ctx, bad), error);
}

TEST_CASE("parse_block_type") {
  AlgebraContext ctx(4, 3, 5, AlgebraKind::gl);
  auto [lambda, pp] = parse_block_type(ctx, "0:3,1|2,1");
  CHECK(lambda == 0);
  CHECK(pp == pair({3, 1}, {2, 1}));
  auto [l2, pp2] = parse_block_type(ctx, "-1:|1");
  CHECK(l2 == 4);
  CHECK(pp2 == pair({}, {1}));
  CHECK_THROWS_AS(parse_block_type(ctx, "nope"), error);
  CHECK_THROWS_AS(parse_block_type(ctx, "0:1,2"), error);
}

TEST_CASE("seeded random instances all pass") {
  std::mt19937_64 rng(2024);
  int count = 0;
  while (count < 30) {
    int m = static_cast<int>(rng() % 4);
    int n = static_cast<int>(rng() % 4);
    std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng() % 3];
    AlgebraKind kind = rng() % 2 ? AlgebraKind::sl : AlgebraKind::gl;
    if (kind == AlgebraKind::sl && ((m - n) % static_cast<int>(p) + p) % p == 0)
      kind = AlgebraKind::gl;
    LeviInstance inst = random_levi_instance(rng, m, n, p, kind);
    VerificationReport rep = verify_levi_instance(inst);
    INFO(rep.instance.str());
    CHECK(rep.failures() == 0);
    CHECK(check_passed(rep, "xi_vanishes_on_u"));
    CHECK(check_passed(rep, "bound_product"));
    ++count;
  }
}

} // TEST_SUITE
