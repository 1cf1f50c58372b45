#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "kwmod/fp_linalg.hpp"

using namespace kwmod;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, const PrimeField& f, int rows, int cols) {
  FpMatrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint32_t>(rng() % f.p()));
  return m;
}

// Independent rank oracle: largest k with a nonzero k x k minor, determinants
// by permutation expansion. Only sane for tiny matrices, which is the point.
std::uint32_t det_leibniz(const PrimeField& f, const FpMatrix& m,
                          const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t det = 0;
  do {
    // sign of perm by inversion count
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    std::int64_t term = (inversions % 2 == 0) ? 1 : -1;
    for (size_t i = 0; i < perm.size(); ++i)
      term = term * m.at(rows[i], cols[perm[i]]) % f.p();
    det = (det + term) % f.p();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint32_t>((det % f.p() + f.p()) % f.p());
}

int rank_by_minors(const PrimeField& f, const FpMatrix& m) {
  int best = 0;
  int maxk = std::min(m.rows(), m.cols());
  for (int k = 1; k <= maxk; ++k) {
    // all k-subsets of rows and columns
    std::vector<int> rsel(k), csel(k);
    std::function<bool(int, int)> try_rows = [&](int start, int depth) -> bool {
      if (depth == k) {
        std::function<bool(int, int)> try_cols = [&](int cstart, int cdepth) -> bool {
          if (cdepth == k) return det_leibniz(f, m, rsel, csel) != 0;
          for (int c = cstart; c < m.cols(); ++c) {
            csel[cdepth] = c;
            if (try_cols(c + 1, cdepth + 1)) return true;
          }
          return false;
        };
        return try_cols(0, 0);
      }
      for (int r = start; r < m.rows(); ++r) {
        rsel[depth] = r;
        if (try_rows(r + 1, depth + 1)) return true;
      }
      return false;
    };
    if (try_rows(0, 0))
      best = k;
    else
      break;
  }
  return best;
}

} // namespace

TEST_SUITE("fp_linalg") {

TEST_CASE("prime field basics") {
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(14) == 0);
  CHECK(f.sub(2, 5) == 4);

  CHECK(!is_odd_prime(2));
  CHECK(!is_odd_prime(9));
  CHECK(is_odd_prime(65521));
  CHECK_THROWS_AS(PrimeField(2), error);
  CHECK_THROWS_AS(PrimeField(9), error);
  CHECK_THROWS_AS(PrimeField(65537), error); // prime, but past the size cap
}

TEST_CASE("rank worked values") {
  PrimeField f(3);
  FpMatrix id(f, 4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, 1);
  CHECK(rank(id) == 4);

  FpMatrix prop = FpMatrix::from_rows(f, {{1, 2}, {2, 4 % 3}}, 2);
  CHECK(rank(prop) == 1); // second row is twice the first mod 3

  FpMatrix zero(f, 3, 5);
  CHECK(rank(zero) == 0);
}

TEST_CASE("rref is canonical") {
  PrimeField f(5);
  // two spanning sets of the same plane
  FpMatrix a = FpMatrix::from_rows(f, {{1, 2, 0}, {0, 1, 4}}, 3);
  FpMatrix b = FpMatrix::from_rows(f, {{1, 3, 4}, {0, 2, 3}}, 3);
  rref_in_place(a);
  rref_in_place(b);
  CHECK(a == b);
  FpMatrix c = a;
  rref_in_place(c);
  CHECK(c == a); // idempotent
}

TEST_CASE("kernel worked values") {
  PrimeField f(5);
  FpMatrix zero(f, 4, 6);
  CHECK(kernel(zero).dim() == 6);

  FpMatrix id(f, 3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(kernel(id).dim() == 0);
}

TEST_CASE("rank and kernel properties on random matrices") {
  std::mt19937_64 rng(12345);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    for (int iter = 0; iter < 40; ++iter) {
      int rows = 1 + static_cast<int>(rng() % 8);
      int cols = 1 + static_cast<int>(rng() % 8);
      FpMatrix m = random_matrix(rng, f, rows, cols);
      int rk = rank(m);
      CHECK(rk == rank(transpose(m)));
      KernelBasis ker = kernel(m);
      CHECK(ker.dim() == cols - rk);
      for (int r = 0; r < ker.dim(); ++r) {
        auto image = matvec(m, ker.vectors.row(r));
        for (auto v : image) CHECK(v == 0);
      }
      CHECK(rank(ker.vectors) == ker.dim());
    }
  }
}

TEST_CASE("rank agrees with the minor oracle on tiny matrices") {
  std::mt19937_64 rng(777);
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    for (int iter = 0; iter < 30; ++iter) {
      int rows = 1 + static_cast<int>(rng() % 4);
      int cols = 1 + static_cast<int>(rng() % 4);
      FpMatrix m = random_matrix(rng, f, rows, cols);
      CHECK(rank(m) == rank_by_minors(f, m));
    }
  }
}

TEST_CASE("express_in_rowspace finds coefficients exactly for members") {
  PrimeField f(7);
  FpMatrix rows = FpMatrix::from_rows(f, {{1, 2, 3}, {0, 1, 5}}, 3);
  std::vector<int> pivots;
  rref_in_place(rows, &pivots);

  std::vector<std::uint32_t> member = {2, 5, 4}; // 2*(1,2,3) + 1*(0,1,5) mod 7
  auto coeff = express_in_rowspace(rows, pivots, member);
  REQUIRE(coeff.has_value());
  // reconstruct
  std::vector<std::uint32_t> back(3, 0);
  for (int r = 0; r < rows.rows(); ++r)
    for (int c = 0; c < 3; ++c)
      back[c] = f.add(back[c], f.mul((*coeff)[r], rows.at(r, c)));
  CHECK(back == member);

  std::vector<std::uint32_t> outside = {0, 0, 1};
  CHECK(!express_in_rowspace(rows, pivots, outside).has_value());
}

TEST_CASE("restrict_map builds the matrix column by column") {
  PrimeField f(5);
  FpMatrix domain = FpMatrix::from_rows(f, {{1, 0}, {0, 1}}, 2);
  FpMatrix codomain = domain;
  auto doubler = [&f](std::span<const std::uint32_t> v) {
    std::vector<std::uint32_t> out(v.begin(), v.end());
    for (auto& x : out) x = f.mul(x, 2);
    return out;
  };
  FpMatrix mat = restrict_map(doubler, domain, codomain);
  REQUIRE(mat.rows() == 2);
  REQUIRE(mat.cols() == 2);
  CHECK(mat.at(0, 0) == 2);
  CHECK(mat.at(1, 1) == 2);
  CHECK(mat.at(0, 1) == 0);

  FpMatrix small_codomain = FpMatrix::from_rows(f, {{1, 0}}, 2);
  auto escapes = [](std::span<const std::uint32_t> v) {
    return std::vector<std::uint32_t>{0, v[0]};
  };
  bool threw = false;
  try {
    restrict_map(escapes, domain, small_codomain);
  } catch (const error& e) {
    threw = e.code() == errc::image_escapes_codomain;
  }
  CHECK(threw);
}

} // TEST_SUITE
