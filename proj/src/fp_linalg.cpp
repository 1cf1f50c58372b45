#include "kwmod/fp_linalg.hpp"

#include <algorithm>

namespace kwmod {

FpMatrix FpMatrix::from_rows(const PrimeField& f,
                             const std::vector<std::vector<std::uint32_t>>& rows, int cols) {
  FpMatrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw error(errc::bad_argument, "row length mismatch");
    for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

void FpMatrix::append_row(std::span<const std::uint32_t> v) {
  if (static_cast<int>(v.size()) != cols_)
    throw error(errc::bad_argument, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

int rref_in_place(FpMatrix& m, std::vector<int>* pivots) {
  const PrimeField& f = m.field();
  int rank = 0;
  std::vector<int> piv;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int sel = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int c = col; c < m.cols(); ++c) {
        std::uint32_t t = m.at(rank, c);
        m.set(rank, c, m.at(sel, c));
        m.set(sel, c, t);
      }
    std::uint32_t s = f.inv(m.at(rank, col));
    for (int c = col; c < m.cols(); ++c) m.set(rank, c, f.mul(s, m.at(rank, c)));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      std::uint32_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = col; c < m.cols(); ++c)
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(rank, c))));
    }
    piv.push_back(col);
    ++rank;
  }
  // drop zero rows
  FpMatrix out(f, rank, m.cols());
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  m = std::move(out);
  if (pivots) *pivots = std::move(piv);
  return rank;
}

int rank(const FpMatrix& m) {
  FpMatrix copy = m;
  return rref_in_place(copy);
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.field(), m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
  return t;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw error(errc::bad_argument, "matmul shape mismatch");
  const PrimeField& f = a.field();
  FpMatrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
    }
  return out;
}

std::vector<std::uint32_t> matvec(const FpMatrix& m, std::span<const std::uint32_t> v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw error(errc::bad_argument, "apply shape mismatch");
  const PrimeField& f = m.field();
  std::vector<std::uint32_t> out(m.rows(), 0u);
  for (int r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc += static_cast<std::uint64_t>(m.at(r, c)) * v[c];
    out[r] = static_cast<std::uint32_t>(acc % f.p());
  }
  return out;
}

KernelBasis kernel(const FpMatrix& m) {
  const PrimeField& f = m.field();
  FpMatrix red = m;
  std::vector<int> pivots;
  rref_in_place(red, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  FpMatrix basis(f, 0, m.cols());
  std::vector<std::uint32_t> vec(m.cols(), 0u);
  for (int freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    std::fill(vec.begin(), vec.end(), 0u);
    vec[freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      vec[pivots[r]] = f.neg(red.at(static_cast<int>(r), freec));
    basis.append_row(vec);
  }
  return {std::move(basis)};
}

std::optional<std::vector<std::uint32_t>> express_in_rowspace(
    const FpMatrix& rref_rows, const std::vector<int>& pivots,
    std::span<const std::uint32_t> v) {
  const PrimeField& f = rref_rows.field();
  if (static_cast<int>(v.size()) != rref_rows.cols())
    throw error(errc::bad_argument, "vector length mismatch");
  std::vector<std::uint32_t> residual(v.begin(), v.end());
  std::vector<std::uint32_t> coeff(rref_rows.rows(), 0u);
  for (int r = 0; r < rref_rows.rows(); ++r) {
    std::uint32_t c = residual[pivots[r]];
    if (c == 0) continue;
    coeff[r] = c;
    for (int k = 0; k < rref_rows.cols(); ++k)
      residual[k] = f.sub(residual[k], f.mul(c, rref_rows.at(r, k)));
  }
  for (std::uint32_t x : residual)
    if (x != 0) return std::nullopt;
  return coeff;
}

FpMatrix restrict_map(
    const std::function<std::vector<std::uint32_t>(std::span<const std::uint32_t>)>& f,
    const FpMatrix& domain, const FpMatrix& codomain) {
  FpMatrix codom = codomain;
  std::vector<int> pivots;
  rref_in_place(codom, &pivots);
  FpMatrix out(domain.field(), codom.rows(), domain.rows());
  for (int j = 0; j < domain.rows(); ++j) {
    std::vector<std::uint32_t> image = f(domain.row(j));
    auto coeff = express_in_rowspace(codom, pivots, image);
    if (!coeff)
      throw error(errc::image_escapes_codomain,
                  "image of domain vector " + std::to_string(j) + " leaves the codomain");
    for (int i = 0; i < codom.rows(); ++i) out.set(i, j, (*coeff)[i]);
  }
  return out;
}

} // namespace kwmod
