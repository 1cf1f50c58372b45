#ifndef KWMOD_FP_LINALG_HPP
#define KWMOD_FP_LINALG_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kwmod/fp.hpp"

namespace kwmod {

/// Dense matrix over F_p, row major. Sizes here are desk scale (a few
/// hundred at most), so plain Gaussian elimination is enough. All entries
/// stay reduced mod p.
class FpMatrix {
public:
  FpMatrix(PrimeField f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, 0u) {}

  static FpMatrix from_rows(const PrimeField& f,
                            const std::vector<std::vector<std::uint32_t>>& rows,
                            int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::uint32_t v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

  std::span<const std::uint32_t> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  void append_row(std::span<const std::uint32_t> v);

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_.p() == b.field_.p() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> data_;
};

/// In-place reduced row echelon form with leftmost-pivot selection and unit
/// pivots; zero rows are dropped. Returns the rank; pivot columns (one per
/// remaining row, strictly increasing) are written to *pivots when given.
/// The output is the canonical RREF basis of the row space, so two row
/// spaces are equal iff their reduced matrices compare equal.
int rref_in_place(FpMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const FpMatrix& m);

FpMatrix transpose(const FpMatrix& m);

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);

std::vector<std::uint32_t> matvec(const FpMatrix& m, std::span<const std::uint32_t> v);

/// Basis of the right null space { v : M v = 0 }.
struct KernelBasis {
  FpMatrix vectors; // one basis vector per row
  int dim() const { return vectors.rows(); }
};

KernelBasis kernel(const FpMatrix& m);

/// Writes v as a combination of the rows of an RREF matrix. Returns the
/// coefficient vector, or nullopt if v is outside the row space.
std::optional<std::vector<std::uint32_t>> express_in_rowspace(
    const FpMatrix& rref_rows, const std::vector<int>& pivots,
    std::span<const std::uint32_t> v);

/// Matrix of a linear map between row spaces: column j holds the
/// codomain-basis coordinates of f(domain row j). Throws
/// image_escapes_codomain if some image leaves the codomain's span.
FpMatrix restrict_map(
    const std::function<std::vector<std::uint32_t>(std::span<const std::uint32_t>)>& f,
    const FpMatrix& domain, const FpMatrix& codomain);

} // namespace kwmod

#endif
