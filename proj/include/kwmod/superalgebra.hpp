#ifndef KWMOD_SUPERALGEBRA_HPP
#define KWMOD_SUPERALGEBRA_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kwmod/fp_linalg.hpp"
#include "kwmod/partition.hpp"
#include "kwmod/pyramid.hpp"
#include "kwmod/sdim.hpp"

namespace kwmod {

enum class AlgebraKind { gl, sl };

inline const char* kind_name(AlgebraKind k) { return k == AlgebraKind::gl ? "gl" : "sl"; }

/// The ambient algebra gl(m|n) or sl(m|n) over F_p. Construction rejects
/// p <= 2, composite p, and sl(m|n) when p divides m-n (the supertrace form
/// degenerates there and the sl theory is out of range).
struct AlgebraContext {
  int m;
  int n;
  PrimeField field;
  AlgebraKind kind;

  AlgebraContext(int m_, int n_, std::uint32_t p, AlgebraKind kind_);

  int total() const { return m + n; }
  int coords() const { return total() * total(); }
  std::uint32_t p() const { return field.p(); }
  SDim algebra_sdim() const;

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) {
    return a.m == b.m && a.n == b.n && a.p() == b.p() && a.kind == b.kind;
  }
};

/// Position of a box in the (m+n)-dimensional natural module: even boxes
/// first, then odd boxes.
int lin_index(const AlgebraContext& ctx, BoxId b);
BoxId box_of(const AlgebraContext& ctx, int lin);

enum class MatrixParity { even, odd, mixed };

/// Element of gl(m|n) as a sparse combination of matrix units e_{i,j},
/// i, j boxes. Values are always nonzero and reduced mod p.
class SuperMatrix {
public:
  explicit SuperMatrix(AlgebraContext ctx) : ctx_(std::move(ctx)) {}

  static SuperMatrix unit(const AlgebraContext& ctx, BoxId row, BoxId col,
                          std::uint32_t val = 1);
  static SuperMatrix from_coords(const AlgebraContext& ctx, std::span<const std::uint32_t> v);

  const AlgebraContext& ctx() const { return ctx_; }
  const std::map<std::pair<int, int>, std::uint32_t>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  std::uint32_t entry(BoxId row, BoxId col) const;
  void add_entry(BoxId row, BoxId col, std::uint32_t val);
  void add_entry_lin(int row, int col, std::uint32_t val);

  /// even/odd if every stored unit has that parity (zero counts as even),
  /// mixed otherwise.
  MatrixParity parity() const;

  std::vector<std::uint32_t> to_coords() const;
  std::uint32_t supertrace() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  SuperMatrix scaled(std::uint32_t c) const;
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

  std::string str() const;

private:
  AlgebraContext ctx_;
  std::map<std::pair<int, int>, std::uint32_t> entries_; // (lin row, lin col) -> value
};

SuperMatrix matpow(const SuperMatrix& a, std::uint64_t e);

/// [a,b] = ab - (-1)^{|a||b|} ba for parity-homogeneous a, b.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// str = trace over the even-even block minus trace over the odd-odd block.
std::uint32_t supertrace_form(const SuperMatrix& a, const SuperMatrix& b); // str(ab)

/// Parity-graded subspace of the ambient algebra, stored as canonical RREF
/// row bases per parity over the (m+n)^2 matrix coordinates. For an sl
/// context every span is implicitly cut with the supertrace-zero hyperplane,
/// so a Subspace is always a subspace of the context's algebra.
class Subspace {
public:
  static Subspace zero(const AlgebraContext& ctx);
  static Subspace span(const AlgebraContext& ctx, const std::vector<SuperMatrix>& gens);
  static Subspace from_rows(const AlgebraContext& ctx, FpMatrix even_rows, FpMatrix odd_rows);

  const AlgebraContext& ctx() const { return ctx_; }
  SDim sdim() const { return {even_.rows(), odd_.rows()}; }
  bool is_zero() const { return even_.rows() == 0 && odd_.rows() == 0; }

  const FpMatrix& rows(Parity p) const { return p == Parity::even ? even_ : odd_; }
  const std::vector<int>& pivots(Parity p) const {
    return p == Parity::even ? piv_even_ : piv_odd_;
  }

  SuperMatrix basis_element(Parity p, int i) const;
  std::vector<SuperMatrix> basis() const; // even rows first, then odd

  bool contains(const SuperMatrix& x) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ctx_ == b.ctx_ && a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
  Subspace(AlgebraContext ctx, FpMatrix even_rows, FpMatrix odd_rows)
      : ctx_(std::move(ctx)), even_(std::move(even_rows)), odd_(std::move(odd_rows)) {}

  AlgebraContext ctx_;
  FpMatrix even_, odd_;
  std::vector<int> piv_even_, piv_odd_;
};

/// The whole algebra of the context as a Subspace.
Subspace full_algebra(const AlgebraContext& ctx);

/// Jordan nilpotent of type (r,q): sum of e_{i,j} over same-row box pairs
/// at column distance 2. The same element for every pyramid of the pair.
SuperMatrix nilpotent_e(const AlgebraContext& ctx, const PartitionPair& pp);
SuperMatrix nilpotent_e(const AlgebraContext& ctx, const Pyramid& p);

/// Span of the matrix units of pyramid degree k (cut with sl if needed).
Subspace grading_subspace(const AlgebraContext& ctx, const Pyramid& p, int k);

/// All nonzero graded pieces, indexed by degree.
std::map<int, Subspace> pyramid_grading(const AlgebraContext& ctx, const Pyramid& p);

/// Span of the units e_{i,j} with col(i) <= col(j): the parabolic subalgebra
/// of the pyramid, equal to the sum of the non-negative graded pieces.
Subspace parabolic(const AlgebraContext& ctx, const Pyramid& p);

/// Cocharacter weight of every box, computed from the Jordan strings alone:
/// a string of length L carries weights L-1, L-3, ..., 1-L from the leftmost
/// box to the rightmost. Equals minus the Dynkin-pyramid column.
struct CocharacterWeights {
  std::vector<int> even; // index-1 -> weight
  std::vector<int> odd;
  int of(BoxId b) const;
};

CocharacterWeights cocharacter_weights(const PartitionPair& pp);

/// The Dynkin grading from the cocharacter weights: e_{i,j} sits in degree
/// weight(i) - weight(j).
std::map<int, Subspace> dynkin_grading(const AlgebraContext& ctx, const PartitionPair& pp);

/// chi(y) = (e, y) with the supertrace form.
class ChiFunctional {
public:
  ChiFunctional(AlgebraContext ctx, SuperMatrix e);
  std::uint32_t operator()(const SuperMatrix& y) const { return supertrace_form(e_, y); }
  bool vanishes_on(const Subspace& s) const;
  const SuperMatrix& element() const { return e_; }

private:
  AlgebraContext ctx_;
  SuperMatrix e_;
};

ChiFunctional chi_functional(const AlgebraContext& ctx, const SuperMatrix& e);

/// [x, .] applied on ambient matrix coordinates (the vector must describe a
/// parity-homogeneous element).
std::vector<std::uint32_t> ad_apply(const SuperMatrix& x, std::span<const std::uint32_t> v);

/// Matrix of [x, .] : domain -> codomain in the given row bases.
FpMatrix bracket_matrix(const SuperMatrix& x, const FpMatrix& domain, const FpMatrix& codomain);

/// True if all supercommutators of basis elements stay inside the space.
bool bracket_closed(const Subspace& s);

/// True if [a, u] lies in `ideal` for every a in `ambient`, u in `ideal`.
bool is_bracket_ideal(const Subspace& ideal, const Subspace& ambient);

} // namespace kwmod

#endif
