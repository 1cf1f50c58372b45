#include "kwmod/superalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace kwmod {

AlgebraContext::AlgebraContext(int m_, int n_, std::uint32_t p_, AlgebraKind kind_)
    : m(m_), n(n_), field(p_), kind(kind_) {
  if (m < 0 || n < 0) throw error(errc::invalid_context, "negative box count");
  if (kind == AlgebraKind::sl) {
    int d = ((m - n) % static_cast<int>(p()) + static_cast<int>(p())) % static_cast<int>(p());
    if (d == 0)
      throw error(errc::invalid_context,
                  "sl(" + std::to_string(m) + "|" + std::to_string(n) + ") needs p not dividing m-n, p = " +
                      std::to_string(p()));
  }
}

SDim AlgebraContext::algebra_sdim() const {
  SDim d{m * m + n * n, 2 * m * n};
  if (kind == AlgebraKind::sl) d.even -= 1;
  return d;
}

int lin_index(const AlgebraContext& ctx, BoxId b) {
  int limit = b.parity == Parity::even ? ctx.m : ctx.n;
  if (b.index < 1 || b.index > limit) throw error(errc::unknown_box, "no box " + box_str(b));
  return b.parity == Parity::even ? b.index - 1 : ctx.m + b.index - 1;
}

BoxId box_of(const AlgebraContext& ctx, int lin) {
  if (lin < 0 || lin >= ctx.total()) throw error(errc::unknown_box, "bad linear index");
  return lin < ctx.m ? even_box(lin + 1) : odd_box(lin - ctx.m + 1);
}

namespace {

int lin_parity(const AlgebraContext& ctx, int lin) { return lin < ctx.m ? 0 : 1; }

int unit_parity(const AlgebraContext& ctx, int row, int col) {
  return lin_parity(ctx, row) ^ lin_parity(ctx, col);
}

void require_same_algebra(const AlgebraContext& a, const AlgebraContext& b) {
  if (a.m != b.m || a.n != b.n || a.p() != b.p())
    throw error(errc::context_mismatch, "values from different algebras");
}

} // namespace

SuperMatrix SuperMatrix::unit(const AlgebraContext& ctx, BoxId row, BoxId col,
                              std::uint32_t val) {
  SuperMatrix u(ctx);
  u.add_entry(row, col, val);
  return u;
}

SuperMatrix SuperMatrix::from_coords(const AlgebraContext& ctx,
                                     std::span<const std::uint32_t> v) {
  if (static_cast<int>(v.size()) != ctx.coords())
    throw error(errc::bad_argument, "coordinate vector of wrong length");
  SuperMatrix out(ctx);
  int nn = ctx.total();
  for (int c = 0; c < static_cast<int>(v.size()); ++c)
    if (v[c] != 0) out.entries_[{c / nn, c % nn}] = v[c] % ctx.p();
  return out;
}

std::uint32_t SuperMatrix::entry(BoxId row, BoxId col) const {
  auto it = entries_.find({lin_index(ctx_, row), lin_index(ctx_, col)});
  return it == entries_.end() ? 0u : it->second;
}

void SuperMatrix::add_entry(BoxId row, BoxId col, std::uint32_t val) {
  add_entry_lin(lin_index(ctx_, row), lin_index(ctx_, col), val);
}

void SuperMatrix::add_entry_lin(int row, int col, std::uint32_t val) {
  val %= ctx_.p();
  if (val == 0) return;
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_[key] = val;
    return;
  }
  it->second = ctx_.field.add(it->second, val);
  if (it->second == 0) entries_.erase(it);
}

MatrixParity SuperMatrix::parity() const {
  bool saw_even = false, saw_odd = false;
  for (const auto& [key, val] : entries_) {
    (void)val;
    if (unit_parity(ctx_, key.first, key.second))
      saw_odd = true;
    else
      saw_even = true;
  }
  if (saw_even && saw_odd) return MatrixParity::mixed;
  return saw_odd ? MatrixParity::odd : MatrixParity::even;
}

std::vector<std::uint32_t> SuperMatrix::to_coords() const {
  std::vector<std::uint32_t> v(ctx_.coords(), 0u);
  int nn = ctx_.total();
  for (const auto& [key, val] : entries_) v[key.first * nn + key.second] = val;
  return v;
}

std::uint32_t SuperMatrix::supertrace() const {
  std::uint32_t acc = 0;
  for (const auto& [key, val] : entries_) {
    if (key.first != key.second) continue;
    acc = lin_parity(ctx_, key.first) ? ctx_.field.sub(acc, val) : ctx_.field.add(acc, val);
  }
  return acc;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  require_same_algebra(ctx_, o.ctx_);
  for (const auto& [key, val] : o.entries_) add_entry_lin(key.first, key.second, val);
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  require_same_algebra(ctx_, o.ctx_);
  for (const auto& [key, val] : o.entries_)
    add_entry_lin(key.first, key.second, ctx_.field.neg(val));
  return *this;
}

SuperMatrix SuperMatrix::scaled(std::uint32_t c) const {
  SuperMatrix out(ctx_);
  c %= ctx_.p();
  for (const auto& [key, val] : entries_)
    out.add_entry_lin(key.first, key.second, ctx_.field.mul(val, c));
  return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_algebra(a.ctx_, b.ctx_);
  SuperMatrix out(a.ctx_);
  for (const auto& [ka, va] : a.entries_) {
    auto it = b.entries_.lower_bound({ka.second, 0});
    for (; it != b.entries_.end() && it->first.first == ka.second; ++it)
      out.add_entry_lin(ka.first, it->first.second, a.ctx_.field.mul(va, it->second));
  }
  return out;
}

SuperMatrix matpow(const SuperMatrix& a, std::uint64_t e) {
  SuperMatrix acc(a.ctx());
  for (int i = 0; i < a.ctx().total(); ++i) acc.add_entry_lin(i, i, 1); // identity
  SuperMatrix base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string SuperMatrix::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, val] : entries_) {
    if (!first) os << " + ";
    first = false;
    if (val != 1) os << val << "*";
    os << "e(" << box_str(box_of(ctx_, key.first)) << "," << box_str(box_of(ctx_, key.second))
       << ")";
  }
  return os.str();
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  MatrixParity pa = a.parity(), pb = b.parity();
  if (pa == MatrixParity::mixed || pb == MatrixParity::mixed)
    throw error(errc::mixed_parity, "supercommutator needs homogeneous arguments");
  SuperMatrix ab = a * b;
  SuperMatrix ba = b * a;
  if (pa == MatrixParity::odd && pb == MatrixParity::odd) return ab + ba;
  return ab - ba;
}

std::uint32_t supertrace_form(const SuperMatrix& a, const SuperMatrix& b) {
  const AlgebraContext& ctx = a.ctx();
  std::uint32_t acc = 0;
  // str(ab) without forming the product: entries a_{ik} b_{ki} signed by |i|.
  for (const auto& [ka, va] : a.entries()) {
    auto it = b.entries().find({ka.second, ka.first});
    if (it == b.entries().end()) continue;
    std::uint32_t term = ctx.field.mul(va, it->second);
    acc = lin_parity(ctx, ka.first) ? ctx.field.sub(acc, term) : ctx.field.add(acc, term);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Subspace

namespace {

// supertrace as a coordinate functional
std::uint32_t coord_supertrace(const AlgebraContext& ctx, std::span<const std::uint32_t> v) {
  std::uint32_t acc = 0;
  int nn = ctx.total();
  for (int d = 0; d < nn; ++d) {
    std::uint32_t val = v[d * nn + d];
    if (val == 0) continue;
    acc = lin_parity(ctx, d) ? ctx.field.sub(acc, val) : ctx.field.add(acc, val);
  }
  return acc;
}

// Intersects an RREF row space with the supertrace-zero hyperplane. Only the
// even part can meet the diagonal, so odd rows are never touched.
void cut_supertrace(const AlgebraContext& ctx, FpMatrix& rows) {
  int witness = -1;
  std::uint32_t wtr = 0;
  for (int r = 0; r < rows.rows(); ++r) {
    std::uint32_t tr = coord_supertrace(ctx, rows.row(r));
    if (tr != 0) {
      witness = r;
      wtr = tr;
      break;
    }
  }
  if (witness < 0) return;
  FpMatrix out(rows.field(), 0, rows.cols());
  std::vector<std::uint32_t> tmp(rows.cols());
  for (int r = 0; r < rows.rows(); ++r) {
    if (r == witness) continue;
    std::uint32_t tr = coord_supertrace(ctx, rows.row(r));
    std::uint32_t c = ctx.field.div(tr, wtr);
    for (int k = 0; k < rows.cols(); ++k)
      tmp[k] = ctx.field.sub(rows.at(r, k), ctx.field.mul(c, rows.at(witness, k)));
    out.append_row(tmp);
  }
  rref_in_place(out);
  rows = std::move(out);
}

} // namespace

Subspace Subspace::zero(const AlgebraContext& ctx) {
  return Subspace(ctx, FpMatrix(ctx.field, 0, ctx.coords()), FpMatrix(ctx.field, 0, ctx.coords()));
}

Subspace Subspace::from_rows(const AlgebraContext& ctx, FpMatrix even_rows, FpMatrix odd_rows) {
  rref_in_place(even_rows);
  rref_in_place(odd_rows);
  if (ctx.kind == AlgebraKind::sl) cut_supertrace(ctx, even_rows);
  Subspace s(ctx, std::move(even_rows), std::move(odd_rows));
  rref_in_place(s.even_, &s.piv_even_);
  rref_in_place(s.odd_, &s.piv_odd_);
  return s;
}

Subspace Subspace::span(const AlgebraContext& ctx, const std::vector<SuperMatrix>& gens) {
  FpMatrix even_rows(ctx.field, 0, ctx.coords());
  FpMatrix odd_rows(ctx.field, 0, ctx.coords());
  for (const auto& g : gens) {
    require_same_algebra(ctx, g.ctx());
    if (g.is_zero()) continue;
    switch (g.parity()) {
      case MatrixParity::even: even_rows.append_row(g.to_coords()); break;
      case MatrixParity::odd: odd_rows.append_row(g.to_coords()); break;
      case MatrixParity::mixed:
        throw error(errc::mixed_parity, "span generator is not parity-homogeneous");
    }
  }
  return from_rows(ctx, std::move(even_rows), std::move(odd_rows));
}

SuperMatrix Subspace::basis_element(Parity p, int i) const {
  const FpMatrix& rows = p == Parity::even ? even_ : odd_;
  if (i < 0 || i >= rows.rows()) throw error(errc::bad_argument, "basis index out of range");
  std::vector<std::uint32_t> v(rows.row(i).begin(), rows.row(i).end());
  return SuperMatrix::from_coords(ctx_, v);
}

std::vector<SuperMatrix> Subspace::basis() const {
  std::vector<SuperMatrix> out;
  for (int r = 0; r < even_.rows(); ++r) out.push_back(basis_element(Parity::even, r));
  for (int r = 0; r < odd_.rows(); ++r) out.push_back(basis_element(Parity::odd, r));
  return out;
}

bool Subspace::contains(const SuperMatrix& x) const {
  require_same_algebra(ctx_, x.ctx());
  auto coords = x.to_coords();
  std::vector<std::uint32_t> even_part(coords.size(), 0u), odd_part(coords.size(), 0u);
  int nn = ctx_.total();
  for (int c = 0; c < static_cast<int>(coords.size()); ++c) {
    if (coords[c] == 0) continue;
    (unit_parity(ctx_, c / nn, c % nn) ? odd_part : even_part)[c] = coords[c];
  }
  return express_in_rowspace(even_, piv_even_, even_part).has_value() &&
         express_in_rowspace(odd_, piv_odd_, odd_part).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.even_.rows(); ++r) {
    if (!express_in_rowspace(even_, piv_even_, other.even_.row(r))) return false;
  }
  for (int r = 0; r < other.odd_.rows(); ++r) {
    if (!express_in_rowspace(odd_, piv_odd_, other.odd_.row(r))) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.ctx_, b.ctx_);
  FpMatrix even_rows = a.even_;
  FpMatrix odd_rows = a.odd_;
  for (int r = 0; r < b.even_.rows(); ++r) even_rows.append_row(b.even_.row(r));
  for (int r = 0; r < b.odd_.rows(); ++r) odd_rows.append_row(b.odd_.row(r));
  return Subspace::from_rows(a.ctx_, std::move(even_rows), std::move(odd_rows));
}

namespace {

// Zassenhaus: rows of [A|A] and [B|0]; after elimination the rows whose left
// half vanished carry a basis of the intersection in their right half.
FpMatrix intersect_rows(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  int d = a.cols();
  FpMatrix big(f, a.rows() + b.rows(), 2 * d);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < d; ++c) {
      big.set(r, c, a.at(r, c));
      big.set(r, c + d, a.at(r, c));
    }
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < d; ++c) big.set(a.rows() + r, c, b.at(r, c));
  rref_in_place(big);
  FpMatrix out(f, 0, d);
  std::vector<std::uint32_t> tmp(d);
  for (int r = 0; r < big.rows(); ++r) {
    bool left_zero = true;
    for (int c = 0; c < d && left_zero; ++c) left_zero = big.at(r, c) == 0;
    if (!left_zero) continue;
    for (int c = 0; c < d; ++c) tmp[c] = big.at(r, c + d);
    out.append_row(tmp);
  }
  rref_in_place(out);
  return out;
}

} // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.ctx_, b.ctx_);
  return Subspace::from_rows(a.ctx_, intersect_rows(a.ctx_.field, a.even_, b.even_),
                             intersect_rows(a.ctx_.field, a.odd_, b.odd_));
}

// ---------------------------------------------------------------------------
// Algebra constructions

Subspace full_algebra(const AlgebraContext& ctx) {
  std::vector<SuperMatrix> gens;
  int nn = ctx.total();
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) {
      SuperMatrix u(ctx);
      u.add_entry_lin(r, c, 1);
      gens.push_back(std::move(u));
    }
  return Subspace::span(ctx, gens);
}

SuperMatrix nilpotent_e(const AlgebraContext& ctx, const Pyramid& p) {
  if (p.m() != ctx.m || p.n() != ctx.n)
    throw error(errc::context_mismatch, "pyramid size disagrees with the algebra");
  SuperMatrix e(ctx);
  for (int j = 1; j <= p.num_rows(); ++j) {
    auto row = p.boxes_in_row(j);
    for (size_t t = 0; t + 1 < row.size(); ++t) e.add_entry(row[t], row[t + 1], 1);
  }
  return e;
}

SuperMatrix nilpotent_e(const AlgebraContext& ctx, const PartitionPair& pp) {
  if (pp.m() != ctx.m || pp.n() != ctx.n)
    throw error(errc::invalid_partition_pair,
                "(r,q) is a partition of (" + std::to_string(pp.m()) + "|" +
                    std::to_string(pp.n()) + "), algebra is (" + std::to_string(ctx.m) + "|" +
                    std::to_string(ctx.n) + ")");
  return nilpotent_e(ctx, dynkin_pyramid(pp));
}

Subspace grading_subspace(const AlgebraContext& ctx, const Pyramid& p, int k) {
  std::vector<SuperMatrix> gens;
  for (BoxId i : p.boxes())
    for (BoxId j : p.boxes())
      if (degree(p, i, j) == k) gens.push_back(SuperMatrix::unit(ctx, i, j));
  return Subspace::span(ctx, gens);
}

std::map<int, Subspace> pyramid_grading(const AlgebraContext& ctx, const Pyramid& p) {
  std::map<int, std::vector<SuperMatrix>> buckets;
  for (BoxId i : p.boxes())
    for (BoxId j : p.boxes())
      buckets[degree(p, i, j)].push_back(SuperMatrix::unit(ctx, i, j));
  std::map<int, Subspace> out;
  for (auto& [k, gens] : buckets) out.emplace(k, Subspace::span(ctx, gens));
  return out;
}

Subspace parabolic(const AlgebraContext& ctx, const Pyramid& p) {
  std::vector<SuperMatrix> gens;
  for (BoxId i : p.boxes())
    for (BoxId j : p.boxes())
      if (p.col_of(i) <= p.col_of(j)) gens.push_back(SuperMatrix::unit(ctx, i, j));
  return Subspace::span(ctx, gens);
}

int CocharacterWeights::of(BoxId b) const {
  const auto& w = b.parity == Parity::even ? even : odd;
  if (b.index < 1 || b.index > static_cast<int>(w.size()))
    throw error(errc::unknown_box, "no box " + box_str(b));
  return w[b.index - 1];
}

CocharacterWeights cocharacter_weights(const PartitionPair& pp) {
  CocharacterWeights w;
  for (const auto& row : merge_shapes(pp.r, pp.q).rows) {
    auto& target = row.parity == Parity::even ? w.even : w.odd;
    for (int t = 0; t < row.length; ++t) target.push_back(row.length - 1 - 2 * t);
  }
  return w;
}

std::map<int, Subspace> dynkin_grading(const AlgebraContext& ctx, const PartitionPair& pp) {
  CocharacterWeights w = cocharacter_weights(pp);
  std::vector<BoxId> all;
  for (int i = 1; i <= ctx.m; ++i) all.push_back(even_box(i));
  for (int i = 1; i <= ctx.n; ++i) all.push_back(odd_box(i));
  std::map<int, std::vector<SuperMatrix>> buckets;
  for (BoxId i : all)
    for (BoxId j : all) buckets[w.of(i) - w.of(j)].push_back(SuperMatrix::unit(ctx, i, j));
  std::map<int, Subspace> out;
  for (auto& [k, gens] : buckets) out.emplace(k, Subspace::span(ctx, gens));
  return out;
}

ChiFunctional::ChiFunctional(AlgebraContext ctx, SuperMatrix e)
    : ctx_(std::move(ctx)), e_(std::move(e)) {
  if (e_.parity() != MatrixParity::even)
    throw error(errc::parity_violation, "chi requires an even element");
}

bool ChiFunctional::vanishes_on(const Subspace& s) const {
  for (const auto& b : s.basis())
    if ((*this)(b) != 0) return false;
  return true;
}

ChiFunctional chi_functional(const AlgebraContext& ctx, const SuperMatrix& e) {
  return ChiFunctional(ctx, e);
}

std::vector<std::uint32_t> ad_apply(const SuperMatrix& x, std::span<const std::uint32_t> v) {
  SuperMatrix y = SuperMatrix::from_coords(x.ctx(), v);
  return supercommutator(x, y).to_coords();
}

FpMatrix bracket_matrix(const SuperMatrix& x, const FpMatrix& domain, const FpMatrix& codomain) {
  return restrict_map(
      [&x](std::span<const std::uint32_t> v) { return ad_apply(x, v); }, domain, codomain);
}

bool bracket_closed(const Subspace& s) {
  auto basis = s.basis();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!s.contains(supercommutator(a, b))) return false;
  return true;
}

bool is_bracket_ideal(const Subspace& ideal, const Subspace& ambient) {
  auto outer = ambient.basis();
  auto inner = ideal.basis();
  for (const auto& a : outer)
    for (const auto& u : inner)
      if (!ideal.contains(supercommutator(a, u))) return false;
  return true;
}

} // namespace kwmod
