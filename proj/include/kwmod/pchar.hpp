#ifndef KWMOD_PCHAR_HPP
#define KWMOD_PCHAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwmod/kw.hpp"

namespace kwmod {

/// Diagonal semisimple element of the even part, one scalar per box of the
/// natural module.
struct SemisimplePart {
  std::vector<std::uint32_t> even_diag; // length m
  std::vector<std::uint32_t> odd_diag;  // length n

  friend bool operator==(const SemisimplePart&, const SemisimplePart&) = default;
  std::string str() const; // "0,1|0"
};

/// Parses "a1,...,am|b1,...,bn"; entries reduce mod p. For an sl context the
/// supertrace of s must vanish.
SemisimplePart parse_semisimple(const AlgebraContext& ctx, const std::string& text);

SuperMatrix semisimple_matrix(const AlgebraContext& ctx, const SemisimplePart& s);

/// One eigenvalue class of s: the gl(m_i|n_i) block on those indices,
/// optionally with the Jordan type of the nilpotent part on the block.
struct LeviBlock {
  std::uint32_t eigenvalue = 0;
  std::vector<int> even_indices; // 1-based box indices, increasing
  std::vector<int> odd_indices;
  std::optional<PartitionPair> jordan;

  int block_m() const { return static_cast<int>(even_indices.size()); }
  int block_n() const { return static_cast<int>(odd_indices.size()); }
};

/// g = u ⊕ l ⊕ u⁻ with l = g^s the sum of the eigenvalue blocks (plus, for
/// sl, the traceless block-center directions recorded in `toral`), u spanned
/// by the units pointing from smaller to larger eigenvalue.
struct LeviDecomposition {
  AlgebraContext ctx;
  SemisimplePart s;
  std::vector<LeviBlock> blocks; // sorted by eigenvalue ascending
  Subspace levi;
  Subspace nilradical;       // u
  Subspace nilradical_minus; // u⁻
  Subspace toral;            // zero for gl
};

LeviDecomposition levi_decompose(const AlgebraContext& ctx, const SemisimplePart& s);

/// Jordan type per eigenvalue; blocks without an entry get the zero
/// nilpotent.
using BlockTypes = std::map<std::uint32_t, PartitionPair>;

/// Parses "LAMBDA:R|Q", e.g. "0:3,1|2,1".
std::pair<std::uint32_t, PartitionPair> parse_block_type(const AlgebraContext& ctx,
                                                         const std::string& text);

/// x = s + n with n the block-diagonal Jordan nilpotent prescribed by the
/// types. Fills in the blocks' jordan fields; throws block_shape_mismatch
/// when a type does not partition its block or names a missing eigenvalue.
SuperMatrix build_x(LeviDecomposition& dec, const BlockTypes& types);
SuperMatrix build_x(const AlgebraContext& ctx, const SemisimplePart& s, const BlockTypes& types);

/// d' = componentwise sum of the per-block kw_dims, each computed in the
/// block's ambient gl(m_i|n_i).
KwDims levi_kw_dims(const LeviDecomposition& dec);

/// The Levi-reduction bookkeeping: sdim g - sdim g^x = 2 sdim u⁻ +
/// (sdim l - sdim l^n), sdim l - sdim l^n = d', dim u_i = (d_i - d'_i)/2,
/// t ⊆ l^n, xi(u) = 0, p_Pi = l ⊕ u closed with nilradical u, and the
/// product factorization of the bound through the Levi step.
VerificationReport check_levi_identities(const AlgebraContext& ctx, const SemisimplePart& s,
                                         const BlockTypes& types);

/// (d0/2, d1/2) for x = s + n, with the evenness of d', d and their
/// differences asserted (parity_violation otherwise) so the factorization
/// p^(d'0/2) 2^(d'1/2) * p^((d0-d'0)/2) 2^((d1-d'1)/2) is honest exponent
/// arithmetic.
ExponentDim kw_bound_general(const AlgebraContext& ctx, const SemisimplePart& s,
                             const BlockTypes& types);

/// Recovers (s, per-block Jordan types) from an even x whose semisimple part
/// is already diagonal: s = diag(x), n = x - s must commute with s and be
/// nilpotent.
std::pair<SemisimplePart, BlockTypes> jordan_pair(const AlgebraContext& ctx,
                                                  const SuperMatrix& x);

/// Kernel of ad x restricted to a bracket-stable subspace (x even).
Subspace centralizer_in(const Subspace& domain, const SuperMatrix& x);

} // namespace kwmod

#endif
