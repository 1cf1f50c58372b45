#ifndef KWMOD_KW_HPP
#define KWMOD_KW_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kwmod/superalgebra.hpp"

namespace kwmod {

/// The number p^a * 2^b kept as the exponent pair; the materialized value
/// quickly overflows for desk-size algebras, the exponents never do.
struct ExponentDim {
  long long p_exp = 0;
  long long two_exp = 0;

  friend bool operator==(const ExponentDim&, const ExponentDim&) = default;
  std::string str(std::uint32_t p) const;
  /// Materializes the value when it fits into 64 bits.
  std::optional<unsigned long long> small_value(std::uint32_t p) const;
};

/// d_i = dim g_i - dim (g^x)_i for i in Z_2.
struct KwDims {
  int d0 = 0;
  int d1 = 0;
  friend bool operator==(const KwDims&, const KwDims&) = default;
  std::string str() const { return "(" + std::to_string(d0) + "," + std::to_string(d1) + ")"; }
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct InstanceDesc {
  int m = 0;
  int n = 0;
  std::uint32_t p = 0;
  AlgebraKind kind = AlgebraKind::gl;
  std::optional<PartitionPair> pp;
  std::string extra; // free-form description (Levi instances)

  std::string str() const;
};

/// Outcome of one verification run: an ordered list of named checks, each
/// pass/fail/skipped. Check names are unique within a report; a repeated
/// registration is a programming error and throws.
struct VerificationReport {
  InstanceDesc instance;
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::optional<ExponentDim> bound;
  std::vector<std::pair<std::string, std::string>> notes; // informational metadata

  void add(const std::string& name, bool ok, const std::string& detail = "");
  void add_skipped(const std::string& name, const std::string& why);
  void merge(const VerificationReport& other); // appends the other's checks
  void note(const std::string& key, const std::string& value);
  int failures() const;
  bool all_passed() const { return failures() == 0; }
  std::string summary() const;
};

/// Kernel of ad x inside the context's algebra, split by parity. x must be
/// even.
Subspace centralizer(const AlgebraContext& ctx, const SuperMatrix& x);

KwDims kw_dims(const AlgebraContext& ctx, const SuperMatrix& x);

/// Dimension lower bound for reduced enveloping algebra modules with
/// p-character x: p^(d0/2) * 2^(ceil(d1/2)). Throws odd_d0 when d0 is odd;
/// d1 oddness is absorbed by the ceiling (for gl/sl it never happens, which
/// the verification battery asserts separately).
ExponentDim kw_bound(const KwDims& d);

/// dim U_chi(g) as exponents: (dim g_0, dim g_1).
ExponentDim uchi_dimension(const AlgebraContext& ctx);

/// The six Dynkin-grading properties of ad e (injectivity below the wall,
/// surjectivity above, parity splitting, position of e, centralizer
/// dimension, form orthogonality and degree symmetry).
VerificationReport check_dynkin_properties(const AlgebraContext& ctx, const PartitionPair& pp);

/// sdim g - sdim g^e == sum_{k>=2} 2 sdim g(-k) + sdim g(-1), per parity.
bool check_dim_identity(const AlgebraContext& ctx, const PartitionPair& pp);

/// The cocharacter grading equals the grading of the symmetric pyramid.
bool check_gradings_agree(const AlgebraContext& ctx, const PartitionPair& pp);

/// Shifting changes even unit degrees not at all and odd unit degrees by
/// exactly one.
bool check_degree_shift(const AlgebraContext& ctx, const PartitionPair& pp);

/// Parabolic comparison between the symmetric and shifted pyramids:
/// p ⊆ p', g(-1) splits as l1 ⊕ l2 of equal halves, p' = p ⊕ l1, and the
/// dimension identity sdim p' = sdim p + sdim g(-1)/2.
VerificationReport check_parabolic_identity(const AlgebraContext& ctx, const PartitionPair& pp);

/// Exponents of dim U_chi(g) / dim U_chi(p'): (dim g_0 - dim p'_0,
/// dim g_1 - dim p'_1). Requires chi to vanish on p' and throws
/// chi_nonzero_on_parabolic otherwise (that would be a construction bug).
ExponentDim induced_dimension(const AlgebraContext& ctx, const PartitionPair& pp);

/// Everything above on one (r,q): the full nilpotent-character battery used
/// by the sweep and the acceptance suite. Library errors become failed
/// checks, never crashes.
VerificationReport verify_nilpotent_instance(const AlgebraContext& ctx, const PartitionPair& pp);

} // namespace kwmod

#endif
