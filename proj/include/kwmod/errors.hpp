#ifndef KWMOD_ERRORS_HPP
#define KWMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kwmod {

/// Typed failure conditions. Every throw site in the library uses one of
/// these so callers (and the sweep runner) can react per condition instead
/// of string-matching.
enum class errc {
  not_weakly_decreasing,
  invalid_partition_pair,
  shape_violation,
  unknown_box,
  mixed_parity,
  image_escapes_codomain,
  odd_d0,
  chi_nonzero_on_parabolic,
  block_shape_mismatch,
  parity_violation,
  invalid_bound,
  invalid_context,
  context_mismatch,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case errc::invalid_partition_pair: return "InvalidPartitionPair";
    case errc::shape_violation: return "ShapeViolation";
    case errc::unknown_box: return "UnknownBox";
    case errc::mixed_parity: return "MixedParityInput";
    case errc::image_escapes_codomain: return "ImageEscapesCodomain";
    case errc::odd_d0: return "OddD0";
    case errc::chi_nonzero_on_parabolic: return "ChiNonzeroOnParabolic";
    case errc::block_shape_mismatch: return "BlockShapeMismatch";
    case errc::parity_violation: return "ParityViolation";
    case errc::invalid_bound: return "InvalidBound";
    case errc::invalid_context: return "InvalidContext";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace kwmod

#endif
