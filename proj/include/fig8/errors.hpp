#pragma once

#include <stdexcept>
#include <string>

namespace fig8 {

// Failure categories shared across the library.  The category is what tests
// and the CLI dispatch on; the message carries the specifics.
enum class ErrorKind {
  no_convergence,
  singular_sample,
  degenerate_degree,
  unstable_differentiation,
  invalid_argument,
  on_branch_cut,
  outside_domain,
  singular_ratio,
  singular_argument,
  singular_prefactor,
  ambiguous_root,
  outside_range,
  degenerate_T,
  undefined_domain,
  io_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::no_convergence: return "no-convergence";
    case ErrorKind::singular_sample: return "singular-sample";
    case ErrorKind::degenerate_degree: return "degenerate-degree";
    case ErrorKind::unstable_differentiation: return "unstable-differentiation";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::on_branch_cut: return "on-branch-cut";
    case ErrorKind::outside_domain: return "outside-domain";
    case ErrorKind::singular_ratio: return "singular-ratio";
    case ErrorKind::singular_argument: return "singular-argument";
    case ErrorKind::singular_prefactor: return "singular-prefactor";
    case ErrorKind::ambiguous_root: return "ambiguous-root";
    case ErrorKind::outside_range: return "outside-range";
    case ErrorKind::degenerate_T: return "degenerate-T";
    case ErrorKind::undefined_domain: return "undefined-domain";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fig8
