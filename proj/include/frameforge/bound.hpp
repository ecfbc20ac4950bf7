#pragma once

#include <string>

#include "frameforge/errors.hpp"

namespace frameforge {

/// How a bound was obtained.
enum class BoundMethod {
  extreme_exact,   // exact value (extreme-point enumeration, SVD, closed form)
  sampled,         // best value seen over seeded probes
  holder,          // analytic Holder-type upper bound
  cauchy_schwarz,  // Hilbert-space Cauchy-Schwarz upper bound
  prefix_sum,      // sum of term-wise norm products
};

inline const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::extreme_exact: return "extreme_exact";
    case BoundMethod::sampled: return "sampled";
    case BoundMethod::holder: return "holder";
    case BoundMethod::cauchy_schwarz: return "cauchy_schwarz";
    case BoundMethod::prefix_sum: return "prefix_sum";
  }
  return "unknown";
}

/// A certified interval [lower, upper] with provenance for each side.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  BoundMethod lower_method = BoundMethod::sampled;
  BoundMethod upper_method = BoundMethod::sampled;

  static BoundPair exact(double value) {
    return {value, value, BoundMethod::extreme_exact, BoundMethod::extreme_exact};
  }

  bool is_exact(double tol = 1e-12) const { return upper - lower <= tol; }

  /// Midpoint; meaningful once the pair is (nearly) exact.
  double value() const { return 0.5 * (lower + upper); }

  /// Enforces the lower <= upper invariant up to roundoff slack.
  BoundPair& validate() {
    if (lower > upper + 1e-12)
      throw InvalidArgumentError("BoundPair: lower " + std::to_string(lower) +
                                 " exceeds upper " + std::to_string(upper));
    // tiny inversions from roundoff are collapsed
    if (lower > upper) lower = upper;
    return *this;
  }
};

}  // namespace frameforge
