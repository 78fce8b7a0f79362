#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapgerm/germ_vector.hpp"

namespace mapgerm {

enum class CertStatus { certified, heuristic, inconclusive };

std::string to_string(CertStatus status);

/// A computed codimension together with how much it can be trusted.
struct CodimReport {
  std::size_t value = 0;
  CertStatus status = CertStatus::inconclusive;
  /// Jet degree at which the value was read.
  unsigned truncation_degree = 0;
  std::vector<GermVector> complement_basis;
};

/// Degree caps shared by every escalating computation.
struct ComputeOptions {
  unsigned max_degree = 14;
  /// Consecutive equal A_e values required before accepting a plateau.
  unsigned ae_plateau = 3;
};

/// Raised when an operation needs a certified input that could not be
/// obtained under the configured degree cap.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mapgerm
