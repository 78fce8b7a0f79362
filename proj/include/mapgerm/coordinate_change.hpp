#pragma once

#include <vector>

#include "mapgerm/linalg.hpp"
#include "mapgerm/poly.hpp"

namespace mapgerm {

enum class ChangeSide { source, target };

/// Origin-preserving polynomial diffeomorphism germ (K^n,0) -> (K^n,0).
/// Construction rejects constant terms and a singular linear part.
class CoordinateChange {
 public:
  CoordinateChange(std::vector<Poly> components, ChangeSide side);

  static CoordinateChange identity(std::size_t n, ChangeSide side);
  static CoordinateChange linear(const RationalMatrix& m, ChangeSide side);

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  ChangeSide side() const { return side_; }

  RationalMatrix linear_part() const;

  /// (*this) o inner, optionally truncated at `degree`.
  CoordinateChange compose(const CoordinateChange& inner) const;
  CoordinateChange compose(const CoordinateChange& inner, unsigned degree) const;
  CoordinateChange truncated(unsigned degree) const;

  bool operator==(const CoordinateChange& other) const { return components_ == other.components_; }

 private:
  std::vector<Poly> components_;
  ChangeSide side_;
};

/// psi with phi o psi = psi o phi = id modulo terms of degree above `degree`.
/// Throws std::domain_error if the linear part of phi is singular.
CoordinateChange formal_inverse(const CoordinateChange& phi, unsigned degree);

}  // namespace mapgerm
