#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mapgerm/poly.hpp"

namespace mapgerm {

/// A p-tuple of function germs in n variables: an element of theta(f).
class GermVector {
 public:
  GermVector() = default;
  GermVector(std::size_t nvars, std::vector<Poly> components);

  static GermVector zero(std::size_t nvars, std::size_t ncomponents);
  /// e_component scaled by the monomial m.
  static GermVector monomial(std::size_t ncomponents, std::size_t component, const Monomial& m);
  static GermVector constant(std::size_t nvars, std::size_t ncomponents, std::size_t component);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Poly>& components() const { return components_; }

  bool is_zero() const;
  unsigned degree() const;

  GermVector truncated(unsigned degree) const;

  GermVector& operator+=(const GermVector& other);
  GermVector& operator-=(const GermVector& other);
  friend GermVector operator+(GermVector a, const GermVector& b) { return a += b; }
  friend GermVector operator-(GermVector a, const GermVector& b) { return a -= b; }
  friend GermVector operator*(const Poly& h, const GermVector& v);
  friend GermVector operator*(const Rational& c, const GermVector& v);

  bool operator==(const GermVector& other) const = default;

  /// "(p_1, ..., p_p)" in the given variable names.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_shape(const GermVector& other) const;

  std::size_t nvars_ = 0;
  std::vector<Poly> components_;
};

}  // namespace mapgerm
