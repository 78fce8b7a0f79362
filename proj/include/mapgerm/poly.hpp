#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapgerm/monomial.hpp"

namespace mapgerm {

using Rational = mpq_class;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded order and no stored coefficient is ever zero, so
/// two polynomials compare equal exactly when their term maps agree.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLess>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total degree; 0 for the zero polynomial.
  unsigned degree() const;
  /// Lowest total degree of a term; nullopt for the zero polynomial.
  std::optional<unsigned> order() const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  Poly derivative(std::size_t var) const;
  Poly truncated(unsigned degree) const;

  /// p(args_1, ..., args_n), fully expanded.
  Poly substitute(std::span<const Poly> args) const;
  /// Same, discarding every term of total degree above `degree` along the way.
  Poly substitute(std::span<const Poly> args, unsigned degree) const;

  /// Re-embeds into a ring with more variables; old variable i maps to slot i.
  Poly extended(std::size_t new_nvars) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Poly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// a*b with every term of degree above `degree` dropped.
Poly multiply_truncated(const Poly& a, const Poly& b, unsigned degree);

/// Renders a rational as "3", "-1/2".
std::string rational_to_string(const Rational& q);

}  // namespace mapgerm
