#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mapgerm {

/// Exponent vector of a monomial x_1^a_1 ... x_n^a_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  /// Monomial with exponent `index` lowered by one; requires exps[index] > 0.
  Monomial lowered(std::size_t index) const;

  bool operator==(const Monomial& other) const = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded order, lowest degree first. Inside one degree the monomial with the
/// larger exponent on an earlier variable comes first: x^2, x*y, y^2.
std::strong_ordering graded_compare(const Monomial& a, const Monomial& b);

struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of exactly `degree` in `nvars` variables, in graded order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All monomials of degree <= `degree`, in graded order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree);

/// C(n + k, k) without overflow for the sizes used here.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace mapgerm
