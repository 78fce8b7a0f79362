#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mapgerm/poly.hpp"

namespace mapgerm {

/// Small dense rational matrix, row-major. Used for Jacobians at the origin
/// and linear coordinate changes, never for jet-space elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

  std::size_t rank() const;
  std::optional<RationalMatrix> inverse() const;

  /// Reduced row echelon form. Returns the pivot column of each nonzero row.
  /// If `transform` is given it receives T with T * (*this) = rref.
  std::vector<std::size_t> rref(RationalMatrix& out, RationalMatrix* transform = nullptr) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Applies M to a column of polynomials: out_i = sum_j M(i,j) * polys_j.
std::vector<Poly> apply_linear(const RationalMatrix& m, const std::vector<Poly>& polys);

}  // namespace mapgerm
