#include "mapgerm/linalg.hpp"

#include <stdexcept>

namespace mapgerm {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<std::size_t> RationalMatrix::rref(RationalMatrix& out, RationalMatrix* transform) const {
  out = *this;
  RationalMatrix t = RationalMatrix::identity(rows_);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && sgn(out(sel, col)) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(out(sel, j), out(row, j));
      for (std::size_t j = 0; j < rows_; ++j) std::swap(t(sel, j), t(row, j));
    }
    Rational inv = 1 / out(row, col);
    for (std::size_t j = 0; j < cols_; ++j) out(row, j) *= inv;
    for (std::size_t j = 0; j < rows_; ++j) t(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn(out(r, col)) == 0) continue;
      Rational factor = out(r, col);
      for (std::size_t j = 0; j < cols_; ++j) out(r, j) -= factor * out(row, j);
      for (std::size_t j = 0; j < rows_; ++j) t(r, j) -= factor * t(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (transform) *transform = std::move(t);
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix scratch;
  return rref(scratch).size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  RationalMatrix reduced, t;
  if (rref(reduced, &t).size() != rows_) return std::nullopt;
  return t;
}

std::vector<Poly> apply_linear(const RationalMatrix& m, const std::vector<Poly>& polys) {
  if (m.cols() != polys.size()) throw std::invalid_argument("linear map does not match vector length");
  std::size_t nvars = polys.empty() ? 0 : polys.front().nvars();
  std::vector<Poly> out(m.rows(), Poly(nvars));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[i] += polys[j] * m(i, j);
  return out;
}

}  // namespace mapgerm
