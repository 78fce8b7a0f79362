#include "mapgerm/coordinate_change.hpp"

#include <stdexcept>

namespace mapgerm {

CoordinateChange::CoordinateChange(std::vector<Poly> components, ChangeSide side)
    : components_(std::move(components)), side_(side) {
  const std::size_t n = components_.size();
  for (const auto& c : components_) {
    if (c.nvars() != n) throw std::invalid_argument("coordinate change must map K^n to K^n");
    if (sgn(c.constant_term()) != 0) throw std::invalid_argument("coordinate change must fix the origin");
  }
  if (linear_part().rank() != n) throw std::domain_error("coordinate change has singular linear part");
}

CoordinateChange CoordinateChange::identity(std::size_t n, ChangeSide side) {
  return linear(RationalMatrix::identity(n), side);
}

CoordinateChange CoordinateChange::linear(const RationalMatrix& m, ChangeSide side) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < m.cols(); ++i) vars.push_back(Poly::variable(m.cols(), i));
  return CoordinateChange(apply_linear(m, vars), side);
}

RationalMatrix CoordinateChange::linear_part() const {
  const std::size_t n = components_.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = components_[i].coefficient(Monomial::variable(n, j));
  return m;
}

CoordinateChange CoordinateChange::compose(const CoordinateChange& inner) const {
  std::vector<Poly> out;
  for (const auto& c : components_) out.push_back(c.substitute(inner.components_));
  return CoordinateChange(std::move(out), side_);
}

CoordinateChange CoordinateChange::compose(const CoordinateChange& inner, unsigned degree) const {
  std::vector<Poly> out;
  for (const auto& c : components_) out.push_back(c.substitute(inner.components_, degree));
  return CoordinateChange(std::move(out), side_);
}

CoordinateChange CoordinateChange::truncated(unsigned degree) const {
  std::vector<Poly> out;
  for (const auto& c : components_) out.push_back(c.truncated(std::max(degree, 1U)));
  return CoordinateChange(std::move(out), side_);
}

CoordinateChange formal_inverse(const CoordinateChange& phi, unsigned degree) {
  const std::size_t n = phi.dimension();
  auto a_inv = phi.linear_part().inverse();
  if (!a_inv) throw std::domain_error("formal inverse requires an invertible linear part");

  std::vector<Poly> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Poly::variable(n, i));

  // phi = A x + N(x); iterate psi <- A^{-1} (y - N(psi)). Each pass fixes one more degree.
  std::vector<Poly> nonlinear;
  for (const auto& c : phi.components()) {
    Poly rest(n);
    for (const auto& [m, coeff] : c.terms())
      if (m.degree() >= 2) rest.add_term(m, coeff);
    nonlinear.push_back(std::move(rest));
  }

  std::vector<Poly> psi = apply_linear(*a_inv, vars);
  for (unsigned pass = 1; pass < degree; ++pass) {
    std::vector<Poly> rhs;
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(vars[i] - nonlinear[i].substitute(psi, degree));
    std::vector<Poly> next = apply_linear(*a_inv, rhs);
    if (next == psi) break;
    psi = std::move(next);
  }
  for (auto& c : psi) c = c.truncated(std::max(degree, 1U));
  return CoordinateChange(std::move(psi), phi.side());
}

}  // namespace mapgerm
