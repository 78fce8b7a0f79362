#include "mapgerm/germ_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapgerm {

GermVector::GermVector(std::size_t nvars, std::vector<Poly> components)
    : nvars_(nvars), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.nvars() != nvars_) throw std::invalid_argument("germ vector component has wrong variable count");
}

GermVector GermVector::zero(std::size_t nvars, std::size_t ncomponents) {
  return GermVector(nvars, std::vector<Poly>(ncomponents, Poly(nvars)));
}

GermVector GermVector::monomial(std::size_t ncomponents, std::size_t component, const Monomial& m) {
  if (component >= ncomponents) throw std::out_of_range("component index out of range");
  GermVector v = zero(m.nvars(), ncomponents);
  v.components_[component].add_term(m, 1);
  return v;
}

GermVector GermVector::constant(std::size_t nvars, std::size_t ncomponents, std::size_t component) {
  return monomial(ncomponents, component, Monomial(nvars));
}

bool GermVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

unsigned GermVector::degree() const {
  unsigned d = 0;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

GermVector GermVector::truncated(unsigned degree) const {
  GermVector out = *this;
  for (auto& c : out.components_) c = c.truncated(degree);
  return out;
}

void GermVector::check_shape(const GermVector& other) const {
  if (other.nvars_ != nvars_ || other.size() != size())
    throw std::invalid_argument("germ vector shape mismatch");
}

GermVector& GermVector::operator+=(const GermVector& other) {
  check_shape(other);
  for (std::size_t i = 0; i < size(); ++i) components_[i] += other.components_[i];
  return *this;
}

GermVector& GermVector::operator-=(const GermVector& other) {
  check_shape(other);
  for (std::size_t i = 0; i < size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

GermVector operator*(const Poly& h, const GermVector& v) {
  GermVector out = v;
  for (auto& c : out.components_) c = h * c;
  return out;
}

GermVector operator*(const Rational& c, const GermVector& v) {
  GermVector out = v;
  for (auto& comp : out.components_) comp *= c;
  return out;
}

std::string GermVector::to_string(std::span<const std::string> names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string(names);
  }
  return out + ")";
}

}  // namespace mapgerm
