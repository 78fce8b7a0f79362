#include "mapgerm/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapgerm {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Poly p(nvars);
  p.add_term(Monomial::variable(nvars, index), 1);
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<unsigned> Poly::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial does not match polynomial ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& other) const {
  if (other.nvars_ != nvars_) {
    throw std::invalid_argument("polynomial variable count mismatch: " + std::to_string(nvars_) +
                                " vs " + std::to_string(other.nvars_));
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly multiply_truncated(const Poly& a, const Poly& b, unsigned degree) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > degree) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > degree) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("derivative variable index out of range");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    out.add_term(m.lowered(var), c * m[var]);
  }
  return out;
}

Poly Poly::truncated(unsigned degree) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > degree) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

namespace {

Poly substitute_impl(const Poly& p, std::span<const Poly> args, std::optional<unsigned> bound) {
  if (args.size() != p.nvars()) {
    throw std::invalid_argument("substitution arity mismatch: expected " +
                                std::to_string(p.nvars()) + " arguments, got " +
                                std::to_string(args.size()));
  }
  std::size_t target_vars = args.empty() ? 0 : args.front().nvars();
  for (const auto& a : args)
    if (a.nvars() != target_vars) throw std::invalid_argument("substitution arguments disagree on variable count");

  auto mul = [&](const Poly& a, const Poly& b) {
    return bound ? multiply_truncated(a, b, *bound) : a * b;
  };

  // powers[i][k] = args[i]^k, grown on demand.
  std::vector<std::vector<Poly>> powers(args.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target_vars, 1));
    while (cache.size() <= k) cache.push_back(mul(cache.back(), args[i]));
    return cache[k];
  };

  Poly out(target_vars);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target_vars, c);
    for (std::size_t i = 0; i < m.nvars() && !term.is_zero(); ++i) {
      if (m[i] > 0) term = mul(term, power(i, m[i]));
    }
    out += term;
  }
  return out;
}

}  // namespace

Poly Poly::substitute(std::span<const Poly> args) const {
  return substitute_impl(*this, args, std::nullopt);
}

Poly Poly::substitute(std::span<const Poly> args, unsigned degree) const {
  return substitute_impl(*this, args, degree);
}

Poly Poly::extended(std::size_t new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("cannot shrink a polynomial ring");
  Poly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(m.exponents().begin(), m.exponents().end());
    e.resize(new_nvars, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::string rational_to_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw std::invalid_argument("name list does not match variable count");
  if (terms_.empty()) return "0";
  // Highest degree first; graded order inside a degree.
  std::vector<std::pair<const Monomial*, const Rational*>> ordered;
  for (const auto& [m, c] : terms_) ordered.emplace_back(&m, &c);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.first->degree() > b.first->degree();
  });
  std::string out;
  for (const auto& [m, c] : ordered) {
    Rational coeff = *c;
    bool negative = sgn(coeff) < 0;
    if (negative) coeff = -coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    bool unit = coeff == 1;
    if (m->degree() == 0) {
      out += rational_to_string(coeff);
    } else if (unit) {
      out += m->to_string(names);
    } else {
      out += rational_to_string(coeff) + '*' + m->to_string(names);
    }
  }
  return out;
}

}  // namespace mapgerm
