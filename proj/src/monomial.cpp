#include "mapgerm/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace mapgerm {

Monomial::Monomial(std::vector<unsigned> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("monomial variable count mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lowered(std::size_t index) const {
  if (index >= exps_.size() || exps_[index] == 0)
    throw std::invalid_argument("cannot lower a zero exponent");
  Monomial out = *this;
  --out.exps_[index];
  --out.degree_;
  return out;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering graded_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (auto c = ea.size() <=> eb.size(); c != 0) return c;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (unsigned e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL + (h >> 29);
  return h;
}

namespace {

void fill_degree(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  fill_degree(0, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= degree; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace mapgerm
