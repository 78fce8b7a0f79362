#include "mapgerm/jet_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mapgerm {

JetBasisIndex::JetBasisIndex(std::size_t nvars, std::size_t ncomponents, unsigned degree_bound)
    : nvars_(nvars), ncomponents_(ncomponents), degree_bound_(degree_bound) {
  if (ncomponents == 0) throw std::invalid_argument("jet space needs at least one component");
  for (unsigned d = 0; d <= degree_bound; ++d) {
    degree_start_.push_back(monomials_.size());
    for (auto& m : monomials_of_degree(nvars, d)) monomials_.push_back(std::move(m));
  }
  degree_start_.push_back(monomials_.size());
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::size_t> JetBasisIndex::monomial_index(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t JetBasisIndex::columns_up_to_degree(unsigned d) const {
  if (d >= degree_bound_) return size();
  return degree_start_[d + 1] * ncomponents_;
}

SparseVector JetBasisIndex::encode(const GermVector& v) const {
  if (v.nvars() != nvars_ || v.size() != ncomponents_) throw std::invalid_argument("germ vector does not fit jet space");
  SparseVector out;
  for (std::size_t comp = 0; comp < ncomponents_; ++comp) {
    for (const auto& [m, c] : v[comp].terms()) {
      if (m.degree() > degree_bound_) break;
      out.push_back({static_cast<std::uint32_t>(column(comp, lookup_.at(m))), c});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return out;
}

GermVector JetBasisIndex::decode(const SparseVector& v) const {
  std::vector<Poly> comps(ncomponents_, Poly(nvars_));
  for (const auto& e : v) comps[column_component(e.col)].add_term(column_monomial(e.col), e.value);
  return GermVector(nvars_, std::move(comps));
}

GermVector JetBasisIndex::unit(std::size_t col) const {
  return GermVector::monomial(ncomponents_, column_component(col), column_monomial(col));
}

SparseVector JetBasisIndex::shift(const SparseVector& v, std::size_t mono) const {
  const Monomial& factor = monomials_[mono];
  SparseVector out;
  out.reserve(v.size());
  for (const auto& e : v) {
    const Monomial& m = column_monomial(e.col);
    if (m.degree() + factor.degree() > degree_bound_) break;  // columns are degree sorted
    std::size_t prod = lookup_.at(m * factor);
    out.push_back({static_cast<std::uint32_t>(column(column_component(e.col), prod)), e.value});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return out;
}

JetSubspace::JetSubspace(JetIndexPtr index, SpanKind kind)
    : index_(std::move(index)), kind_(kind), pivot_row_(index_->size(), -1) {}

SparseVector JetSubspace::reduce(const SparseVector& v) const {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& e : v) {
    if (e.col >= pivot_row_.size()) throw std::invalid_argument("vector does not fit jet space");
    acc.emplace_hint(acc.end(), e.col, e.value);
  }
  Rational scratch;
  auto it = acc.begin();
  while (it != acc.end()) {
    const std::uint32_t col = it->first;
    const std::int32_t r = pivot_row_[col];
    if (r < 0) {
      ++it;
      continue;
    }
    Rational factor = std::move(it->second);
    it = acc.erase(it);
    const auto& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < row.size(); ++k) {
      mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), row[k].value.get_mpq_t());
      auto [jt, inserted] = acc.try_emplace(row[k].col);
      if (inserted) {
        mpq_neg(jt->second.get_mpq_t(), scratch.get_mpq_t());
      } else {
        mpq_sub(jt->second.get_mpq_t(), jt->second.get_mpq_t(), scratch.get_mpq_t());
        if (sgn(jt->second) == 0) acc.erase(jt);
      }
    }
    // Entries beyond the pivot may have been inserted before `it`'s successor.
    it = acc.upper_bound(col);
  }
  SparseVector out;
  out.reserve(acc.size());
  for (auto& [col, value] : acc) out.push_back({col, std::move(value)});
  return out;
}

bool JetSubspace::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  if (r.front().value != 1) {
    Rational inv = 1 / r.front().value;
    for (auto& e : r) e.value *= inv;
  }
  pivot_row_[r.front().col] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> JetSubspace::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<std::size_t> JetSubspace::non_pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::size_t JetSubspace::codimension_at(unsigned d) const {
  const std::size_t limit = index_->columns_up_to_degree(d);
  std::size_t count = 0;
  for (std::size_t c = 0; c < limit; ++c)
    if (pivot_row_[c] < 0) ++count;
  return count;
}

std::size_t JetSubspace::non_pivots_of_degree(unsigned d) const {
  if (d > index_->degree_bound()) return 0;
  const std::size_t begin = d == 0 ? 0 : index_->columns_up_to_degree(d - 1);
  const std::size_t end = index_->columns_up_to_degree(d);
  std::size_t count = 0;
  for (std::size_t c = begin; c < end; ++c)
    if (pivot_row_[c] < 0) ++count;
  return count;
}

std::vector<GermVector> JetSubspace::complement() const {
  std::vector<GermVector> out;
  for (std::size_t c : non_pivot_columns()) out.push_back(index_->unit(c));
  return out;
}

void JetSubspace::make_reduced() {
  // Sort rows by pivot, then replace each tail by its normal form.
  std::vector<SparseVector> sorted;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] >= 0) sorted.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  rows_ = std::move(sorted);
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().col] = static_cast<std::int32_t>(i);

  std::vector<SparseVector> reduced(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    SparseVector tail(rows_[i].begin() + 1, rows_[i].end());
    SparseVector nf = reduce(tail);
    reduced[i].push_back(rows_[i].front());
    reduced[i].insert(reduced[i].end(), std::make_move_iterator(nf.begin()), std::make_move_iterator(nf.end()));
  }
  rows_ = std::move(reduced);
}

bool JetSubspace::is_reduced() const {
  std::size_t last = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty() || row.front().value != 1) return false;
    if (i > 0 && row.front().col <= last) return false;
    last = row.front().col;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (pivot_row_[row[k].col] >= 0) return false;
  }
  return true;
}

JetSubspace span(const std::vector<GermVector>& vectors, JetIndexPtr index, SpanKind kind) {
  JetSubspace s(std::move(index), kind);
  for (const auto& v : vectors) {
    if (v.nvars() != s.index().nvars() || v.size() != s.index().ncomponents())
      throw std::invalid_argument("span: vector shape does not match jet space");
    s.add(v);
  }
  s.make_reduced();
  return s;
}

Membership membership(const GermVector& v, const JetSubspace& s) {
  SparseVector nf = s.reduce(s.index().encode(v));
  Membership out;
  out.inside = nf.empty();
  out.normal_form = s.index().decode(nf);
  return out;
}

std::vector<GermVector> module_saturate(const std::vector<GermVector>& generators, unsigned d) {
  std::vector<GermVector> out;
  if (generators.empty()) return out;
  const std::size_t nvars = generators.front().nvars();
  for (const auto& g : generators) {
    if (g.nvars() != nvars || g.size() != generators.front().size())
      throw std::invalid_argument("module_saturate: generators disagree on shape");
  }
  for (const auto& g : generators) {
    for (const auto& m : monomials_up_to(nvars, d)) {
      GermVector v = Poly::term(m, 1) * g;
      v = v.truncated(d);
      if (v.is_zero()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  }
  return out;
}

void add_module(JetSubspace& s, const std::vector<GermVector>& generators) {
  const bool pure = s.dimension() == 0 || s.kind() == SpanKind::module;
  const auto& index = s.index();
  for (const auto& g : generators) {
    SparseVector base = index.encode(g);
    if (base.empty()) continue;
    const unsigned order = index.column_degree(base.front().col);
    for (std::size_t mono = 0; mono < index.monomial_count(); ++mono) {
      if (index.monomial(mono).degree() + order > index.degree_bound()) break;
      s.add(index.shift(base, mono));
    }
  }
  if (pure) s.set_kind(SpanKind::module);
}

bool nakayama_certificate(const JetSubspace& s) {
  return nakayama_certificate_at(s, s.index().degree_bound());
}

bool nakayama_certificate_at(const JetSubspace& s, unsigned d) {
  if (s.kind() != SpanKind::module)
    throw std::logic_error("Nakayama certificate applies only to module spans");
  if (d > s.index().degree_bound()) throw std::out_of_range("certificate degree above the jet bound");
  return s.non_pivots_of_degree(d) == 0;
}

EscalatedSpan escalate_module_span(const std::vector<GermVector>& generators, std::size_t nvars,
                                   std::size_t ncomponents, unsigned start, unsigned cap) {
  for (unsigned degree = start;; ++degree) {
    JetSubspace s(enumerate_basis(nvars, ncomponents, degree), SpanKind::module);
    add_module(s, generators);
    for (unsigned d = 0; d <= degree; ++d) {
      if (nakayama_certificate_at(s, d)) return {std::move(s), d};
    }
    if (degree >= cap) return {std::move(s), std::nullopt};
  }
}

}  // namespace mapgerm
