#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mapgerm/germ_vector.hpp"
#include "mapgerm/monomial.hpp"

namespace mapgerm {

struct SparseEntry {
  std::uint32_t col;
  Rational value;
  bool operator==(const SparseEntry&) const = default;
};

/// Sorted by column, no zero values.
using SparseVector = std::vector<SparseEntry>;

/// Coordinates on the degree-<=d jets of p-tuples of functions in n variables.
///
/// Columns are ordered by degree, then graded monomial order, then component,
/// so column = monomial_index * ncomponents + component.
class JetBasisIndex {
 public:
  JetBasisIndex(std::size_t nvars, std::size_t ncomponents, unsigned degree_bound);

  std::size_t nvars() const { return nvars_; }
  std::size_t ncomponents() const { return ncomponents_; }
  unsigned degree_bound() const { return degree_bound_; }
  std::size_t size() const { return monomials_.size() * ncomponents_; }

  std::size_t monomial_count() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t mono) const { return monomials_[mono]; }
  std::optional<std::size_t> monomial_index(const Monomial& m) const;

  std::size_t column(std::size_t component, std::size_t mono) const { return mono * ncomponents_ + component; }
  std::size_t column_component(std::size_t col) const { return col % ncomponents_; }
  const Monomial& column_monomial(std::size_t col) const { return monomials_[col / ncomponents_]; }
  unsigned column_degree(std::size_t col) const { return column_monomial(col).degree(); }

  /// Number of columns of degree <= d; these form a prefix.
  std::size_t columns_up_to_degree(unsigned d) const;

  /// Coordinates of v with every term above the bound dropped.
  SparseVector encode(const GermVector& v) const;
  GermVector decode(const SparseVector& v) const;
  GermVector unit(std::size_t col) const;

  /// Coordinates of x^mono * v, truncated.
  SparseVector shift(const SparseVector& v, std::size_t mono) const;

  bool operator==(const JetBasisIndex& other) const {
    return nvars_ == other.nvars_ && ncomponents_ == other.ncomponents_ &&
           degree_bound_ == other.degree_bound_;
  }

 private:
  std::size_t nvars_;
  std::size_t ncomponents_;
  unsigned degree_bound_;
  std::vector<Monomial> monomials_;
  std::vector<std::size_t> degree_start_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> lookup_;
};

using JetIndexPtr = std::shared_ptr<const JetBasisIndex>;

inline JetIndexPtr enumerate_basis(std::size_t nvars, std::size_t ncomponents, unsigned degree) {
  return std::make_shared<const JetBasisIndex>(nvars, ncomponents, degree);
}

/// Whether a span is known to be the jet image of an O_n-submodule.
/// Only module spans admit the Nakayama certificate.
enum class SpanKind { linear, module };

struct Membership {
  bool inside = false;
  GermVector normal_form;
};

/// Echelonized K-linear subspace of a jet space.
///
/// Each stored row is monic at its pivot, which is the row's lowest column.
/// Normal forms are unique: the representative of v + S supported on the
/// non-pivot columns.
class JetSubspace {
 public:
  explicit JetSubspace(JetIndexPtr index, SpanKind kind = SpanKind::linear);

  const JetBasisIndex& index() const { return *index_; }
  JetIndexPtr index_ptr() const { return index_; }
  SpanKind kind() const { return kind_; }
  void set_kind(SpanKind kind) { kind_ = kind; }

  std::size_t dimension() const { return rows_.size(); }
  std::size_t codimension() const { return index_->size() - rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Returns true if v was not already in the span.
  bool add(const SparseVector& v);
  bool add(const GermVector& v) { return add(index_->encode(v)); }

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> non_pivot_columns() const;

  /// Codimension of the projection of this span to degree-<=d jets.
  std::size_t codimension_at(unsigned d) const;
  /// Non-pivot columns of degree exactly d.
  std::size_t non_pivots_of_degree(unsigned d) const;

  /// Unit monomial vectors on the non-pivot columns, in column order.
  std::vector<GermVector> complement() const;

  /// Rewrites the rows into reduced echelon form.
  void make_reduced();
  bool is_reduced() const;

 private:
  JetIndexPtr index_;
  SpanKind kind_;
  std::vector<SparseVector> rows_;
  std::vector<std::int32_t> pivot_row_;
};

/// Reduced echelon span of `vectors`, truncated to the index bound.
JetSubspace span(const std::vector<GermVector>& vectors, JetIndexPtr index,
                 SpanKind kind = SpanKind::linear);

Membership membership(const GermVector& v, const JetSubspace& s);

/// {truncate(x^alpha * g) : g in generators, |alpha| <= d}, zero and
/// duplicate entries removed.
std::vector<GermVector> module_saturate(const std::vector<GermVector>& generators, unsigned d);

/// Adds every truncated monomial multiple of the generators to `s` and marks
/// it as a module span. Faster than span(module_saturate(...)).
void add_module(JetSubspace& s, const std::vector<GermVector>& generators);

/// True iff every degree-d basis jet lies in the span, d = the index bound.
/// By Nakayama this makes the codimension read at degree d exact.
/// Throws std::logic_error on a linear (non-module) span.
bool nakayama_certificate(const JetSubspace& s);

/// Same test at a lower degree d, using the projection of the span.
bool nakayama_certificate_at(const JetSubspace& s, unsigned d);

struct EscalatedSpan {
  JetSubspace span;
  /// Smallest degree at which the Nakayama certificate fired, if any.
  std::optional<unsigned> certified_degree;
};

/// Builds the jet image of the O_n-module generated by `generators` at
/// degrees start, start+1, ... until a certificate fires or `cap` is reached.
EscalatedSpan escalate_module_span(const std::vector<GermVector>& generators, std::size_t nvars,
                                   std::size_t ncomponents, unsigned start, unsigned cap);

}  // namespace mapgerm
