#include "mapgerm/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapgerm {

namespace {

unsigned start_degree(const MapGerm& f) { return std::max(2U, f.degree()); }

std::vector<GermVector> ke_generators(const MapGerm& f) {
  std::vector<GermVector> gens = tf_generators(f);
  for (auto& g : contact_generators(f)) gens.push_back(std::move(g));
  return gens;
}

std::vector<GermVector> complement_up_to(const JetSubspace& s, unsigned degree) {
  std::vector<GermVector> out;
  for (std::size_t col : s.non_pivot_columns()) {
    if (s.index().column_degree(col) > degree) break;
    out.push_back(s.index().unit(col));
  }
  return out;
}

const KeTangent& require_certified(const KeTangent& kt) {
  if (!kt.certified_degree)
    throw InconclusiveError("K_e-codimension not certified below the degree cap (likely infinite)");
  return kt;
}

}  // namespace

std::string to_string(CertStatus status) {
  switch (status) {
    case CertStatus::certified: return "certified";
    case CertStatus::heuristic: return "heuristic";
    case CertStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

KeTangent ke_tangent(const MapGerm& f, const ComputeOptions& options) {
  const unsigned start = start_degree(f);
  auto result = escalate_module_span(ke_generators(f), f.source_dim(), f.target_dim(), start,
                                     std::max(start, options.max_degree));
  return KeTangent{std::move(result.span), result.certified_degree};
}

CodimReport ke_codim(const MapGerm& f, const ComputeOptions& options) {
  KeTangent kt = ke_tangent(f, options);
  CodimReport report;
  if (kt.certified_degree) {
    report.status = CertStatus::certified;
    report.truncation_degree = *kt.certified_degree;
  } else {
    report.status = CertStatus::inconclusive;
    report.truncation_degree = kt.span.index().degree_bound();
  }
  report.complement_basis = complement_up_to(kt.span, report.truncation_degree);
  report.value = report.complement_basis.size();
  return report;
}

std::vector<GermVector> ke_maximal_complement(const MapGerm& f, const ComputeOptions& options) {
  KeTangent kt = ke_tangent(f, options);
  require_certified(kt);
  std::vector<GermVector> out;
  for (auto& v : complement_up_to(kt.span, *kt.certified_degree))
    if (v.degree() >= 1) out.push_back(std::move(v));
  return out;
}

namespace {

ConstantFieldCount count_constants(const MapGerm& f, const KeTangent& kt) {
  const auto& s = kt.span;
  JetSubspace classes(s.index_ptr());
  ConstantFieldCount out;
  for (std::size_t j = 0; j < f.target_dim(); ++j) {
    SparseVector nf = s.reduce(s.index().encode(GermVector::constant(f.source_dim(), f.target_dim(), j)));
    if (nf.empty()) continue;
    ++out.literal_count;
    classes.add(nf);
  }
  out.dimension = classes.dimension();
  return out;
}

}  // namespace

ConstantFieldCount c_of_f(const MapGerm& f, const ComputeOptions& options) {
  KeTangent kt = ke_tangent(f, options);
  return count_constants(f, require_certified(kt));
}

NfReport nf_space(const MapGerm& f, const ComputeOptions& options) {
  KeTangent kt = ke_tangent(f, options);
  require_certified(kt);
  const unsigned d = *kt.certified_degree;
  const ConstantFieldCount c = count_constants(f, kt);
  const std::size_t ke = kt.span.codimension_at(d);

  // Literal definition: module part plus the K-span of omega f jets.
  JetSubspace s(enumerate_basis(f.source_dim(), f.target_dim(), d));
  add_module(s, ke_generators(f));
  for (const auto& g : omega_generators(f, d)) s.add(g);
  s.set_kind(SpanKind::linear);

  NfReport report;
  report.basis = s.complement();
  report.dimension = report.basis.size();
  report.ke_codim = ke;
  report.c_value = c.dimension;
  report.c_literal = c.literal_count;
  report.truncation_degree = d;
  if (report.dimension + report.c_value != report.ke_codim) {
    throw std::logic_error("internal consistency: dim N(f) = " + std::to_string(report.dimension) +
                           " but K_e-codimension - c(f) = " + std::to_string(ke) + " - " +
                           std::to_string(c.dimension));
  }
  return report;
}

JetSubspace ae_tangent(const MapGerm& f, unsigned d) {
  JetSubspace s(enumerate_basis(f.source_dim(), f.target_dim(), d));
  add_module(s, tf_generators(f));
  for (const auto& g : omega_generators(f, d)) s.add(g);
  s.set_kind(SpanKind::linear);
  return s;
}

CodimReport ae_codim(const MapGerm& f, const ComputeOptions& options) {
  if (options.ae_plateau < 2) throw std::invalid_argument("A_e plateau length must be at least 2");
  const KeTangent kt = ke_tangent(f, options);
  const unsigned cap = std::max(start_degree(f), options.max_degree);
  const unsigned plateau = options.ae_plateau;

  CodimReport report;
  for (unsigned degree = start_degree(f);; ++degree) {
    if (kt.certified_degree && degree < *kt.certified_degree + plateau && degree < cap) {
      degree = std::min(cap, *kt.certified_degree + plateau);
    }
    JetSubspace s = ae_tangent(f, degree);
    if (kt.certified_degree) {
      const unsigned anchor = *kt.certified_degree;
      for (unsigned last = anchor + plateau; last <= degree; ++last) {
        const std::size_t value = s.codimension_at(last);
        bool flat = true;
        for (unsigned d = last - plateau + 1; d < last; ++d) flat = flat && s.codimension_at(d) == value;
        const bool low = s.non_pivots_of_degree(last) == 0 && s.non_pivots_of_degree(last - 1) == 0;
        if (flat && low) {
          report.status = CertStatus::heuristic;
          report.truncation_degree = last;
          report.complement_basis = complement_up_to(s, last);
          report.value = report.complement_basis.size();
          return report;
        }
      }
    }
    if (degree >= cap) {
      report.status = CertStatus::inconclusive;
      report.truncation_degree = degree;
      report.complement_basis = complement_up_to(s, degree);
      report.value = report.complement_basis.size();
      return report;
    }
  }
}

std::vector<GermVector> ae_normal_basis(const MapGerm& f, const ComputeOptions& options) {
  const CodimReport ae = ae_codim(f, options);
  if (ae.status == CertStatus::inconclusive)
    throw InconclusiveError("A_e-codimension did not stabilize below the degree cap");
  const NfReport nf = nf_space(f, options);

  JetSubspace s = ae_tangent(f, ae.truncation_degree);
  std::vector<GermVector> out;
  for (const auto& g : nf.basis) {
    if (!s.add(g)) throw std::logic_error("internal consistency: N(f) basis is dependent modulo T A_e f");
    out.push_back(g);
  }
  for (auto& v : complement_up_to(s, ae.truncation_degree)) out.push_back(std::move(v));
  if (out.size() != ae.value) throw std::logic_error("internal consistency: A_e normal basis has the wrong size");
  return out;
}

}  // namespace mapgerm
