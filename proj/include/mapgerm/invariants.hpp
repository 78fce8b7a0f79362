#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/germ.hpp"
#include "mapgerm/jet_space.hpp"

namespace mapgerm {

/// Jet image of T K_e f = tf(theta_n) + f^*m_p theta(f).
struct KeTangent {
  JetSubspace span;
  /// Smallest degree d with m^d theta(f) inside T K_e f, if found.
  std::optional<unsigned> certified_degree;
};

KeTangent ke_tangent(const MapGerm& f, const ComputeOptions& options = {});

/// dim theta(f) / T K_e f.
CodimReport ke_codim(const MapGerm& f, const ComputeOptions& options = {});

/// Complement of T K_e f inside m_n theta(f); meaningful for rank-0 germs,
/// where T K_e f lies in m_n theta(f).
std::vector<GermVector> ke_maximal_complement(const MapGerm& f, const ComputeOptions& options = {});

struct ConstantFieldCount {
  /// Dimension of the span of the classes of d/dX_j in N K_e f.
  std::size_t dimension = 0;
  /// Number of individual d/dX_j outside T K_e f.
  std::size_t literal_count = 0;
};

/// c(f). Throws InconclusiveError if K_e-codimension is not certified.
ConstantFieldCount c_of_f(const MapGerm& f, const ComputeOptions& options = {});

struct NfReport {
  std::size_t dimension = 0;
  std::vector<GermVector> basis;
  std::size_t ke_codim = 0;
  std::size_t c_value = 0;
  std::size_t c_literal = 0;
  unsigned truncation_degree = 0;
};

/// N(f) = theta(f) / (tf(theta_n) + f^*m_p theta(f) + omega f(theta_p)).
/// The dimension is checked against ke_codim - c(f), each side computed from
/// its own span; a mismatch raises std::logic_error.
NfReport nf_space(const MapGerm& f, const ComputeOptions& options = {});

/// A_e-codimension read from the jet image of tf(theta_n) + omega f(theta_p).
/// Never certified: heuristic once the value has held for `ae_plateau`
/// consecutive degrees beyond the K_e certificate degree with every
/// complement representative of degree <= d - 2, inconclusive otherwise.
CodimReport ae_codim(const MapGerm& f, const ComputeOptions& options = {});

/// Jet image of T A_e f at degree d.
JetSubspace ae_tangent(const MapGerm& f, unsigned d);

/// Basis of N A_e f whose first entries are the N(f) basis.
/// Throws InconclusiveError if A_e-codimension did not stabilize.
std::vector<GermVector> ae_normal_basis(const MapGerm& f, const ComputeOptions& options = {});

}  // namespace mapgerm
