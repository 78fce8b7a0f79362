#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/germ.hpp"

namespace mapgerm {

enum class OpsuAnswer { yes, yes_trivially_stable, no };

std::string to_string(OpsuAnswer answer);

struct OpsuVerdict {
  OpsuAnswer admits = OpsuAnswer::no;
  std::size_t nf_dimension = 0;
  std::optional<Unfolding> witness;
};

/// f + (l1 + sum_i l_i p_i(f)) gamma_1, with the p_i written in the target
/// variables of f.
struct VersalNormalForm {
  GermVector gamma_1;
  /// gamma_2..gamma_k after absorbing a multiple of gamma_1, so that
  /// p_i(f) gamma_1 - gamma_i lies in T A_e f.
  std::vector<GermVector> gammas;
  std::vector<Poly> multipliers;
  /// (f + l1 gamma_1, l1).
  Unfolding opsu;
  Unfolding versal;
  unsigned working_degree = 0;
};

/// (f + sum u_i gamma_i, u) over the N(f) basis. Zero parameters when f is stable.
Unfolding minimal_stable_unfolding(const MapGerm& f, const ComputeOptions& options = {});

/// Mather's construction from the rank-0 core: ke_codim - p + r parameters.
Unfolding mather_unfolding(const MapGerm& f, const ComputeOptions& options = {});

bool verify_stable(const MapGerm& f, const ComputeOptions& options = {});
inline bool verify_stable(const Unfolding& u, const ComputeOptions& options = {}) {
  return verify_stable(u.total, options);
}

OpsuVerdict opsu(const MapGerm& f, const ComputeOptions& options = {});

/// Throws std::invalid_argument unless dim N(f) = 1, and InconclusiveError
/// when A_e-codimension does not stabilize or no multiplier is found.
VersalNormalForm opsu_normal_form(const MapGerm& f, const ComputeOptions& options = {});

/// "(x, y^4+x*y+u1*y^2, u1)": base terms first, then the parameter terms.
std::string to_string(const Unfolding& u);

}  // namespace mapgerm
