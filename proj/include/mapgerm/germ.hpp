#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/coordinate_change.hpp"
#include "mapgerm/germ_vector.hpp"
#include "mapgerm/linalg.hpp"
#include "mapgerm/poly.hpp"

namespace mapgerm {

/// Polynomial map-germ f : (K^n,0) -> (K^p,0) with named coordinates.
class MapGerm {
 public:
  /// Target names default to X, Y, Z, W (or Y1..Yp when p > 4).
  MapGerm(std::vector<Poly> components, std::vector<std::string> source_names,
          std::vector<std::string> target_names = {});

  std::size_t source_dim() const { return source_names_.size(); }
  std::size_t target_dim() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& component(std::size_t i) const { return components_[i]; }
  const std::vector<std::string>& source_names() const { return source_names_; }
  const std::vector<std::string>& target_names() const { return target_names_; }

  unsigned degree() const;
  RationalMatrix jacobian_at_origin() const;

  /// "(x, y^4+x*y)"
  std::string to_string() const;

  /// f viewed as an element of theta(f), e.g. for building unfoldings.
  GermVector as_vector() const { return GermVector(source_dim(), components_); }

  bool operator==(const MapGerm& other) const = default;

 private:
  std::vector<Poly> components_;
  std::vector<std::string> source_names_;
  std::vector<std::string> target_names_;
};

std::vector<std::string> default_target_names(std::size_t p, const std::vector<std::string>& avoid);

/// F(x,u) = (f_u(x), u) with f_0 = f.
struct Unfolding {
  MapGerm base;
  std::vector<std::string> parameters;
  MapGerm total;
  /// The deformation directions dF/du_j at u = 0, as elements of theta(f).
  std::vector<GermVector> velocities;
};

/// Builds (f + sum_j u_j * directions_j, u) with fresh parameter names
/// `prefix`1, `prefix`2, ... that avoid the source names of f.
Unfolding make_unfolding(const MapGerm& f, const std::vector<GermVector>& directions,
                         const std::string& prefix = "u");

/// Columns of the Jacobian: df(d/dx_i).
std::vector<GermVector> tf_generators(const MapGerm& f);

/// f_j * e_i for every pair (i, j); O_n-generators of f^*m_p theta(f).
std::vector<GermVector> contact_generators(const MapGerm& f);

/// {(Y^beta o f) e_j : |beta| <= d}, truncated at d. K-spans the d-jets of
/// omega f(theta_p); beta = 0 gives the constant fields.
std::vector<GermVector> omega_generators(const MapGerm& f, unsigned d);

/// dim O_n / f^*m_p, certified by Nakayama or inconclusive at the cap.
CodimReport multiplicity(const MapGerm& f, const ComputeOptions& options = {});

/// min(n, p) - rank df(0).
std::size_t corank(const MapGerm& f);

/// Record of the changes used to split off the rank of f.
struct ChangeLog {
  std::size_t rank = 0;
  /// T with T * df(0) in row echelon form; applied on the target.
  RationalMatrix target_linear;
  /// S^{-1}: new source coordinates w = S^{-1} x.
  RationalMatrix source_linear_inverse;
  /// phi(w) = (h_1(w), ..., h_r(w), w_{r+1}, ..., w_n) with h = T f(S w).
  CoordinateChange source_split;
  /// Formal inverse of source_split to the working degree.
  CoordinateChange source_split_inverse;
  /// Original source indices that survive as the core variables.
  std::vector<std::size_t> core_variables;
  unsigned degree = 0;
  /// T f(S psi(u, y)) truncated: (u_1, ..., u_r, g(u, y)).
  MapGerm normalized;
};

struct Rank0Core {
  MapGerm core;
  ChangeLog log;
};

/// Writes f, up to terms of degree above d, as an unfolding of a rank-0 germ
/// f_0(y) = g(0, y) with df_0(0) = 0.
Rank0Core rank0_core(const MapGerm& f, unsigned d);

}  // namespace mapgerm
