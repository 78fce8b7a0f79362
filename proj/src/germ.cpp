#include "mapgerm/germ.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mapgerm/jet_space.hpp"

namespace mapgerm {

namespace {

bool overlaps(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::any_of(a.begin(), a.end(),
                     [&](const std::string& s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

bool has_duplicates(const std::vector<std::string>& names) {
  std::set<std::string> seen(names.begin(), names.end());
  return seen.size() != names.size();
}

}  // namespace

std::vector<std::string> default_target_names(std::size_t p, const std::vector<std::string>& avoid) {
  static const std::vector<std::string> letters = {"X", "Y", "Z", "W"};
  if (p <= letters.size()) {
    std::vector<std::string> names(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p));
    if (!overlaps(names, avoid)) return names;
  }
  for (std::string prefix = "Y";; prefix += "_") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= p; ++i) names.push_back(prefix + std::to_string(i));
    if (!overlaps(names, avoid)) return names;
  }
}

MapGerm::MapGerm(std::vector<Poly> components, std::vector<std::string> source_names,
                 std::vector<std::string> target_names)
    : components_(std::move(components)),
      source_names_(std::move(source_names)),
      target_names_(std::move(target_names)) {
  if (components_.empty()) throw std::invalid_argument("map-germ needs at least one component");
  if (target_names_.empty()) target_names_ = default_target_names(components_.size(), source_names_);
  if (target_names_.size() != components_.size())
    throw std::invalid_argument("target name list does not match the number of components");
  if (has_duplicates(source_names_) || has_duplicates(target_names_) || overlaps(source_names_, target_names_))
    throw std::invalid_argument("variable names must be distinct and source/target names disjoint");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].nvars() != source_names_.size())
      throw std::invalid_argument("component " + std::to_string(i + 1) + " has the wrong number of variables");
    if (sgn(components_[i].constant_term()) != 0)
      throw std::invalid_argument("component " + std::to_string(i + 1) + " has a nonzero constant term");
  }
}

unsigned MapGerm::degree() const {
  unsigned d = 0;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

RationalMatrix MapGerm::jacobian_at_origin() const {
  const std::size_t n = source_dim();
  RationalMatrix j(target_dim(), n);
  for (std::size_t i = 0; i < target_dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) j(i, k) = components_[i].coefficient(Monomial::variable(n, k));
  return j;
}

std::string MapGerm::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string(source_names_);
  }
  return out + ")";
}

Unfolding make_unfolding(const MapGerm& f, const std::vector<GermVector>& directions, const std::string& prefix) {
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();
  const std::size_t d = directions.size();

  std::string stem = prefix;
  std::vector<std::string> params;
  for (;;) {
    params.clear();
    for (std::size_t j = 1; j <= d; ++j) params.push_back(stem + std::to_string(j));
    if (!overlaps(params, f.source_names()) && !overlaps(params, f.target_names())) break;
    stem += "_";
  }

  std::vector<std::string> source = f.source_names();
  source.insert(source.end(), params.begin(), params.end());
  std::vector<std::string> target = f.target_names();
  for (const auto& name : params) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    while (std::find(source.begin(), source.end(), upper) != source.end() ||
           std::find(target.begin(), target.end(), upper) != target.end())
      upper += "_";
    target.push_back(upper);
  }

  std::vector<Poly> comps;
  for (std::size_t i = 0; i < p; ++i) comps.push_back(f.component(i).extended(n + d));
  for (std::size_t j = 0; j < d; ++j) {
    if (directions[j].nvars() != n || directions[j].size() != p)
      throw std::invalid_argument("unfolding direction does not lie in theta(f)");
    Poly u = Poly::variable(n + d, n + j);
    for (std::size_t i = 0; i < p; ++i) comps[i] += u * directions[j][i].extended(n + d);
  }
  for (std::size_t j = 0; j < d; ++j) comps.push_back(Poly::variable(n + d, n + j));

  return Unfolding{f, params, MapGerm(std::move(comps), std::move(source), std::move(target)), directions};
}

std::vector<GermVector> tf_generators(const MapGerm& f) {
  std::vector<GermVector> out;
  for (std::size_t i = 0; i < f.source_dim(); ++i) {
    std::vector<Poly> col;
    for (const auto& c : f.components()) col.push_back(c.derivative(i));
    out.emplace_back(f.source_dim(), std::move(col));
  }
  return out;
}

std::vector<GermVector> contact_generators(const MapGerm& f) {
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();
  std::vector<GermVector> out;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<Poly> comps(p, Poly(n));
      comps[i] = f.component(j);
      out.emplace_back(n, std::move(comps));
    }
  }
  return out;
}

std::vector<GermVector> omega_generators(const MapGerm& f, unsigned d) {
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();
  std::vector<Poly> truncated;
  for (const auto& c : f.components()) truncated.push_back(c.truncated(d));

  // (Y^beta o f) built from Y^(beta - e_i) o f, memoized by monomial.
  std::unordered_map<Monomial, Poly, MonomialHash> pulled;
  std::vector<GermVector> out;
  for (const auto& beta : monomials_up_to(p, d)) {
    Poly value(n);
    if (beta.degree() == 0) {
      value = Poly::constant(n, 1);
    } else {
      std::size_t i = 0;
      while (beta[i] == 0) ++i;
      const Poly& prev = pulled.at(beta.lowered(i));
      value = multiply_truncated(prev, truncated[i], d);
    }
    if (!value.is_zero()) {
      for (std::size_t j = 0; j < p; ++j) {
        std::vector<Poly> comps(p, Poly(n));
        comps[j] = value;
        out.emplace_back(n, std::move(comps));
      }
    }
    pulled.emplace(beta, std::move(value));
  }
  return out;
}

CodimReport multiplicity(const MapGerm& f, const ComputeOptions& options) {
  const std::size_t n = f.source_dim();
  std::vector<GermVector> ideal;
  for (const auto& c : f.components()) ideal.emplace_back(n, std::vector<Poly>{c});
  const unsigned start = std::max(2U, f.degree());
  auto result = escalate_module_span(ideal, n, 1, start, std::max(start, options.max_degree));

  CodimReport report;
  const auto& s = result.span;
  if (result.certified_degree) {
    report.status = CertStatus::certified;
    report.truncation_degree = *result.certified_degree;
  } else {
    report.status = CertStatus::inconclusive;
    report.truncation_degree = s.index().degree_bound();
  }
  for (std::size_t col : s.non_pivot_columns()) {
    if (s.index().column_degree(col) > report.truncation_degree) break;
    report.complement_basis.push_back(s.index().unit(col));
  }
  report.value = report.complement_basis.size();
  return report;
}

std::size_t corank(const MapGerm& f) {
  return std::min(f.source_dim(), f.target_dim()) - f.jacobian_at_origin().rank();
}

Rank0Core rank0_core(const MapGerm& f, unsigned d) {
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();

  RationalMatrix reduced, t;
  const std::vector<std::size_t> pivots = f.jacobian_at_origin().rref(reduced, &t);
  const std::size_t r = pivots.size();

  std::vector<std::size_t> core_vars;
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(pivots.begin(), pivots.end(), k) == pivots.end()) core_vars.push_back(k);

  // w = S^{-1} x: pivot rows of the reduced Jacobian, then the free coordinates.
  RationalMatrix s_inv(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) s_inv(i, k) = reduced(i, k);
  for (std::size_t j = 0; j < core_vars.size(); ++j) s_inv(r + j, core_vars[j]) = 1;
  const RationalMatrix s = *s_inv.inverse();

  std::vector<Poly> w_vars;
  for (std::size_t k = 0; k < n; ++k) w_vars.push_back(Poly::variable(n, k));
  const std::vector<Poly> x_of_w = apply_linear(s, w_vars);
  std::vector<Poly> f_of_w;
  for (const auto& c : f.components()) f_of_w.push_back(c.substitute(x_of_w));
  const std::vector<Poly> h = apply_linear(t, f_of_w);

  std::vector<Poly> split(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t k = r; k < n; ++k) split.push_back(w_vars[k]);
  CoordinateChange phi(split, ChangeSide::source);
  CoordinateChange psi = formal_inverse(phi, d);

  std::vector<Poly> normalized;
  for (const auto& c : h) normalized.push_back(c.substitute(psi.components(), d));
  for (std::size_t i = 0; i < r; ++i) {
    if (normalized[i] != w_vars[i]) throw std::runtime_error("rank splitting failed to normalize the germ");
  }

  std::vector<std::string> w_names;
  for (std::size_t i = 0; i < r; ++i) w_names.push_back(f.source_names()[pivots[i]]);
  for (std::size_t k : core_vars) w_names.push_back(f.source_names()[k]);

  // f_0(y) = g(0, y).
  const std::size_t m = n - r;
  std::vector<Poly> restrict_args;
  for (std::size_t i = 0; i < r; ++i) restrict_args.push_back(Poly(m));
  for (std::size_t j = 0; j < m; ++j) restrict_args.push_back(Poly::variable(m, j));
  std::vector<Poly> core_comps;
  for (std::size_t i = r; i < p; ++i) core_comps.push_back(normalized[i].substitute(restrict_args));

  std::vector<std::string> core_names;
  for (std::size_t k : core_vars) core_names.push_back(f.source_names()[k]);
  std::vector<std::string> core_targets(f.target_names().begin() + static_cast<std::ptrdiff_t>(r),
                                        f.target_names().end());

  if (core_comps.empty()) {
    throw std::invalid_argument("germ is a submersion; its rank-0 core is empty");
  }

  ChangeLog log{r,
                t,
                s_inv,
                phi,
                psi,
                core_vars,
                d,
                MapGerm(normalized, w_names, f.target_names())};
  return Rank0Core{MapGerm(std::move(core_comps), std::move(core_names), std::move(core_targets)), std::move(log)};
}

}  // namespace mapgerm
