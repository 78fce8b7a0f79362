#include "mapgerm/unfoldings.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "mapgerm/invariants.hpp"
#include "mapgerm/jet_space.hpp"
#include "mapgerm/linalg.hpp"

namespace mapgerm {

std::string to_string(OpsuAnswer answer) {
  switch (answer) {
    case OpsuAnswer::yes: return "yes";
    case OpsuAnswer::yes_trivially_stable: return "yes_trivially_stable";
    case OpsuAnswer::no: return "no";
  }
  return "no";
}

std::string to_string(const Unfolding& u) {
  const auto& names = u.base.source_names();
  std::string out = "(";
  for (std::size_t i = 0; i < u.base.target_dim(); ++i) {
    if (i) out += ", ";
    std::string comp = u.base.component(i).is_zero() ? "" : u.base.component(i).to_string(names);
    for (std::size_t j = 0; j < u.parameters.size(); ++j) {
      const Poly& g = u.velocities[j][i];
      if (g.is_zero()) continue;
      const std::string& param = u.parameters[j];
      if (g.size() == 1) {
        const auto& [m, c] = *g.terms().begin();
        Rational a = abs(c);
        bool negative = sgn(c) < 0;
        if (negative) comp += '-';
        else if (!comp.empty()) comp += '+';
        if (a != 1) comp += rational_to_string(a) + '*';
        comp += param;
        if (m.degree() > 0) comp += '*' + m.to_string(names);
      } else {
        if (!comp.empty()) comp += '+';
        comp += param + "*(" + g.to_string(names) + ")";
      }
    }
    out += comp.empty() ? "0" : comp;
  }
  for (const auto& param : u.parameters) out += ", " + param;
  return out + ")";
}

bool verify_stable(const MapGerm& f, const ComputeOptions& options) {
  const NfReport nf = nf_space(f, options);
  const bool mather = nf.dimension == 0;
  const CodimReport ae = ae_codim(f, options);
  if (ae.status == CertStatus::inconclusive) {
    // A nonzero N(F) already certifies instability; only a claim of stability
    // needs the jet computation to agree.
    if (!mather) return false;
    throw InconclusiveError("A_e-codimension did not stabilize below the degree cap");
  }
  if ((ae.value == 0) != mather) {
    throw std::logic_error("internal consistency: dim N(F) = " + std::to_string(nf.dimension) +
                           " but A_e-codimension = " + std::to_string(ae.value));
  }
  return mather;
}

Unfolding minimal_stable_unfolding(const MapGerm& f, const ComputeOptions& options) {
  return make_unfolding(f, nf_space(f, options).basis);
}

Unfolding mather_unfolding(const MapGerm& f, const ComputeOptions& options) {
  const KeTangent kt = ke_tangent(f, options);
  if (!kt.certified_degree)
    throw InconclusiveError("K_e-codimension not certified below the degree cap (likely infinite)");
  const std::size_t ke = kt.span.codimension_at(*kt.certified_degree);
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();
  const std::size_t r = f.jacobian_at_origin().rank();
  if (r == p) return make_unfolding(f, {});

  const unsigned d = std::max(f.degree(), *kt.certified_degree + 1);
  const Rank0Core split = rank0_core(f, d);
  const std::vector<GermVector> gammas = ke_maximal_complement(split.core, options);
  if (gammas.size() + p != ke + r) {
    throw std::logic_error("internal consistency: Mather construction gave " + std::to_string(gammas.size()) +
                           " parameters, expected " + std::to_string(ke) + " - " + std::to_string(p) + " + " +
                           std::to_string(r));
  }

  // gamma(y) sits in the last p - r slots of the normalized target; pull it
  // back through the linear target change and read y as the core variables.
  const RationalMatrix t_inv = *split.log.target_linear.inverse();
  std::vector<Poly> core_to_source;
  for (std::size_t k : split.log.core_variables) core_to_source.push_back(Poly::variable(n, k));

  std::vector<GermVector> directions;
  for (const auto& g : gammas) {
    std::vector<Poly> slots(p, Poly(n));
    for (std::size_t i = r; i < p; ++i) slots[i] = g[i - r].substitute(core_to_source);
    directions.emplace_back(n, apply_linear(t_inv, slots));
  }
  return make_unfolding(f, directions);
}

OpsuVerdict opsu(const MapGerm& f, const ComputeOptions& options) {
  const NfReport nf = nf_space(f, options);
  OpsuVerdict verdict;
  verdict.nf_dimension = nf.dimension;
  if (nf.dimension == 0) {
    verdict.admits = OpsuAnswer::yes_trivially_stable;
    verdict.witness = make_unfolding(f, {GermVector::zero(f.source_dim(), f.target_dim())});
  } else if (nf.dimension == 1) {
    verdict.admits = OpsuAnswer::yes;
    verdict.witness = make_unfolding(f, nf.basis);
  }
  return verdict;
}

namespace {

struct Reduced {
  std::vector<Rational> coords;
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
};

/// Solves sum_j c_j columns[j] = rhs; free unknowns are set to zero.
std::optional<std::vector<Rational>> solve(const std::vector<const Reduced*>& columns, const Reduced& rhs) {
  const std::size_t rows = rhs.coords.size();
  const std::size_t m = columns.size();
  RationalMatrix a(rows, m + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = columns[j]->coords[i];
    a(i, m) = rhs.coords[i];
  }
  RationalMatrix reduced;
  const auto pivots = a.rref(reduced);
  std::vector<Rational> x(m);
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] == m) return std::nullopt;
    x[pivots[row]] = reduced(row, m);
  }
  return x;
}

constexpr std::size_t kTripleBudget = 200000;

struct MultiplierSystem {
  std::vector<Monomial> betas;  // betas[0] is the constant monomial
  std::vector<Reduced> columns;
};

/// Coefficients over `betas` for gamma_i, preferring the sparsest support
/// among the non-constant monomials, then the lexicographically first.
std::optional<std::vector<Rational>> sparse_solution(const MultiplierSystem& sys, const Reduced& rhs) {
  std::vector<std::size_t> useful;
  for (std::size_t b = 1; b < sys.columns.size(); ++b)
    if (!sys.columns[b].is_zero()) useful.push_back(b);

  auto attempt = [&](const std::vector<std::size_t>& support) -> std::optional<std::vector<Rational>> {
    std::vector<const Reduced*> cols{&sys.columns[0]};
    for (std::size_t b : support) cols.push_back(&sys.columns[b]);
    auto x = solve(cols, rhs);
    if (!x) return std::nullopt;
    for (std::size_t j = 1; j < x->size(); ++j)
      if (sgn((*x)[j]) == 0) return std::nullopt;
    std::vector<Rational> full(sys.columns.size());
    full[0] = (*x)[0];
    for (std::size_t j = 0; j < support.size(); ++j) full[support[j]] = (*x)[j + 1];
    return full;
  };

  const std::size_t u = useful.size();
  for (std::size_t a = 0; a < u; ++a)
    if (auto s = attempt({useful[a]})) return s;
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = a + 1; b < u; ++b)
      if (auto s = attempt({useful[a], useful[b]})) return s;
  if (u >= 3 && u * (u - 1) * (u - 2) / 6 <= kTripleBudget) {
    for (std::size_t a = 0; a < u; ++a)
      for (std::size_t b = a + 1; b < u; ++b)
        for (std::size_t c = b + 1; c < u; ++c)
          if (auto s = attempt({useful[a], useful[b], useful[c]})) return s;
  }

  std::vector<const Reduced*> all;
  for (const auto& col : sys.columns) all.push_back(&col);
  return solve(all, rhs);
}

}  // namespace

VersalNormalForm opsu_normal_form(const MapGerm& f, const ComputeOptions& options) {
  const NfReport nf = nf_space(f, options);
  if (nf.dimension != 1) {
    throw std::invalid_argument("germ does not admit an OPSU: dim N(f) = " + std::to_string(nf.dimension));
  }
  const CodimReport ae = ae_codim(f, options);
  if (ae.status == CertStatus::inconclusive)
    throw InconclusiveError("A_e-codimension did not stabilize below the degree cap");
  const std::vector<GermVector> basis = ae_normal_basis(f, options);
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();

  const GermVector& gamma_1 = basis.front();
  Unfolding opsu_witness = make_unfolding(f, {gamma_1}, "l");
  if (basis.size() == 1) return VersalNormalForm{gamma_1, {}, {}, opsu_witness, opsu_witness, ae.truncation_degree};

  const unsigned cap = std::max(ae.truncation_degree, options.max_degree);
  for (unsigned d = ae.truncation_degree; d <= cap; ++d) {
    const JetSubspace tangent = ae_tangent(f, d);
    std::unordered_map<std::size_t, std::size_t> row_of;
    for (std::size_t col : tangent.non_pivot_columns()) row_of.emplace(col, row_of.size());
    auto reduce = [&](const GermVector& v) {
      Reduced r{std::vector<Rational>(row_of.size())};
      for (const auto& e : tangent.reduce(tangent.index().encode(v.truncated(d)))) r.coords[row_of.at(e.col)] = e.value;
      return r;
    };

    MultiplierSystem sys;
    std::vector<Poly> truncated;
    for (const auto& c : f.components()) truncated.push_back(c.truncated(d));
    std::unordered_map<Monomial, Poly, MonomialHash> pulled;
    for (const auto& beta : monomials_up_to(p, d)) {
      Poly value(n);
      if (beta.degree() == 0) {
        value = Poly::constant(n, 1);
      } else {
        std::size_t i = 0;
        while (beta[i] == 0) ++i;
        value = multiply_truncated(pulled.at(beta.lowered(i)), truncated[i], d);
      }
      sys.betas.push_back(beta);
      sys.columns.push_back(reduce(value * gamma_1));
      pulled.emplace(beta, std::move(value));
    }

    std::vector<Poly> multipliers;
    std::vector<GermVector> gammas;
    bool solved = true;
    for (std::size_t i = 1; i < basis.size() && solved; ++i) {
      auto x = sparse_solution(sys, reduce(basis[i]));
      if (!x) {
        solved = false;
        break;
      }
      Poly p_i(p);
      for (std::size_t b = 1; b < sys.betas.size(); ++b)
        if (sgn((*x)[b]) != 0) p_i.add_term(sys.betas[b], (*x)[b]);
      GermVector adjusted = basis[i] - (*x)[0] * gamma_1;
      multipliers.push_back(std::move(p_i));
      gammas.push_back(std::move(adjusted));
    }
    if (!solved) continue;

    std::vector<GermVector> directions{gamma_1};
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
      GermVector dir = multipliers[i].substitute(f.components()) * gamma_1;
      if (!reduce(dir - gammas[i]).is_zero())
        throw std::logic_error("internal consistency: multiplier does not solve its system");
      directions.push_back(std::move(dir));
    }
    Unfolding versal = make_unfolding(f, directions, "l");
    return VersalNormalForm{gamma_1, std::move(gammas), std::move(multipliers), std::move(opsu_witness),
                            std::move(versal), d};
  }
  throw InconclusiveError("no multipliers p_i in m_p solve the normal-form system up to degree " +
                          std::to_string(cap));
}

}  // namespace mapgerm
