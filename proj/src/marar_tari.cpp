#include "mapgerm/marar_tari.hpp"

#include <algorithm>
#include <stdexcept>

#include "mapgerm/invariants.hpp"
#include "mapgerm/jet_space.hpp"

namespace mapgerm {

namespace {

[[noreturn]] void not_preform(const std::string& why) {
  throw std::invalid_argument("germ is not of the form (x, y, z^4 + P(x,y)*z + Q(x,y)*z^2): " + why);
}

GermVector pair(const Poly& a, const Poly& b) { return GermVector(2, {a, b}); }

std::vector<GermVector> nonzero(std::vector<GermVector> gens) {
  std::erase_if(gens, [](const GermVector& g) { return g.is_zero(); });
  return gens;
}

unsigned start_degree(const std::vector<GermVector>& gens) {
  unsigned d = 2;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

CodimReport read_report(const JetSubspace& s, std::optional<unsigned> certified) {
  CodimReport report;
  report.status = certified ? CertStatus::certified : CertStatus::inconclusive;
  report.truncation_degree = certified ? *certified : s.index().degree_bound();
  for (std::size_t col : s.non_pivot_columns()) {
    if (s.index().column_degree(col) > report.truncation_degree) break;
    report.complement_basis.push_back(s.index().unit(col));
  }
  report.value = report.complement_basis.size();
  return report;
}

CodimReport ge_codim_with(const PQPair& pq, GenerationRule rule, const ComputeOptions& options) {
  const GeneratorSet g = generator_set(pq);
  std::vector<GermVector> module_part(g.begin(), g.end());
  std::optional<GermVector> linear_part;
  if (rule == GenerationRule::mixed) {
    linear_part = module_part.front();
    module_part.erase(module_part.begin());
  }
  module_part = nonzero(std::move(module_part));
  unsigned start = start_degree(module_part);
  if (linear_part) start = std::max(start, linear_part->degree());

  auto escalated = escalate_module_span(module_part, 2, 2, start, std::max(start, options.max_degree));
  JetSubspace& s = escalated.span;
  if (linear_part) {
    s.add(*linear_part);
    s.set_kind(SpanKind::linear);
  }
  return read_report(s, escalated.certified_degree);
}

}  // namespace

void check_pq(const PQPair& pq) {
  if (pq.P.nvars() != 2 || pq.Q.nvars() != 2) throw std::invalid_argument("P and Q must be polynomials in x, y");
  if (sgn(pq.P.constant_term()) != 0 || sgn(pq.Q.constant_term()) != 0)
    throw std::invalid_argument("P and Q must vanish at the origin");
}

PQPair extract_pq(const MapGerm& f) {
  if (f.source_dim() != 3 || f.target_dim() != 3) not_preform("need 3 source and 3 target variables");
  if (f.component(0) != Poly::variable(3, 0)) not_preform("first component must be the first variable");
  if (f.component(1) != Poly::variable(3, 1)) not_preform("second component must be the second variable");

  PQPair pq;
  bool has_quartic = false;
  for (const auto& [m, c] : f.component(2).terms()) {
    const Monomial xy({m[0], m[1]});
    switch (m[2]) {
      case 1: pq.P.add_term(xy, c); break;
      case 2: pq.Q.add_term(xy, c); break;
      case 4:
        if (xy.degree() != 0 || c != 1) not_preform("the z^4 term must be exactly z^4");
        has_quartic = true;
        break;
      case 3: not_preform("z^3 term present");
      default: not_preform("term " + m.to_string(f.source_names()) + " outside the preform");
    }
  }
  if (!has_quartic) not_preform("missing z^4 term");
  if (sgn(pq.P.constant_term()) != 0 || sgn(pq.Q.constant_term()) != 0)
    not_preform("P and Q must vanish at the origin");
  return pq;
}

GeneratorSet generator_set(const PQPair& pq) {
  check_pq(pq);
  const Poly& P = pq.P;
  const Poly& Q = pq.Q;
  const Poly Px = P.derivative(0), Py = P.derivative(1);
  const Poly Qx = Q.derivative(0), Qy = Q.derivative(1);
  const Poly Q2 = Q * Q;
  const GermVector first = pair(Rational(3) * P, Rational(2) * Q);
  return {first,
          pair(Px, Qx),
          pair(Py, Qy),
          pair(Rational(-4) * P * Q2, Rational(9) * P * P) - Q2 * first,
          pair(Rational(-2) * P * Q * Qx, Rational(3) * P * Px),
          pair(Rational(-2) * P * Q * Qy, Rational(3) * P * Py)};
}

std::string to_string(GenerationRule rule) {
  switch (rule) {
    case GenerationRule::all_module: return "all_module";
    case GenerationRule::mixed: return "mixed";
    case GenerationRule::automatic: return "auto";
  }
  return "auto";
}

GenerationRule parse_generation_rule(const std::string& text) {
  if (text == "all_module" || text == "all-module") return GenerationRule::all_module;
  if (text == "mixed") return GenerationRule::mixed;
  if (text == "auto" || text == "automatic") return GenerationRule::automatic;
  throw std::invalid_argument("unknown generation rule '" + text + "' (expected all_module, mixed or auto)");
}

CodimReport ge_codim(const PQPair& pq, GenerationRule rule, const ComputeOptions& options) {
  check_pq(pq);
  if (rule == GenerationRule::automatic) rule = calibration(options).chosen;
  return ge_codim_with(pq, rule, options);
}

MapGerm preform_germ(const PQPair& pq) {
  check_pq(pq);
  const Poly z = Poly::variable(3, 2);
  Poly third = z * z * z * z + pq.P.extended(3) * z + pq.Q.extended(3) * z * z;
  return MapGerm({Poly::variable(3, 0), Poly::variable(3, 1), std::move(third)}, {"x", "y", "z"});
}

namespace {

Poly power(const Poly& base, unsigned k) {
  Poly out = Poly::constant(base.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * base;
  return out;
}

}  // namespace

PQPair pq_4_1(unsigned k) {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  return {x, power(y, k)};
}

PQPair pq_4_2(unsigned k) {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  return {y * y + power(x, k), x};
}

PQPair pq_reference_example() {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  return {x * x - y * y, y * y};
}

const Calibration& calibration(const ComputeOptions& options) {
  static const Calibration cached = [&] {
    std::vector<PQPair> corpus;
    for (unsigned k = 1; k <= 3; ++k) {
      corpus.push_back(pq_4_1(k));
      corpus.push_back(pq_4_2(k));
    }
    std::vector<std::optional<std::size_t>> ae_values;
    for (const auto& pq : corpus) {
      const CodimReport ae = ae_codim(preform_germ(pq), options);
      ae_values.push_back(ae.status == CertStatus::inconclusive ? std::nullopt : std::optional(ae.value));
    }

    Calibration cal{GenerationRule::all_module, 4, {}};
    for (GenerationRule rule : {GenerationRule::all_module, GenerationRule::mixed}) {
      CalibrationEntry entry{rule, std::nullopt, false, true};
      const CodimReport example = ge_codim_with(pq_reference_example(), rule, options);
      if (example.status == CertStatus::certified) entry.example_value = example.value;
      entry.reproduces_example = entry.example_value == cal.target_value;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const CodimReport ge = ge_codim_with(corpus[i], rule, options);
        if (ge.status != CertStatus::certified || ae_values[i] != ge.value) entry.cross_validates = false;
      }
      cal.entries.push_back(entry);
    }

    // Prefer a mode that does both; otherwise keep the cross-validating one.
    auto pick = [&](auto pred) -> std::optional<GenerationRule> {
      for (const auto& e : cal.entries)
        if (pred(e)) return e.rule;
      return std::nullopt;
    };
    if (auto r = pick([](const CalibrationEntry& e) { return e.reproduces_example && e.cross_validates; }))
      cal.chosen = *r;
    else if (auto r2 = pick([](const CalibrationEntry& e) { return e.cross_validates; }))
      cal.chosen = *r2;
    return cal;
  }();
  return cached;
}

}  // namespace mapgerm
