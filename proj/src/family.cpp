#include "mapgerm/family.hpp"

#include <random>
#include <stdexcept>

#include "mapgerm/invariants.hpp"

namespace mapgerm {

Poly random_homogeneous(unsigned degree, std::size_t nvars, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("random_homogeneous needs degree >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-9, 8);
  Poly out(nvars);
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    int c = draw(rng);
    if (c >= 0) ++c;  // shift [0, 8] to [1, 9]
    out.add_term(m, c);
  }
  return out;
}

std::uint64_t sample_seed(std::uint64_t scan_seed, unsigned p, std::size_t index) {
  // splitmix64 finalizer over a simple combination of the inputs.
  std::uint64_t z = scan_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(p) << 32 | index);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool FamilySample::passes_screens() const {
  return report.multiplicity.status == CertStatus::certified && report.multiplicity.value == 4 &&
         report.ke_codim.status == CertStatus::certified && report.opsu &&
         report.opsu->admits == OpsuAnswer::no && report.nf_dimension && *report.nf_dimension >= 2;
}

bool FamilySample::passes_with_ae() const {
  return passes_screens() && report.ae_codim.status != CertStatus::inconclusive;
}

FamilySample build_fp(unsigned p, std::uint64_t seed, const FamilyOptions& options) {
  if (p < 5) throw std::invalid_argument("family f_p needs p >= 5");
  const ComputeOptions& opts = options.compute;
  Poly phi = random_homogeneous(p, 3, seed);
  const Poly z = Poly::variable(3, 2);
  MapGerm germ({Poly::variable(3, 0), Poly::variable(3, 1), z * z * z * z + phi}, {"x", "y", "z"});

  SampleReport report;
  report.multiplicity = multiplicity(germ, opts);
  report.ke_codim = ke_codim(germ, opts);
  try {
    OpsuVerdict verdict = opsu(germ, opts);
    report.nf_dimension = verdict.nf_dimension;
    report.opsu = std::move(verdict);
  } catch (const InconclusiveError& e) {
    report.notes.push_back(std::string("opsu: ") + e.what());
  }
  if (options.with_ae) {
    report.ae_codim = ae_codim(germ, opts);
  } else {
    report.notes.push_back("ae_codim: skipped");
  }
  return FamilySample{p, seed, std::move(phi), std::move(germ), std::move(report)};
}

ScanReport scan(const std::vector<unsigned>& p_values, std::size_t samples_per_p, std::uint64_t seed,
                const FamilyOptions& options) {
  for (unsigned p : p_values)
    if (p < 5) throw std::invalid_argument("family scan needs every p >= 5");
  ScanReport out;
  for (unsigned p : p_values) {
    ScanSummary summary{p, samples_per_p, 0, 0};
    for (std::size_t i = 0; i < samples_per_p; ++i) {
      FamilySample sample = build_fp(p, sample_seed(seed, p, i), options);
      summary.passing += sample.passes_screens();
      summary.passing_with_ae += sample.passes_with_ae();
      out.rows.push_back(std::move(sample));
    }
    out.summary.push_back(summary);
  }
  return out;
}

}  // namespace mapgerm
