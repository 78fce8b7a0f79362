#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/germ.hpp"
#include "mapgerm/unfoldings.hpp"

namespace mapgerm {

/// Homogeneous polynomial of the given degree whose coefficients are drawn
/// uniformly from the nonzero integers in [-9, 9].
Poly random_homogeneous(unsigned degree, std::size_t nvars, std::uint64_t seed);

struct SampleReport {
  CodimReport multiplicity;
  CodimReport ke_codim;
  std::optional<std::size_t> nf_dimension;
  std::optional<OpsuVerdict> opsu;
  CodimReport ae_codim;
  /// Why a step could not be completed; empty when everything ran.
  std::vector<std::string> notes;
};

struct FamilySample {
  unsigned p = 0;
  std::uint64_t seed = 0;
  Poly phi;
  MapGerm germ;
  SampleReport report;

  /// multiplicity 4, certified finite ke_codim, opsu = no with dim N(f) >= 2.
  bool passes_screens() const;
  /// passes_screens and the A_e-codimension reached a plateau.
  bool passes_with_ae() const;
};

struct FamilyOptions {
  ComputeOptions compute;
  /// Set to false to skip the A_e-codimension, the slowest screen.
  bool with_ae = true;
};

/// f_p = (x, y, z^4 + phi_p) with phi_p random homogeneous of degree p >= 5.
FamilySample build_fp(unsigned p, std::uint64_t seed, const FamilyOptions& options = {});

/// Seed of sample `index` at degree p, derived from the scan seed.
std::uint64_t sample_seed(std::uint64_t scan_seed, unsigned p, std::size_t index);

struct ScanSummary {
  unsigned p = 0;
  std::size_t samples = 0;
  std::size_t passing = 0;
  std::size_t passing_with_ae = 0;
};

struct ScanReport {
  /// In (p, sample index) order.
  std::vector<FamilySample> rows;
  std::vector<ScanSummary> summary;
};

ScanReport scan(const std::vector<unsigned>& p_values, std::size_t samples_per_p, std::uint64_t seed,
                const FamilyOptions& options = {});

}  // namespace mapgerm
