#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/germ.hpp"

namespace mapgerm {

/// Coefficients of the preform (x, y, z^4 + P(x,y) z + Q(x,y) z^2).
struct PQPair {
  Poly P{2};
  Poly Q{2};
};

/// The six generators in O_2^2:
/// (3P,2Q), (P_x,Q_x), (P_y,Q_y), (-4PQ^2,9P^2) - Q^2(3P,2Q),
/// (-2PQQ_x,3PP_x), (-2PQQ_y,3PP_y).
using GeneratorSet = std::array<GermVector, 6>;

/// Reads P and Q off a germ in preform. Throws std::invalid_argument when the
/// germ is not exactly of that shape; no normalization is attempted.
PQPair extract_pq(const MapGerm& f);

/// Validates that P and Q have two variables and vanish at 0.
void check_pq(const PQPair& pq);

GeneratorSet generator_set(const PQPair& pq);

/// all_module: O_2-module generated by all six vectors.
/// mixed: K-span of (3P,2Q) plus the O_2-module of the other five.
/// automatic: whichever mode the calibration selects.
enum class GenerationRule { all_module, mixed, automatic };

std::string to_string(GenerationRule rule);
GenerationRule parse_generation_rule(const std::string& text);

/// Codimension of the generated subspace. Certified when the O_2-module
/// part passes the Nakayama test, inconclusive at the cap otherwise.
CodimReport ge_codim(const PQPair& pq, GenerationRule rule = GenerationRule::automatic,
                     const ComputeOptions& options = {});

struct CalibrationEntry {
  GenerationRule rule;
  /// Value on P = x^2 - y^2, Q = y^2.
  std::optional<std::size_t> example_value;
  bool reproduces_example = false;
  /// Agreement with ae_codim on the 4_1^k and 4_2^k preforms, k <= 3.
  bool cross_validates = false;
};

struct Calibration {
  GenerationRule chosen;
  /// The value the calibration aims for on the reference example.
  std::size_t target_value = 4;
  std::vector<CalibrationEntry> entries;
};

/// Runs the calibration once and caches it; `options` only affect the first call.
const Calibration& calibration(const ComputeOptions& options = {});

/// The preform germs 4_1^k = (x,y,z^4+xz+y^k z^2) and
/// 4_2^k = (x,y,z^4+(y^2+x^k)z+xz^2).
MapGerm preform_germ(const PQPair& pq);
PQPair pq_4_1(unsigned k);
PQPair pq_4_2(unsigned k);
PQPair pq_reference_example();

}  // namespace mapgerm
