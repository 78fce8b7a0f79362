#pragma once

// Shared fixtures for the test binaries: germ shorthands, the named corpus,
// random generators and an independent dense-elimination oracle.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mapgerm/germ.hpp"
#include "mapgerm/germ_vector.hpp"
#include "mapgerm/parser.hpp"

namespace testing_support {

using mapgerm::GermVector;
using mapgerm::MapGerm;
using mapgerm::Poly;
using mapgerm::Rational;

inline MapGerm germ(const std::string& text) { return mapgerm::parse_germ(text).germ; }

inline MapGerm germ(const std::string& text, const std::vector<std::string>& vars) {
  return mapgerm::parse_germ(text, vars).germ;
}

inline Poly poly(const std::string& text, const std::vector<std::string>& vars) {
  return mapgerm::parse_polynomial(text, vars);
}

struct NamedGerm {
  std::string name;
  std::string text;
};

inline std::string f_k(int k) { return "(x, y^3 + x^" + std::to_string(k + 1) + "*y)"; }
inline std::string h_k(int k) { return "(x, y^3, y^" + std::to_string(3 * k - 1) + " + x*y)"; }
inline std::string four_1(int k) { return "(x, y, z^4 + x*z + y^" + std::to_string(k) + "*z^2)"; }
inline std::string four_2(int k) { return "(x, y, z^4 + (y^2 + x^" + std::to_string(k) + ")*z + x*z^2)"; }

inline const std::string kCusp4 = "(x, y^4 + x*y)";
inline const std::string kRieger = "(x, y^4 + x^2*y)";
inline const std::string kRiegerQuintic = "(x, y^4 + x^2*y + y^5)";
inline const std::string kOpsuQuintic = "(x, y^4 + x*y^2 + y^5)";
inline const std::string kP2 = "(x, y, z^5 + x*z, z^3 + y*z)";
inline const std::string kMararTari = "(x, y, z^4 + (x^2 - y^2)*z + y^2*z^2)";

/// Every germ named in the examples plus the 4_1^k and 4_2^k preforms, k <= 3.
inline std::vector<NamedGerm> corpus() {
  std::vector<NamedGerm> out = {
      {"y^4", "(y^4)"},
      {"fold", "(x, y^2)"},
      {"cusp4", kCusp4},
      {"rieger", kRieger},
      {"rieger_quintic", kRiegerQuintic},
      {"opsu_quintic", kOpsuQuintic},
      {"P2", kP2},
      {"marar_tari", kMararTari},
  };
  for (int k = 1; k <= 4; ++k) out.push_back({"f_" + std::to_string(k), f_k(k)});
  for (int k = 2; k <= 3; ++k) out.push_back({"H_" + std::to_string(k), h_k(k)});
  for (int k = 1; k <= 3; ++k) {
    out.push_back({"4_1^" + std::to_string(k), four_1(k)});
    out.push_back({"4_2^" + std::to_string(k), four_2(k)});
  }
  return out;
}

/// Small nonzero-or-zero integers, biased towards sparse polynomials.
class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

  int coefficient(int lo = -5, int hi = 5) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  /// Up to `terms` random terms of degree in [min_degree, max_degree].
  Poly poly(std::size_t nvars, unsigned min_degree, unsigned max_degree, std::size_t terms) {
    Poly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<unsigned> e(nvars, 0);
      unsigned d = std::uniform_int_distribution<unsigned>(min_degree, max_degree)(rng_);
      for (unsigned k = 0; k < d; ++k) ++e[index(nvars)];
      p.add_term(mapgerm::Monomial(e), coefficient());
    }
    return p;
  }

  GermVector vector(std::size_t nvars, std::size_t ncomp, unsigned max_degree, std::size_t terms) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < ncomp; ++i) comps.push_back(poly(nvars, 0, max_degree, terms));
    return GermVector(nvars, std::move(comps));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Dense Gaussian elimination over its own coordinate map, sharing no code
/// with the sparse jet-space pipeline.
class DenseOracle {
 public:
  DenseOracle(std::size_t ncomp, unsigned degree) : ncomp_(ncomp), degree_(degree) {}

  std::vector<Rational> coordinates(const GermVector& v) {
    std::map<std::pair<std::vector<unsigned>, std::size_t>, Rational> entries;
    for (std::size_t c = 0; c < v.size(); ++c) {
      for (const auto& [m, q] : v[c].terms()) {
        if (m.degree() > degree_) continue;
        std::vector<unsigned> e(m.exponents().begin(), m.exponents().end());
        entries[{e, c}] += q;
      }
    }
    std::vector<Rational> row(columns_.size());
    for (const auto& [key, q] : entries) {
      auto it = columns_.find(key);
      std::size_t col;
      if (it == columns_.end()) {
        col = columns_.size();
        columns_.emplace(key, col);
        row.resize(columns_.size());
      } else {
        col = it->second;
      }
      row[col] += q;
    }
    return row;
  }

  /// Rank of the given vectors (truncated at the oracle degree).
  std::size_t rank(const std::vector<GermVector>& vs) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vs) rows.push_back(coordinates(v));
    return rank_of(rows);
  }

  /// Whether `v` lies in the span of `vs` (both truncated).
  bool in_span(const std::vector<GermVector>& vs, const GermVector& v) {
    std::vector<GermVector> extended = vs;
    const std::size_t r = rank(vs);
    extended.push_back(v);
    return rank(extended) == r;
  }

  std::size_t rank_of(std::vector<std::vector<Rational>> rows) const {
    std::size_t width = columns_.size();
    for (auto& r : rows) r.resize(width);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][c] == 0) continue;
        const Rational factor = rows[i][c] / rows[rank][c];
        for (std::size_t k = c; k < width; ++k) rows[i][k] -= factor * rows[rank][k];
      }
      ++rank;
    }
    return rank;
  }

  /// Number of jet coordinates of degree <= d, counted independently.
  std::size_t jet_dimension(std::size_t nvars) const {
    std::size_t count = 0;
    count_monomials(nvars, 0, degree_, count);
    return count * ncomp_;
  }

 private:
  static void count_monomials(std::size_t nvars, std::size_t var, unsigned budget, std::size_t& count) {
    if (var + 1 == nvars) {
      count += budget + 1;
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) count_monomials(nvars, var + 1, budget - e, count);
  }

  std::size_t ncomp_;
  unsigned degree_;
  std::map<std::pair<std::vector<unsigned>, std::size_t>, std::size_t> columns_;
};

/// Span of { monomial * g : |monomial| <= degree } built by direct
/// multiplication, for oracle comparisons against module spans.
inline std::vector<GermVector> module_multiples(const std::vector<GermVector>& gens, std::size_t nvars,
                                                unsigned degree) {
  std::vector<GermVector> out;
  std::vector<std::vector<unsigned>> exps{std::vector<unsigned>(nvars, 0)};
  for (unsigned d = 1; d <= degree; ++d) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& e : exps) {
      unsigned total = 0;
      for (unsigned k : e) total += k;
      if (total != d - 1) continue;
      for (std::size_t v = 0; v < nvars; ++v) {
        auto f = e;
        ++f[v];
        if (std::find(next.begin(), next.end(), f) == next.end()) next.push_back(f);
      }
    }
    exps.insert(exps.end(), next.begin(), next.end());
  }
  for (const auto& g : gens)
    for (const auto& e : exps) out.push_back(Poly::term(mapgerm::Monomial(e), 1) * g);
  return out;
}

}  // namespace testing_support
