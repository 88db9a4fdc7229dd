#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenstrata/polynomial.hpp"
#include "eigenstrata/strata.hpp"

namespace eigenstrata {

/// A published generator list shipped as a text asset.
struct GoldenCase {
  std::string file;       // name under <data>/golden
  Partition partition;
  unsigned degree = 0;
  std::size_t count = 0;  // number of listed generators
  std::size_t codim = 0;
};

/// The three shipped lists: (2,1) cubics, (3,1) quadrics, (2,2) quadrics.
const std::vector<GoldenCase>& golden_cases();

/// EIGENSTRATA_DATA from the environment if set, else the build-time path.
std::string default_data_dir();

/// One polynomial per nonempty line. Throws ParseError naming the file and
/// line, or Error when the file is missing.
std::vector<Polynomial> load_golden(const GoldenCase& c, const std::string& data_dir);

struct GoldenCheck {
  GoldenCase golden;
  std::vector<Polynomial> polys;
  std::size_t samples = 0;
  /// Indices (0-based) of listed polynomials that fail to vanish, with the
  /// first nonzero value seen.
  std::vector<std::pair<std::size_t, Rational>> failures;
  bool span_equal = false;
  std::size_t interpolated_dim = 0;
};

/// Exact vanishing on `samples` fresh points and span comparison against
/// the exact interpolated basis.
GoldenCheck check_golden(const GoldenCase& c, const std::string& data_dir, std::uint64_t seed,
                         std::size_t samples = 50);

}  // namespace eigenstrata
