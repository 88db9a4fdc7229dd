#include "eigenstrata/golden.hpp"

#include <cstdlib>
#include <fstream>

#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/rng.hpp"
#include "eigenstrata/sampler.hpp"

namespace eigenstrata {

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"example_2_1_cubics.txt", Partition({2, 1}), 3, 7, 2},
      {"example_3_1_quadrics.txt", Partition({3, 1}), 2, 10, 5},
      {"example_2_2_quadrics.txt", Partition({2, 2}), 2, 9, 4},
  };
  return cases;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("EIGENSTRATA_DATA")) return env;
  return EIGENSTRATA_DATA_DIR;
}

std::vector<Polynomial> load_golden(const GoldenCase& c, const std::string& data_dir) {
  const std::string path = data_dir + "/golden/" + c.file;
  std::ifstream in(path);
  if (!in) throw Error("cannot open golden file " + path);
  const VariableIndexing vars(static_cast<std::size_t>(c.partition.n()));
  std::vector<Polynomial> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_polynomial(line, vars));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.size() != c.count) {
    throw ParseError(path + ": expected " + std::to_string(c.count) + " polynomials, found " +
                     std::to_string(out.size()));
  }
  return out;
}

GoldenCheck check_golden(const GoldenCase& c, const std::string& data_dir, std::uint64_t seed, std::size_t samples) {
  GoldenCheck out;
  out.golden = c;
  out.polys = load_golden(c, data_dir);
  out.samples = samples;
  const auto pts = random_samples(c.partition, samples, split_seed(seed, 0x601d), 10);
  for (std::size_t i = 0; i < out.polys.size(); ++i)
    for (const auto& p : pts) {
      const Rational v = out.polys[i].evaluate(p.ambient);
      if (!v.is_zero()) {
        out.failures.emplace_back(i, v);
        break;
      }
    }
  InterpolationOptions opt;
  opt.mode = ArithmeticMode::Exact;
  const InterpolationReport rep = vanishing_forms(c.partition, c.degree, seed, opt);
  out.interpolated_dim = rep.nullspace_dim;
  out.span_equal = span_equals(out.polys, rep.basis);
  return out;
}

}  // namespace eigenstrata
