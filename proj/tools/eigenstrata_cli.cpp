#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eigenstrata/arrangement.hpp"
#include "eigenstrata/distance.hpp"
#include "eigenstrata/golden.hpp"
#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/invariants.hpp"
#include "eigenstrata/sampler.hpp"
#include "eigenstrata/strata.hpp"
#include "eigenstrata/suite.hpp"
#include "eigenstrata/univariate.hpp"

using namespace eigenstrata;
using nlohmann::json;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  std::int64_t height = 10;
  std::string mode = "auto";
  std::size_t primes = 3;
  std::string format = "text";
  std::string output;
  unsigned threads = 1;
  std::string data_dir;
};

// Exit 2 for bad input; thrown from handlers after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad partition: ") + e.what());
  }
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    const auto a = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
    const auto b = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    if (b < a) throw UsageError("empty t-range");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("t-range must look like 3..6");
  }
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
  bool json_mode() const { return cfg_.format == "json"; }
  std::ostringstream& text() { return text_; }
  void set(json j) { json_ = std::move(j); }
  void flush() const {
    const std::string body = json_mode() ? json_.dump(2) + "\n" : text_.str();
    if (cfg_.output.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(cfg_.output);
      if (!f) throw Error("cannot write " + cfg_.output);
      f << body;
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostringstream text_;
  json json_;
};

int cmd_dimension(const RunConfig& cfg, const std::string& p) {
  const Partition lambda = parse_partition(p);
  const int formula = dimension(lambda);
  const auto rank = parametrization_rank(lambda, cfg.seed, cfg.height);
  Output out(cfg);
  out.set({{"partition", lambda.str()},
           {"formula", formula},
           {"codimension", codimension(lambda)},
           {"rank", rank},
           {"match", rank == static_cast<std::size_t>(formula)}});
  out.text() << "partition " << lambda.str() << "\nformula " << formula << "\ncodimension " << codimension(lambda)
             << "\nrank " << rank << "\nmatch " << (rank == static_cast<std::size_t>(formula) ? "true" : "false")
             << '\n';
  out.flush();
  return 0;
}

int cmd_sample(const RunConfig& cfg, const std::string& p, std::size_t count) {
  const Partition lambda = parse_partition(p);
  const auto pts = random_samples(lambda, count, cfg.seed, cfg.height);
  Output out(cfg);
  json arr = json::array();
  for (const auto& s : pts) arr.push_back(to_json(s));
  out.set(arr);
  for (const auto& s : pts) {
    for (std::size_t i = 0; i < s.matrix.rows(); ++i) {
      for (std::size_t j = 0; j < s.matrix.cols(); ++j) out.text() << (j ? " " : "") << s.matrix(i, j).str();
      out.text() << '\n';
    }
    out.text() << '\n';
  }
  out.flush();
  return 0;
}

InterpolationOptions interpolation_options(const RunConfig& cfg) {
  InterpolationOptions io;
  try {
    io.mode = parse_mode(cfg.mode);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  io.prime_count = cfg.primes;
  io.height = cfg.height;
  io.threads = cfg.threads;
  return io;
}

int cmd_interpolate(const RunConfig& cfg, const std::string& p, unsigned d) {
  const Partition lambda = parse_partition(p);
  const auto rep = vanishing_forms(lambda, d, cfg.seed, interpolation_options(cfg));
  Output out(cfg);
  out.set(to_json(rep));
  const VariableIndexing vars(static_cast<std::size_t>(lambda.n()));
  out.text() << "partition " << lambda.str() << " degree " << d << " mode " << to_string(rep.mode) << '\n'
             << "monomials " << rep.monomial_count << " samples " << rep.sample_count << '\n'
             << "forms " << rep.nullspace_dim << '\n';
  for (const auto& f : rep.basis) out.text() << to_text(f, vars) << '\n';
  out.flush();
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const std::string dir = cfg.data_dir.empty() ? default_data_dir() : cfg.data_dir;
  Output out(cfg);
  json cases = json::array();
  bool ok = true;
  for (const auto& c : golden_cases()) {
    const GoldenCheck g = check_golden(c, dir, cfg.seed, 50);
    const auto pts = random_samples(c.partition, 5, cfg.seed + 1, cfg.height);
    std::vector<std::size_t> codims;
    for (const auto& p : pts) codims.push_back(jacobian_codim(g.polys, p));
    const bool codim_ok = std::all_of(codims.begin(), codims.end(), [&](std::size_t r) { return r == c.codim; });
    const VariableIndexing vars(static_cast<std::size_t>(c.partition.n()));
    json fails = json::array();
    for (const auto& [idx, v] : g.failures)
      fails.push_back({{"index", idx + 1}, {"value", v.str()}, {"polynomial", to_text(g.polys[idx], vars)}});
    const bool case_ok = g.failures.empty() && g.span_equal && codim_ok;
    ok = ok && case_ok;
    cases.push_back({{"file", c.file},
                     {"partition", c.partition.str()},
                     {"generators", g.polys.size()},
                     {"vanishing_failures", fails},
                     {"span_equal", g.span_equal},
                     {"interpolated_dim", g.interpolated_dim},
                     {"jacobian_ranks", codims},
                     {"expected_codim", c.codim},
                     {"ok", case_ok}});
    out.text() << c.file << ": " << g.polys.size() << " generators, " << g.failures.size()
               << " vanishing failures, span " << (g.span_equal ? "equal" : "DIFFERENT") << ", jacobian ranks";
    for (auto r : codims) out.text() << ' ' << r;
    out.text() << " (expected " << c.codim << ")\n";
    for (const auto& [idx, v] : g.failures)
      out.text() << "  polynomial " << idx + 1 << " value " << v.str() << ": " << to_text(g.polys[idx], vars) << '\n';
  }
  out.set({{"cases", cases}, {"ok", ok}});
  out.flush();
  return ok ? 0 : 1;
}

int cmd_hilbert(const RunConfig& cfg, const std::string& p, const std::string& range) {
  const Partition lambda = parse_partition(p);
  const auto [t0, t1] = parse_range(range);
  const auto subspaces = enumerate_subspaces(lambda);
  const std::vector<int> codims(subspaces.size(), lambda.n() - lambda.m());
  const HilbertPolynomial derksen = derksen_hilbert(codims, lambda.n());
  std::optional<HilbertPolynomial> closed;
  if (lambda.m() < lambda.n()) closed = paper_hilbert(lambda);
  OracleOptions oo;
  oo.threads = cfg.threads;
  oo.height = cfg.height;

  Output out(cfg);
  json rows = json::array();
  out.text() << "partition " << lambda.str() << '\n'
             << "formula " << (closed ? closed->str() : std::string("undefined (m = n)")) << '\n'
             << "inclusion-exclusion " << derksen.str() << " over " << subspaces.size() << " distinct subspaces\n";
  out.text() << "t formula inclusion-exclusion oracle match\n";
  bool all = true;
  for (unsigned t = t0; t <= t1; ++t) {
    const auto v = hilbert_function_oracle(lambda, t, cfg.seed, oo);
    const Rational ov(static_cast<unsigned long>(v));
    const Rational dv = derksen.evaluate(t);
    const bool match = dv == ov && (!closed || closed->evaluate(t) == ov);
    all = all && match;
    rows.push_back({{"t", t},
                    {"formula", closed ? json(closed->evaluate(t).str()) : json(nullptr)},
                    {"inclusion_exclusion", dv.str()},
                    {"oracle", v},
                    {"match", match}});
    out.text() << t << ' ' << (closed ? closed->evaluate(t).str() : "-") << ' ' << dv.str() << ' ' << v << ' '
               << (match ? "yes" : "no") << '\n';
  }
  out.set({{"partition", lambda.str()},
           {"formula", closed ? to_json(*closed) : json(nullptr)},
           {"inclusion_exclusion", to_json(derksen)},
           {"distinct_subspaces", subspaces.size()},
           {"rows", rows},
           {"all_match", all}});
  out.flush();
  return 0;
}

int cmd_degree(const RunConfig& cfg, const std::string& p) {
  const Partition lambda = parse_partition(p);
  OracleOptions oo;
  oo.threads = cfg.threads;
  oo.height = cfg.height;
  const DegreeReport r = arrangement_degree(lambda, cfg.seed, oo);
  Output out(cfg);
  out.set(to_json(r));
  out.text() << "partition " << lambda.str() << "\npaper " << r.formula_degree << "\ngeometric "
             << (r.geometric ? std::to_string(*r.geometric) : std::string("unstable")) << "\ndistinct subspaces "
             << r.distinct_subspaces << "\nhilbert polynomial " << to_text(r.hilbert, "t") << " (from t="
             << r.stable_from << ")\n";
  out.flush();
  return 0;
}

int cmd_edd(const RunConfig& cfg, const std::string& p, const std::string& u_text) {
  const Partition lambda = parse_partition(p);
  EddReport r = edd_report(lambda, cfg.seed);
  Output out(cfg);
  json j = to_json(r);
  if (!u_text.empty()) {
    ExactVector u;
    std::stringstream ss(u_text);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) u.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad --u: ") + e.what());
    }
    const CriticalSet cs = critical_points(u, lambda);
    j["critical_points"] = to_json(cs);
    out.text() << "critical points at u:\n";
    for (const auto& cp : cs.points) {
      out.text() << "  " << cp.subspace.str() << " (";
      for (std::size_t i = 0; i < cp.point.size(); ++i) out.text() << (i ? "," : "") << cp.point[i].str();
      out.text() << ") dist^2 " << cp.squared_distance.str() << '\n';
    }
    if (cs.tie) out.text() << "  tie: " << cs.minimizers << " minimizers\n";
  }
  out.set(j);
  out.text() << "partition " << lambda.str() << "\npaper EDD " << r.formula_edd << "\nsubspaces " << r.subspace_count
             << "\nreal critical points " << r.real_critical << '\n';
  out.flush();
  return 0;
}

int cmd_nearest(const RunConfig& cfg, const std::string& p, const std::string& file) {
  const Partition lambda = parse_partition(p);
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
  const FloatSymmetric u = float_symmetric_from_json(j);
  const NearestResult r = nearest_symmetric(u, lambda);
  Output out(cfg);
  out.set(to_json(r));
  out.text() << std::setprecision(12) << std::boolalpha << "partition " << lambda.str() << "\ngrouping " << r.grouping.str()
             << "\ndistance^2 " << r.squared_distance << "\ncontiguous " << r.contiguous << "\ntie " << r.tie
             << "\ndegenerate " << r.degenerate << "\nmatrix\n";
  for (std::size_t i = 0; i < r.matrix.n(); ++i) {
    for (std::size_t k = 0; k < r.matrix.n(); ++k) out.text() << (k ? " " : "") << r.matrix(i, k);
    out.text() << '\n';
  }
  out.flush();
  return 0;
}

int cmd_invariants(const RunConfig& cfg, const std::string& p, unsigned dmax) {
  const Partition lambda = parse_partition(p);
  const auto t = chevalley_check(lambda, dmax, cfg.seed);
  Output out(cfg);
  out.set(to_json(t));
  out.text() << t.text();
  out.flush();
  return 0;
}

int cmd_discriminant(const RunConfig& cfg, std::size_t n) {
  const Polynomial d = matrix_discriminant_symbolic(n);
  const VariableIndexing vars(n);
  Output out(cfg);
  json j = to_json(d, vars);
  j["text"] = to_text(d, vars);
  out.set(j);
  out.text() << to_text(d, vars) << '\n';
  out.flush();
  return 0;
}

int cmd_suite(const RunConfig& cfg, const std::vector<int>& criteria, bool quiet) {
  SuiteOptions so;
  so.seed = cfg.seed;
  so.threads = cfg.threads;
  so.data_dir = cfg.data_dir;
  so.criteria = criteria;
  for (int id : criteria)
    if (id < 1 || id > kCriterionCount) throw UsageError("criterion ids run from 1 to 12");
  const SuiteReport rep = run_suite(so, quiet ? nullptr : &std::cerr);
  Output out(cfg);
  out.set(rep.json());
  out.text() << rep.text();
  out.flush();
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on varieties of symmetric matrices with prescribed eigenvalue multiplicities"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Root seed")->capture_default_str();
  app.add_option("--height", cfg.height, "Height bound for random rationals")->capture_default_str();
  app.add_option("--mode", cfg.mode, "Arithmetic: auto, exact or modular")
      ->check(CLI::IsMember({"auto", "exact", "modular"}))
      ->capture_default_str();
  app.add_option("--primes", cfg.primes, "Primes for modular runs")->check(CLI::Range(1, 16))->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--threads", cfg.threads, "Worker threads for per-prime work")->check(CLI::Range(1, 64));
  app.add_option("--data-dir", cfg.data_dir, "Directory holding golden/");

  std::string partition;
  auto add_partition = [&](CLI::App* sub) { sub->add_option("-p,--partition", partition, "e.g. 2,1")->required(); };

  auto* dim = app.add_subcommand("dimension", "Dimension formula vs parametrization rank");
  add_partition(dim);

  std::size_t count = 1;
  auto* smp = app.add_subcommand("sample", "Exact random points on the stratum");
  add_partition(smp);
  smp->add_option("-n,--count", count, "Number of points")->check(CLI::PositiveNumber);

  unsigned degree = 1;
  auto* itp = app.add_subcommand("interpolate", "Vanishing forms of one degree");
  add_partition(itp);
  itp->add_option("-d,--degree", degree, "Form degree")->required()->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Golden lists: vanishing, span, Jacobian ranks");

  std::string t_range = "0..4";
  auto* hil = app.add_subcommand("hilbert", "Hilbert polynomial formulas vs the rank oracle");
  add_partition(hil);
  hil->add_option("--t-range", t_range, "Degrees, e.g. 3..6")->capture_default_str();

  auto* deg = app.add_subcommand("degree", "Degree of the diagonal arrangement");
  add_partition(deg);

  std::string u_text;
  auto* edd = app.add_subcommand("edd", "Euclidean distance degree counts");
  add_partition(edd);
  edd->add_option("--u", u_text, "Data point, e.g. 0,2,10, to list critical points");

  std::string matrix_file;
  auto* nea = app.add_subcommand("nearest", "Nearest matrix with the given multiplicities");
  add_partition(nea);
  nea->add_option("--matrix", matrix_file, "JSON {\"n\", \"upper\"}")->required();

  unsigned dmax = 6;
  auto* inv = app.add_subcommand("invariants", "S_n vs SO(n) invariant dimensions");
  add_partition(inv);
  inv->add_option("--dmax", dmax, "Largest degree")->capture_default_str()->check(CLI::PositiveNumber);

  std::size_t disc_n = 3;
  auto* dis = app.add_subcommand("discriminant", "Symbolic matrix discriminant");
  dis->add_option("-n,--size", disc_n, "Matrix size 2..4")->capture_default_str();

  std::vector<int> criteria;
  bool quiet = false;
  auto* sui = app.add_subcommand("suite", "Acceptance suite");
  sui->add_option("--criteria", criteria, "Subset of criteria ids")->delimiter(',');
  sui->add_flag("-q,--quiet", quiet, "No progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dim) return cmd_dimension(cfg, partition);
    if (*smp) return cmd_sample(cfg, partition, count);
    if (*itp) return cmd_interpolate(cfg, partition, degree);
    if (*ver) return cmd_verify(cfg);
    if (*hil) return cmd_hilbert(cfg, partition, t_range);
    if (*deg) return cmd_degree(cfg, partition);
    if (*edd) return cmd_edd(cfg, partition, u_text);
    if (*nea) return cmd_nearest(cfg, partition, matrix_file);
    if (*inv) return cmd_invariants(cfg, partition, dmax);
    if (*dis) return cmd_discriminant(cfg, disc_n);
    if (*sui) return cmd_suite(cfg, criteria, quiet);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
