#include "eigenstrata/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "eigenstrata/arrangement.hpp"
#include "eigenstrata/distance.hpp"
#include "eigenstrata/golden.hpp"
#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/invariants.hpp"
#include "eigenstrata/rng.hpp"
#include "eigenstrata/sampler.hpp"
#include "eigenstrata/univariate.hpp"

namespace eigenstrata {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Warn: return "WARN";
  }
  return "FAIL";
}

std::string criterion_name(int id) {
  static const char* names[] = {"",
                                "dimension",
                                "interpolation-counts",
                                "golden-vanishing-and-span",
                                "jacobian-codimension",
                                "sum-of-squares",
                                "hilbert-polynomial",
                                "arrangement-degree",
                                "edd",
                                "nearest-matrix",
                                "subdiscriminant-membership",
                                "chevalley",
                                "determinism"};
  if (id < 1 || id > kCriterionCount) throw IndexError("criterion id out of range");
  return names[id];
}

bool SuiteReport::ok() const { return failures().empty(); }

std::vector<int> SuiteReport::failures() const {
  std::vector<int> out;
  for (const auto& r : results)
    if (r.status == Status::Fail) out.push_back(r.id);
  return out;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  os << "suite seed " << seed << '\n';
  for (const auto& r : results) {
    os << to_string(r.status) << ' ' << r.id << ' ' << r.name << '\n';
    for (const auto& d : r.details) os << "  " << d << '\n';
    for (const auto& w : r.warnings) os << "WARN " << r.id << ' ' << w << '\n';
  }
  const auto f = failures();
  os << (f.empty() ? "all criteria passed" : "failed:");
  for (int id : f) os << ' ' << id;
  os << '\n';
  return os.str();
}

nlohmann::json SuiteReport::json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : results)
    rs.push_back({{"id", r.id},
                  {"name", r.name},
                  {"status", to_string(r.status)},
                  {"details", r.details},
                  {"warnings", r.warnings}});
  return {{"seed", seed}, {"results", rs}, {"failures", failures()}, {"ok", ok()}};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string data_dir_of(const SuiteOptions& opt) { return opt.data_dir.empty() ? default_data_dir() : opt.data_dir; }

std::vector<Partition> partitions_upto(int nmax) {
  std::vector<Partition> out;
  for (int n = 1; n <= nmax; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

std::vector<Partition> distinct_part_partitions(int nmax) {
  std::vector<Partition> out;
  for (const auto& p : partitions_upto(nmax))
    if (p.distinct_parts()) out.push_back(p);
  return out;
}

struct Builder {
  CriterionResult r;
  bool ok = true;
  void fail(std::string msg) {
    ok = false;
    r.details.push_back(std::move(msg));
  }
  void note(std::string msg) { r.details.push_back(std::move(msg)); }
  void warn(std::string msg) { r.warnings.push_back(std::move(msg)); }
  CriterionResult done() {
    r.status = ok ? Status::Pass : Status::Fail;
    return std::move(r);
  }
};

CriterionResult c1_dimension(Builder b, const SuiteOptions& opt, std::ostream* progress) {
  const auto t0 = Clock::now();
  const auto parts = partitions_upto(5);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto rank = parametrization_rank(parts[i], split_seed(split_seed(opt.seed, 1), i));
    const auto formula = static_cast<std::size_t>(dimension(parts[i]));
    if (rank == formula) {
      ++matched;
    } else {
      b.fail("(" + parts[i].str() + ") rank " + std::to_string(rank) + " formula " + std::to_string(formula));
    }
  }
  const double secs = seconds_since(t0);
  if (progress) *progress << "  criterion 1: " << secs << " s\n";
  b.note(std::to_string(matched) + "/" + std::to_string(parts.size()) + " partitions of n <= 5 match");
  if (secs >= 60) b.fail("runtime limit of 60 s exceeded");
  return b.done();
}

CriterionResult c2_counts(Builder b, const SuiteOptions& opt, std::ostream* progress) {
  struct Case {
    Partition p;
    unsigned d;
    std::size_t expected;
  };
  const std::vector<Case> exact = {{Partition({2, 1}), 3, 7}, {Partition({3, 1}), 2, 10}, {Partition({2, 2}), 2, 9}};
  for (const auto& c : exact) {
    InterpolationOptions io;
    io.mode = ArithmeticMode::Exact;
    io.threads = opt.threads;
    const auto t0 = Clock::now();
    const auto rep = vanishing_forms(c.p, c.d, split_seed(opt.seed, 2), io);
    const double secs = seconds_since(t0);
    if (progress) *progress << "  criterion 2 (" << c.p.str() << ") d=" << c.d << ": " << secs << " s\n";
    const std::string tag = "(" + c.p.str() + ") d=" + std::to_string(c.d) + " exact: ";
    if (rep.nullspace_dim != c.expected) {
      b.fail(tag + std::to_string(rep.nullspace_dim) + " forms, expected " + std::to_string(c.expected));
    } else {
      b.note(tag + std::to_string(rep.nullspace_dim) + " forms");
    }
    if (secs >= 30) b.fail(tag + "runtime limit of 30 s exceeded");
  }
  const auto t0 = Clock::now();
  for (unsigned d = 1; d <= 5; ++d) {
    InterpolationOptions io;
    io.mode = ArithmeticMode::Modular;
    io.prime_count = 3;
    io.threads = opt.threads;
    const auto td = Clock::now();
    const auto rep = vanishing_forms(Partition({2, 1, 1}), d, split_seed(opt.seed, 2), io);
    if (progress) *progress << "  criterion 2 (2,1,1) d=" << d << ": " << seconds_since(td) << " s\n";
    std::string nul;
    for (auto v : rep.nullity_per_prime) nul += (nul.empty() ? "" : ",") + std::to_string(v);
    const std::string tag = "(2,1,1) d=" + std::to_string(d) + " modular, " + std::to_string(rep.monomial_count) +
                            " monomials, nullity per prime [" + nul + "]: ";
    if (rep.nullspace_dim != 0) {
      b.fail(tag + std::to_string(rep.nullspace_dim) + " forms, expected 0");
    } else {
      b.note(tag + "0 forms");
    }
  }
  if (seconds_since(t0) >= 600) b.fail("(2,1,1) runtime limit of 10 min exceeded");
  return b.done();
}

CriterionResult c3_golden(Builder b, const SuiteOptions& opt, std::ostream*) {
  for (const auto& c : golden_cases()) {
    try {
      const GoldenCheck g = check_golden(c, data_dir_of(opt), split_seed(opt.seed, 3), 50);
      for (const auto& [idx, value] : g.failures) {
        const VariableIndexing vars(static_cast<std::size_t>(c.partition.n()));
        b.fail(c.file + ": polynomial " + std::to_string(idx + 1) + " does not vanish (value " + value.str() +
               "): " + to_text(g.polys[idx], vars));
      }
      if (!g.span_equal) {
        b.fail(c.file + ": span differs from the interpolated basis (dimension " +
               std::to_string(g.interpolated_dim) + ")");
      }
      if (g.failures.empty() && g.span_equal) {
        b.note(c.file + ": " + std::to_string(g.polys.size()) + " generators vanish on 50 samples, spans agree");
      }
    } catch (const Error& e) {
      b.fail(std::string(e.what()));
    }
  }
  return b.done();
}

CriterionResult c4_jacobian(Builder b, const SuiteOptions& opt, std::ostream*) {
  for (const auto& c : golden_cases()) {
    try {
      const auto polys = load_golden(c, data_dir_of(opt));
      const auto pts = random_samples(c.partition, 5, split_seed(opt.seed, 4), 10);
      std::string seen;
      bool all = true;
      for (const auto& p : pts) {
        const auto r = jacobian_codim(polys, p);
        seen += (seen.empty() ? "" : ",") + std::to_string(r);
        all = all && r == c.codim;
      }
      const std::string msg = c.file + ": ranks [" + seen + "], expected " + std::to_string(c.codim);
      if (all) {
        b.note(msg);
      } else {
        b.fail(msg);
      }
    } catch (const Error& e) {
      b.fail(std::string(e.what()));
    }
  }
  return b.done();
}

CriterionResult c5_sos(Builder b, const SuiteOptions& opt, std::ostream*) {
  try {
    const auto polys = load_golden(golden_cases().front(), data_dir_of(opt));
    Polynomial sum = Polynomial::zero(6);
    for (const auto& g : polys) sum += g * g;
    const Polynomial disc = matrix_discriminant_symbolic(3);
    // c from the leading terms, then a full coefficient comparison.
    const Rational c = sum.coefficient(disc.leading_monomial()) / disc.leading_coefficient();
    const bool identity = sum == disc * c;
    if (!identity) {
      b.fail("sum of squares is not a scalar multiple of the discriminant (" + std::to_string(sum.size()) + " vs " +
             std::to_string(disc.size()) + " terms, leading ratio " + c.str() + ")");
      // Does the discriminant at least lie in the span of the products g_i g_j?
      const auto mons = monomials_of_degree(6, 6);
      std::vector<Polynomial> prods;
      for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i; j < polys.size(); ++j) prods.push_back(polys[i] * polys[j]);
      ExactMatrix m(prods.size() + 1, mons.size());
      ExactMatrix m0(prods.size(), mons.size());
      for (std::size_t i = 0; i <= prods.size(); ++i) {
        const auto v = coefficient_vector(i < prods.size() ? prods[i] : disc, mons);
        for (std::size_t k = 0; k < v.size(); ++k) {
          m(i, k) = v[k];
          if (i < prods.size()) m0(i, k) = v[k];
        }
      }
      const std::size_t with = rank(m);
      const std::size_t without = rank(m0);
      b.note("discriminant " + std::string(with == without ? "lies" : "does not lie") +
             " in the span of the products g_i*g_j (rank " + std::to_string(without) + " -> " + std::to_string(with) +
             ")");
    } else if (c.sign() <= 0) {
      b.fail("scalar " + c.str() + " is not positive");
    } else {
      b.note("sum of squares = " + c.str() + " * discriminant, all " + std::to_string(disc.size()) +
             " coefficients equal; c = 1: " + (c.is_one() ? "yes" : "no"));
    }
  } catch (const Error& e) {
    b.fail(std::string(e.what()));
  }
  return b.done();
}

OracleOptions oracle_options(const SuiteOptions& opt) {
  OracleOptions o;
  o.threads = opt.threads;
  return o;
}

std::string poly_text(const RationalUniPoly& p) { return to_text(p, "t"); }

CriterionResult c6_hilbert(Builder b, const SuiteOptions& opt, std::ostream* progress) {
  const std::uint64_t seed = split_seed(opt.seed, 6);
  auto oracle_row = [&](const Partition& p, const RationalUniPoly& h, bool& all) {
    std::string row;
    for (int t = p.n(); t <= p.n() + 3; ++t) {
      const auto t0 = Clock::now();
      const auto v = hilbert_function_oracle(p, static_cast<unsigned>(t), seed, oracle_options(opt));
      if (progress) *progress << "  criterion 6 (" << p.str() << ") t=" << t << ": " << seconds_since(t0) << " s\n";
      const Rational f = h.evaluate(Rational(t));
      all = all && f == Rational(static_cast<unsigned long>(v));
      row += " t=" + std::to_string(t) + ":" + f.str() + "/" + std::to_string(v);
    }
    return row;
  };

  for (const auto& p : distinct_part_partitions(6)) {
    if (p.m() == p.n()) continue;  // whole space, closed form undefined
    const auto closed = paper_hilbert(p);
    std::vector<int> codims;
    for (std::size_t i = 0; i < enumerate_subspaces(p).size(); ++i) codims.push_back(p.n() - p.m());
    const auto derksen = derksen_hilbert(codims, p.n());
    bool all = true;
    const std::string row = oracle_row(p, closed.poly, all);
    const bool same = closed.poly == derksen.poly;
    const bool deg_ok = closed.degree() == p.m() - 1;
    std::string msg = "(" + p.str() + ") formula " + closed.str() + (same ? " = " : " != ") + "inclusion-exclusion " +
                      derksen.str() + ", degree " + std::to_string(closed.degree()) + ", formula/oracle" + row;
    if (same && deg_ok && all) {
      b.note(msg);
    } else {
      b.fail(msg);
    }
  }
  for (const auto& p : {Partition({2, 2}), Partition({3, 3})}) {
    const auto closed = paper_hilbert(p);
    bool all = true;
    const std::string row = oracle_row(p, closed.poly, all);
    b.warn("(" + p.str() + ") repeated parts: formula with k = " + std::to_string(multinomial(p)) + " gives " +
           closed.str() + ", " + std::to_string(count_distinct_subspaces(p)) + " distinct subspaces; formula/oracle" +
           row + (all ? " (agree)" : " (disagree)"));
  }
  return b.done();
}

CriterionResult c7_degree(Builder b, const SuiteOptions& opt, std::ostream* progress) {
  const std::uint64_t seed = split_seed(opt.seed, 7);
  auto report = [&](const Partition& p) {
    const auto t0 = Clock::now();
    auto r = arrangement_degree(p, seed, oracle_options(opt));
    if (progress) *progress << "  criterion 7 (" << p.str() << "): " << seconds_since(t0) << " s\n";
    return r;
  };
  auto describe = [&](const DegreeReport& r) {
    return "(" + r.partition.str() + ") formula " + std::to_string(r.formula_degree) + ", geometric " +
           (r.geometric ? std::to_string(*r.geometric) : std::string("unstable")) + ", Hilbert polynomial " +
           poly_text(r.hilbert) + " from t=" + std::to_string(r.stable_from);
  };
  for (const auto& p : distinct_part_partitions(6)) {
    if (p.m() < 2) continue;
    const auto r = report(p);
    if (r.geometric && *r.geometric == r.formula_degree) {
      b.note(describe(r));
    } else {
      b.fail(describe(r));
    }
  }
  for (const auto& p : {Partition({2, 2}), Partition({3, 3})}) b.warn(describe(report(p)) + " (repeated parts)");
  return b.done();
}

CriterionResult c8_edd(Builder b, const SuiteOptions& opt, std::ostream*) {
  const std::uint64_t seed = split_seed(opt.seed, 8);
  for (const auto& p : distinct_part_partitions(6)) {
    const auto r = edd_report(p, split_seed(seed, static_cast<std::uint64_t>(p.n() * 100 + p.m())));
    const std::string msg = "(" + p.str() + ") {" + std::to_string(r.formula_edd) + ", " +
                            std::to_string(r.subspace_count) + ", " + std::to_string(r.real_critical) + "}";
    if (r.formula_edd == r.subspace_count && r.subspace_count == r.real_critical && r.generic) {
      b.note(msg);
    } else {
      b.fail(msg + (r.generic ? "" : " (no generic u found)"));
    }

    // 20 random u: stable count and exact orthogonality.
    bool counts = true, residuals = true;
    for (std::uint64_t k = 0; k < 20; ++k) {
      Rng rng(split_seed(split_seed(seed, 0xc0 + static_cast<std::uint64_t>(p.n())), k));
      ExactVector u;
      for (int i = 0; i < p.n(); ++i) u.push_back(rng.rational(100));
      const CriticalSet cs = critical_points(u, p);
      counts = counts && cs.points.size() == r.subspace_count;
      for (const auto& cp : cs.points)
        for (const auto& x : orthogonality_residuals(u, cp)) residuals = residuals && x.is_zero();
    }
    if (!counts || !residuals) {
      b.fail("(" + p.str() + ") over 20 random u: count stable " + (counts ? "yes" : "no") + ", residuals zero " +
             (residuals ? "yes" : "no"));
    }
  }
  b.note("critical points for 20 random u per partition: counts stable, orthogonality residuals exactly 0");
  const auto r = edd_report(Partition({2, 2}), split_seed(seed, 0x22));
  b.warn("(2,2) {" + std::to_string(r.formula_edd) + ", " + std::to_string(r.subspace_count) + ", " +
         std::to_string(r.real_critical) + "}: closed form counts ordered block assignments");
  return b.done();
}

CriterionResult c9_nearest(Builder b, const SuiteOptions& opt, std::ostream*) {
  const std::uint64_t seed = split_seed(opt.seed, 9);
  double worst_transfer = 0, worst_improvement = -INFINITY;
  std::size_t cases = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const std::size_t n = 1 + k % 5;
    Rng rng(split_seed(seed, k));
    std::vector<double> upper;
    for (std::size_t i = 0; i < n * (n + 1) / 2; ++i) upper.push_back(20 * rng.unit() - 10);
    const FloatSymmetric u(n, upper);
    for (const auto& p : partitions_of(static_cast<int>(n))) {
      ++cases;
      const NearestResult nr = nearest_symmetric(u, p);
      const auto crit = critical_points(std::span<const double>(nr.eigenvalues), p);
      const double dist = std::sqrt(nr.squared_distance);
      const double ref = std::sqrt(crit.front().squared_distance);
      const double rel = std::abs(dist - ref) / std::max(1.0, ref);
      worst_transfer = std::max(worst_transfer, rel);
      if (rel > 1e-9) {
        std::ostringstream os;
        os << "U#" << k << " (" << p.str() << "): distance " << dist << " vs critical minimum " << ref;
        b.fail(os.str());
      }
      // Conjugating the answer by a nearby rotation stays on the variety.
      for (std::uint64_t j = 0; j < 20; ++j) {
        Rng pr(split_seed(split_seed(seed, 0x100 + k), j));
        std::vector<double> skew;
        for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) skew.push_back(1e-3 * (2 * pr.unit() - 1));
        const Matrix<double> q = cayley_float(n, skew);
        const Matrix<double> moved = q * nr.matrix.dense() * q.transpose();
        const double dd = frobenius_distance(u, FloatSymmetric::from_dense(moved));
        const double improvement = dist - dd;
        worst_improvement = std::max(worst_improvement, improvement);
        if (improvement > 1e-9) {
          std::ostringstream os;
          os << "U#" << k << " (" << p.str() << "): perturbation " << j << " improves by " << improvement;
          b.fail(os.str());
        }
      }
    }
  }
  std::ostringstream os;
  os << cases << " (U, partition) pairs; transfer within 1e-9: " << (worst_transfer <= 1e-9 ? "yes" : "no")
     << "; no perturbation improves by more than 1e-9: " << (worst_improvement <= 1e-9 ? "yes" : "no");
  b.note(os.str());
  return b.done();
}

CriterionResult c10_membership(Builder b, const SuiteOptions& opt, std::ostream*) {
  const std::uint64_t seed = split_seed(opt.seed, 10);
  std::size_t errors = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(split_seed(seed, k));
    const int n = static_cast<int>(rng.uniform(2, 5));
    const auto parts = partitions_of(n);
    const Partition& lambda = parts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(parts.size()) - 1))];
    const auto pts = random_samples(lambda, 1, split_seed(split_seed(seed, 0x1000), k), 10);
    const auto& a = pts.front().matrix;
    const auto cp = char_poly(a);
    const int distinct = distinct_root_count(subdiscriminants(cp));
    const Partition mu = multiplicity_partition(a);
    const bool in_closure = membership_exact(a, lambda);
    if (distinct != lambda.m() || !(mu == lambda) || !in_closure) {
      ++errors;
      b.fail("sample " + std::to_string(k) + " built for (" + lambda.str() + ") classified as (" + mu.str() + "), " +
             std::to_string(distinct) + " distinct eigenvalues");
    }
  }
  b.note("100 constructed-spectrum matrices, " + std::to_string(errors) + " classification errors");
  return b.done();
}

CriterionResult c11_chevalley(Builder b, const SuiteOptions& opt, std::ostream*) {
  const std::uint64_t seed = split_seed(opt.seed, 11);
  for (const auto& p : partitions_upto(4)) {
    const auto t = chevalley_check(p, 6, seed);
    std::string row;
    for (const auto& r : t.rows) row += " " + std::to_string(r.sn) + "/" + std::to_string(r.son);
    const std::string msg = "(" + p.str() + ") S_n/SO(n) by degree:" + row;
    if (t.all_match()) {
      b.note(msg);
    } else {
      b.fail(msg + " (trace span deficient or isomorphism violated)");
    }
    if (p == Partition({2, 1})) {
      const auto& r6 = t.rows.back();
      if (r6.sn != 1 || r6.son != 1) b.fail("(2,1) degree 6 row is not (1,1)");
    }
  }
  return b.done();
}

CriterionResult c12_determinism(Builder b, const SuiteOptions& opt, std::ostream* progress) {
  SuiteOptions a = opt;
  a.criteria.clear();
  for (int id = 1; id < kCriterionCount; ++id) a.criteria.push_back(id);
  SuiteOptions c = a;
  c.threads = opt.threads == 1 ? 2 : 1;
  if (progress) *progress << "  criterion 12: run with " << a.threads << " thread(s)\n";
  const std::string first = run_suite(a, progress).text();
  if (progress) *progress << "  criterion 12: run with " << c.threads << " thread(s)\n";
  const std::string second = run_suite(c, progress).text();
  if (first == second) {
    b.note("criteria 1-11 reports identical across two runs (" + std::to_string(a.threads) + " and " +
           std::to_string(c.threads) + " threads), " + std::to_string(first.size()) + " bytes");
  } else {
    b.fail("reports differ between runs with " + std::to_string(a.threads) + " and " + std::to_string(c.threads) +
           " threads");
  }
  return b.done();
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt, std::ostream* progress) {
  Builder b;
  b.r.id = id;
  b.r.name = criterion_name(id);
  const auto t0 = Clock::now();
  CriterionResult out;
  try {
    switch (id) {
      case 1: out = c1_dimension(std::move(b), opt, progress); break;
      case 2: out = c2_counts(std::move(b), opt, progress); break;
      case 3: out = c3_golden(std::move(b), opt, progress); break;
      case 4: out = c4_jacobian(std::move(b), opt, progress); break;
      case 5: out = c5_sos(std::move(b), opt, progress); break;
      case 6: out = c6_hilbert(std::move(b), opt, progress); break;
      case 7: out = c7_degree(std::move(b), opt, progress); break;
      case 8: out = c8_edd(std::move(b), opt, progress); break;
      case 9: out = c9_nearest(std::move(b), opt, progress); break;
      case 10: out = c10_membership(std::move(b), opt, progress); break;
      case 11: out = c11_chevalley(std::move(b), opt, progress); break;
      default: out = c12_determinism(std::move(b), opt, progress); break;
    }
  } catch (const std::exception& e) {
    out.id = id;
    out.name = criterion_name(id);
    out.status = Status::Fail;
    out.details.push_back(std::string("error: ") + e.what());
  }
  if (progress) *progress << "criterion " << id << " " << to_string(out.status) << " in " << seconds_since(t0) << " s\n";
  return out;
}

SuiteReport run_suite(const SuiteOptions& opt, std::ostream* progress) {
  SuiteReport rep;
  rep.seed = opt.seed;
  std::vector<int> ids = opt.criteria;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  for (int id : ids) {
    criterion_name(id);
    rep.results.push_back(run_criterion(id, opt, progress));
  }
  return rep;
}

}  // namespace eigenstrata
