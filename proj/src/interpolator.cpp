#include "eigenstrata/interpolator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "eigenstrata/jet.hpp"
#include "eigenstrata/linalg.hpp"
#include "eigenstrata/rng.hpp"

namespace eigenstrata {

std::string to_string(ArithmeticMode m) {
  switch (m) {
    case ArithmeticMode::Auto: return "auto";
    case ArithmeticMode::Exact: return "exact";
    case ArithmeticMode::Modular: return "modular";
  }
  return "auto";
}

ArithmeticMode parse_mode(std::string_view s) {
  if (s == "auto") return ArithmeticMode::Auto;
  if (s == "exact") return ArithmeticMode::Exact;
  if (s == "modular") return ArithmeticMode::Modular;
  throw ParseError("mode must be auto, exact or modular");
}

ExactMatrix evaluation_matrix(std::span<const Monomial> monomials, std::span<const ExactVector> points) {
  unsigned max_deg = 0;
  for (const auto& m : monomials) max_deg = std::max(max_deg, m.degree());
  ExactMatrix out(points.size(), monomials.size());
  std::vector<std::vector<mpq_class>> pw;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ExactVector& x = points[i];
    pw.assign(x.size(), {});
    for (std::size_t k = 0; k < x.size(); ++k) {
      pw[k].push_back(1);
      for (unsigned e = 1; e <= max_deg; ++e) pw[k].push_back(pw[k].back() * x[k].get());
    }
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const Monomial& m = monomials[j];
      if (m.support_size() > x.size()) throw DimensionError("point too short for monomial basis");
      mpq_class v = 1;
      for (std::size_t k = 0; k < m.support_size(); ++k)
        if (m[k] != 0) v *= pw[k][m[k]];
      out(i, j) = Rational(std::move(v));
    }
  }
  return out;
}

ModularMatrix modular_evaluation_matrix(std::span<const Monomial> monomials, std::span<const ExactVector> points,
                                        std::uint64_t p) {
  ModField f(p);
  unsigned max_deg = 0;
  for (const auto& m : monomials) max_deg = std::max(max_deg, m.degree());
  ModularMatrix out(p, points.size(), monomials.size());
  std::vector<std::vector<std::uint64_t>> pw;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ExactVector& x = points[i];
    pw.assign(x.size(), {});
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::uint64_t r = f.reduce(x[k]);
      pw[k].push_back(1);
      for (unsigned e = 1; e <= max_deg; ++e) pw[k].push_back(f.mul(pw[k].back(), r));
    }
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const Monomial& m = monomials[j];
      std::uint64_t v = 1;
      for (std::size_t k = 0; k < m.support_size(); ++k)
        if (m[k] != 0) v = f.mul(v, pw[k][m[k]]);
      out.at(i, j) = v;
    }
  }
  return out;
}

namespace {

std::vector<ExactVector> ambient_points(const std::vector<SamplePoint>& samples) {
  std::vector<ExactVector> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) pts.push_back(s.ambient);
  return pts;
}

Polynomial polynomial_from_coefficients(std::span<const Monomial> monomials, const ExactVector& coeffs,
                                        std::size_t num_vars) {
  Polynomial p = Polynomial::zero(num_vars);
  for (std::size_t j = 0; j < monomials.size(); ++j) p.add_term(monomials[j], coeffs[j]);
  return p;
}

bool vanishes_on(const Polynomial& f, const std::vector<SamplePoint>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const SamplePoint& p) { return f.evaluate(p.ambient).is_zero(); });
}

struct PrimeResult {
  std::uint64_t prime = 0;
  bool bad = false;
  ModularNullspace ns;
};

// Lift the canonical modular nullspace to the rationals. Throws
// ReconstructFailError when coefficients exceed the reconstruction bound.
std::vector<ExactVector> lift_nullspace(const std::vector<const PrimeResult*>& agreeing, std::size_t cols) {
  std::vector<std::uint64_t> moduli;
  for (const auto* r : agreeing) moduli.push_back(r->prime);
  const std::size_t dim = agreeing.front()->ns.basis.size();
  std::vector<ExactVector> out(dim, ExactVector(cols, Rational(0)));
  std::vector<std::uint64_t> residues(moduli.size());
  mpz_class modulus = 1;
  for (auto p : moduli) modulus *= p;
  for (std::size_t v = 0; v < dim; ++v) {
    for (std::size_t j = 0; j < cols; ++j) {
      bool all_zero = true;
      for (std::size_t k = 0; k < agreeing.size(); ++k) {
        residues[k] = agreeing[k]->ns.basis[v][j];
        all_zero = all_zero && residues[k] == 0;
      }
      if (all_zero) continue;
      out[v][j] = rational_reconstruct(crt(residues, moduli), modulus);
    }
  }
  return out;
}

struct Attempt {
  std::vector<ExactVector> basis;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> nullity;
};

Attempt run_modular(std::span<const Monomial> monomials, const std::vector<ExactVector>& pts, std::uint64_t seed,
                    std::size_t attempt, const InterpolationOptions& opt) {
  Attempt out;
  out.primes = primes_for_seed(seed, opt.prime_count, attempt * opt.prime_count);
  std::vector<PrimeResult> results(out.primes.size());
  auto work = [&](std::size_t i) {
    results[i].prime = out.primes[i];
    try {
      results[i].ns = nullspace_mod(modular_evaluation_matrix(monomials, pts, out.primes[i]));
    } catch (const BadPrimeError&) {
      results[i].bad = true;
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(results.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < results.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < results.size(); i += workers) work(i);
      });
    for (auto& t : pool) t.join();
  }

  // Reduction can only enlarge the nullspace, so the smallest observed
  // nullity with a common pivot pattern is taken as the rational one.
  std::optional<std::size_t> best;
  for (const auto& r : results) {
    out.nullity.push_back(r.bad ? SIZE_MAX : r.ns.basis.size());
    if (!r.bad && (!best || r.ns.basis.size() < *best)) best = r.ns.basis.size();
  }
  if (!best) throw BadPrimeError("every prime divided a sample denominator");
  std::map<std::vector<std::size_t>, std::vector<const PrimeResult*>> by_pivots;
  for (const auto& r : results)
    if (!r.bad && r.ns.basis.size() == *best) by_pivots[r.ns.pivots].push_back(&r);
  const std::vector<const PrimeResult*>* chosen = nullptr;
  for (const auto& [piv, group] : by_pivots)
    if (!chosen || group.size() > chosen->size()) chosen = &group;
  if (*best == 0) return out;
  out.basis = lift_nullspace(*chosen, monomials.size());
  return out;
}

}  // namespace

InterpolationReport vanishing_forms(const Partition& lambda, unsigned d, std::uint64_t seed,
                                    const InterpolationOptions& options) {
  if (d < 1) throw DimensionError("degree must be at least 1");
  const auto n = static_cast<std::size_t>(lambda.n());
  const VariableIndexing vars(n);
  const std::vector<Monomial> monomials = monomials_of_degree(vars.size(), d);

  InterpolationReport rep;
  rep.partition = lambda;
  rep.degree = d;
  rep.seed = seed;
  rep.monomial_count = monomials.size();
  rep.sample_count = monomials.size() + options.sample_margin;
  ArithmeticMode mode = options.mode;
  if (mode == ArithmeticMode::Auto) {
    mode = monomials.size() > options.modular_threshold ? ArithmeticMode::Modular : ArithmeticMode::Exact;
  }
  rep.mode = mode;

  std::string last_failure;
  for (std::size_t attempt = 0; attempt < 2; ++attempt) {
    rep.attempts = attempt + 1;
    const auto samples = random_samples(lambda, rep.sample_count, split_seed(seed, 2 * attempt), options.height);
    const auto fresh = random_samples(lambda, options.verify_count, split_seed(seed, 2 * attempt + 1), options.height);
    const auto pts = ambient_points(samples);

    std::vector<ExactVector> basis;
    try {
      if (mode == ArithmeticMode::Exact) {
        basis = nullspace(evaluation_matrix(monomials, pts));
        rep.primes.clear();
        rep.nullity_per_prime.clear();
      } else {
        Attempt a = run_modular(monomials, pts, seed, attempt, options);
        basis = std::move(a.basis);
        rep.primes = std::move(a.primes);
        rep.nullity_per_prime = std::move(a.nullity);
      }
    } catch (const ReconstructFailError& e) {
      last_failure = e.what();
      continue;
    } catch (const BadPrimeError& e) {
      last_failure = e.what();
      continue;
    }

    std::vector<Polynomial> polys;
    bool ok = true;
    for (const auto& v : basis) {
      Polynomial f = polynomial_from_coefficients(monomials, v, vars.size());
      if (!vanishes_on(f, fresh)) {
        ok = false;
        last_failure = "candidate " + to_text(f, vars) + " fails on fresh samples";
        break;
      }
      polys.push_back(std::move(f));
    }
    if (!ok) continue;
    rep.basis = std::move(polys);
    rep.nullspace_dim = rep.basis.size();
    return rep;
  }
  throw VerificationFailError("interpolation for " + lambda.str() + " degree " + std::to_string(d) +
                              " failed twice: " + last_failure);
}

bool span_equals(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  std::optional<int> deg;
  std::map<Monomial, std::size_t, GrlexDescending> index;
  auto scan = [&](std::span<const Polynomial> list) {
    for (const auto& p : list) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || (deg && *deg != p.degree())) throw MixedDegreeError("span_equals needs one common degree");
      deg = p.degree();
      for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
    }
  };
  scan(a);
  scan(b);
  std::size_t k = 0;
  for (auto& [m, pos] : index) pos = k++;
  auto to_matrix = [&](std::span<const Polynomial> x, std::span<const Polynomial> y) {
    ExactMatrix mat(x.size() + y.size(), index.size());
    std::size_t r = 0;
    for (auto list : {x, y})
      for (const auto& p : list) {
        for (const auto& [m, c] : p.terms()) mat(r, index.at(m)) = c;
        ++r;
      }
    return mat;
  };
  const std::span<const Polynomial> none;
  const std::size_t ra = rank(to_matrix(a, none));
  const std::size_t rb = rank(to_matrix(b, none));
  if (ra != rb) return false;
  return rank(to_matrix(a, b)) == ra;
}

std::size_t jacobian_codim(std::span<const Polynomial> basis, const SamplePoint& p) {
  if (basis.empty()) return 0;
  const std::size_t num_vars = p.ambient.size();
  ExactMatrix jac(basis.size(), num_vars);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].evaluate(p.ambient).is_zero()) throw NotOnVarietyError("basis polynomial does not vanish at point");
    for (std::size_t k = 0; k < num_vars; ++k) jac(i, k) = basis[i].derivative(k).evaluate(p.ambient);
  }
  return rank(jac);
}

std::size_t parametrization_rank(const Partition& lambda, std::uint64_t seed, std::int64_t height) {
  const auto n = static_cast<std::size_t>(lambda.n());
  const SpectrumSpec spec = random_spectrum(lambda, split_seed(seed, 0), height);
  const SkewParams skew = SkewParams::random(n, split_seed(seed, 1), height);
  const std::size_t m = spec.eigenvalues.size();
  const std::size_t params = m + skew.upper.size();
  const std::size_t num_vars = n * (n + 1) / 2;

  ExactMatrix jac(num_vars, params);
  for (std::size_t t = 0; t < params; ++t) {
    std::vector<Jet> mu;
    for (std::size_t i = 0; i < m; ++i) mu.emplace_back(spec.eigenvalues[i], Rational(t == i ? 1 : 0));
    Matrix<Jet> b(n, n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        Jet e(skew.upper[k], Rational(t == m + k ? 1 : 0));
        b(i, j) = e;
        b(j, i) = -e;
      }
    const Matrix<Jet> q = cayley_transform(b);
    std::vector<Jet> diag;
    for (std::size_t i = 0; i < m; ++i)
      for (int r = 0; r < lambda[i]; ++r) diag.push_back(mu[i]);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++row) {
        Jet s(0);
        for (std::size_t c = 0; c < n; ++c) s += q(i, c) * diag[c] * q(j, c);
        jac(row, t) = s.deriv;
      }
  }
  return rank(jac);
}

nlohmann::json to_json(const InterpolationReport& r) {
  const VariableIndexing vars(static_cast<std::size_t>(r.partition.n()));
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& p : r.basis) {
    nlohmann::json j = to_json(p, vars);
    j["text"] = to_text(p, vars);
    basis.push_back(std::move(j));
  }
  nlohmann::json out = {{"partition", r.partition.str()},
                        {"degree", r.degree},
                        {"monomial_count", r.monomial_count},
                        {"sample_count", r.sample_count},
                        {"nullspace_dim", r.nullspace_dim},
                        {"mode", to_string(r.mode)},
                        {"seed", r.seed},
                        {"attempts", r.attempts},
                        {"basis", basis}};
  if (r.mode == ArithmeticMode::Modular) {
    out["primes"] = r.primes;
    nlohmann::json nul = nlohmann::json::array();
    for (auto v : r.nullity_per_prime) {
      if (v == SIZE_MAX) {
        nul.push_back(nullptr);
      } else {
        nul.push_back(v);
      }
    }
    out["nullity_per_prime"] = nul;
  }
  return out;
}

}  // namespace eigenstrata
