#include "eigenstrata/invariants.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "eigenstrata/arrangement.hpp"
#include "eigenstrata/linalg.hpp"
#include "eigenstrata/rng.hpp"
#include "eigenstrata/sampler.hpp"
#include "eigenstrata/univariate.hpp"

namespace eigenstrata {

namespace {

std::vector<int> padded_exponents(const Partition& mu, std::size_t n) {
  std::vector<int> e = mu.parts();
  if (e.size() > n) throw DimensionError("partition has more parts than variables");
  e.resize(n, 0);
  std::sort(e.begin(), e.end());
  return e;
}

Rational eval_monomial_symmetric(const std::vector<int>& sorted_exps, const ExactVector& x) {
  std::vector<int> e = sorted_exps;
  mpq_class total = 0;
  do {
    mpq_class term = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), x[i].get().get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(p.get_den_mpz_t(), x[i].get().get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= p;
    }
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return Rational(std::move(total));
}

void check_guards(std::size_t basis, const Partition& lambda, const InvariantOptions& opt) {
  if (static_cast<std::size_t>(lambda.n()) > opt.max_n) throw SizeGuardError("n exceeds the invariant guard");
  if (basis > opt.guard) throw SizeGuardError("invariant basis exceeds the guard");
}

// Rows: samples; columns: power-trace products indexed by `basis`.
ExactMatrix power_trace_rows(const std::vector<Partition>& basis, const std::vector<SamplePoint>& pts) {
  ExactMatrix out(pts.size(), basis.size());
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const ExactMatrix& a = pts[r].matrix;
    const std::size_t n = a.rows();
    std::vector<Rational> tr{Rational(0)};
    ExactMatrix power = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      power = power * a;
      tr.push_back(power.trace());
    }
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Rational v(1);
      for (int k : basis[c].parts()) v *= tr[static_cast<std::size_t>(k)];
      out(r, c) = v;
    }
  }
  return out;
}

}  // namespace

Polynomial monomial_symmetric(const Partition& mu, std::size_t n) {
  std::vector<int> e = padded_exponents(mu, n);
  const std::size_t num_vars = n;
  Polynomial p = Polynomial::zero(num_vars);
  do {
    std::vector<std::uint16_t> ex(e.begin(), e.end());
    p.add_term(Monomial(ex), Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

std::size_t sn_invariant_dim(const Partition& lambda, unsigned d, std::uint64_t seed, const InvariantOptions& opt) {
  if (d < 1) throw DimensionError("degree must be at least 1");
  const auto n = static_cast<std::size_t>(lambda.n());
  const auto basis = partitions_with_at_most(static_cast<int>(d), static_cast<int>(n));
  check_guards(basis.size(), lambda, opt);
  const auto subspaces = enumerate_subspaces(lambda);
  const std::size_t per = (basis.size() + opt.margin + subspaces.size() - 1) / subspaces.size();

  std::vector<std::vector<int>> exps;
  for (const auto& mu : basis) exps.push_back(padded_exponents(mu, n));
  ExactMatrix m(per * subspaces.size(), basis.size());
  std::size_t row = 0;
  for (std::size_t s = 0; s < subspaces.size(); ++s)
    for (std::size_t j = 0; j < per; ++j, ++row) {
      Rng rng(split_seed(split_seed(split_seed(seed, d), s), j));
      ExactVector values;
      for (std::size_t k = 0; k < subspaces[s].blocks().size(); ++k) values.push_back(rng.rational(opt.height));
      const ExactVector x = subspaces[s].point(values);
      for (std::size_t c = 0; c < basis.size(); ++c) m(row, c) = eval_monomial_symmetric(exps[c], x);
    }
  return basis.size() - rank(m);
}

Polynomial power_trace(std::size_t n, unsigned k) {
  const Matrix<Polynomial> a = symbolic_symmetric_matrix(n);
  const std::size_t num_vars = n * (n + 1) / 2;
  Matrix<Polynomial> power(n, n, Polynomial::zero(num_vars));
  for (std::size_t i = 0; i < n; ++i) power(i, i) = Polynomial::constant(num_vars, Rational(1));
  for (unsigned e = 0; e < k; ++e) power = power * a;
  Polynomial t = Polynomial::zero(num_vars);
  for (std::size_t i = 0; i < n; ++i) t += power(i, i);
  return t;
}

std::size_t son_invariant_dim(const Partition& lambda, unsigned d, std::uint64_t seed, const InvariantOptions& opt) {
  if (d < 1) throw DimensionError("degree must be at least 1");
  const auto basis = partitions_with_parts_at_most(static_cast<int>(d), lambda.n());
  check_guards(basis.size(), lambda, opt);
  const auto pts = random_samples(lambda, basis.size() + opt.margin, split_seed(seed, 0x50 + d), opt.height);
  return basis.size() - rank(power_trace_rows(basis, pts));
}

std::vector<Polynomial> son_invariant_basis(const Partition& lambda, unsigned d, std::uint64_t seed,
                                            const InvariantOptions& opt) {
  if (d < 1) throw DimensionError("degree must be at least 1");
  const auto n = static_cast<std::size_t>(lambda.n());
  const auto basis = partitions_with_parts_at_most(static_cast<int>(d), lambda.n());
  check_guards(basis.size(), lambda, opt);
  const auto pts = random_samples(lambda, basis.size() + opt.margin, split_seed(seed, 0x50 + d), opt.height);
  const auto kernel = nullspace(power_trace_rows(basis, pts));
  if (kernel.empty()) return {};

  const std::size_t num_vars = n * (n + 1) / 2;
  std::vector<Polynomial> traces{Polynomial::constant(num_vars, Rational(1))};
  for (unsigned k = 1; k <= n; ++k) traces.push_back(power_trace(n, k));
  std::vector<Polynomial> products;
  for (const auto& mu : basis) {
    Polynomial p = Polynomial::constant(num_vars, Rational(1));
    for (int k : mu.parts()) p *= traces[static_cast<std::size_t>(k)];
    products.push_back(std::move(p));
  }
  std::vector<Polynomial> out;
  for (const auto& v : kernel) {
    Polynomial f = Polynomial::zero(num_vars);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) f += products[c] * v[c];
    out.push_back(std::move(f));
  }
  return out;
}

bool GradedDimensionTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match; });
}

std::string GradedDimensionTable::text() const {
  std::ostringstream os;
  os << "partition " << partition.str() << "  seed " << seed << '\n';
  os << std::setw(6) << "degree" << std::setw(8) << "S_n" << std::setw(8) << "SO(n)" << std::setw(8) << "match" << '\n';
  for (const auto& r : rows)
    os << std::setw(6) << r.degree << std::setw(8) << r.sn << std::setw(8) << r.son << std::setw(8)
       << (r.match ? "yes" : "NO") << '\n';
  return os.str();
}

GradedDimensionTable chevalley_check(const Partition& lambda, unsigned dmax, std::uint64_t seed,
                                     const InvariantOptions& opt) {
  GradedDimensionTable t;
  t.partition = lambda;
  t.seed = seed;
  for (unsigned d = 1; d <= dmax; ++d) {
    GradedDimensionTable::Row r;
    r.degree = d;
    r.sn = sn_invariant_dim(lambda, d, seed, opt);
    r.son = son_invariant_dim(lambda, d, seed, opt);
    r.match = r.sn == r.son;
    t.rows.push_back(r);
  }
  return t;
}

nlohmann::json to_json(const GradedDimensionTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back({{"degree", r.degree}, {"sn", r.sn}, {"son", r.son}, {"match", r.match}});
  return {{"partition", t.partition.str()}, {"seed", t.seed}, {"rows", rows}, {"all_match", t.all_match()}};
}

}  // namespace eigenstrata
