#include "eigenstrata/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/linalg.hpp"
#include "eigenstrata/modular.hpp"
#include "eigenstrata/rng.hpp"

namespace eigenstrata {

BlockAssignment::BlockAssignment(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw DimensionError("empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (const auto& b : blocks_)
    for (int x : b) {
      if (x < 1 || x > n_ || seen[static_cast<std::size_t>(x)]) throw DimensionError("blocks must partition 1..n");
      seen[static_cast<std::size_t>(x)] = true;
    }
}

Partition BlockAssignment::shape() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Partition(sizes);
}

std::vector<std::size_t> BlockAssignment::labels() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int x : blocks_[k]) out[static_cast<std::size_t>(x - 1)] = k;
  return out;
}

std::string BlockAssignment::str() const {
  std::string s;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += '|';
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      if (i && n_ >= 10) s += ',';
      s += std::to_string(blocks_[k][i]);
    }
  }
  return s;
}

ExactVector BlockAssignment::point(const ExactVector& values) const {
  if (values.size() != blocks_.size()) throw DimensionError("one value per block");
  ExactVector x(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int i : blocks_[k]) x[static_cast<std::size_t>(i - 1)] = values[k];
  return x;
}

namespace {

void enumerate_rec(std::vector<int>& remaining_sizes, std::vector<bool>& used, int n,
                   std::vector<std::vector<int>>& cur, std::vector<BlockAssignment>& out) {
  int first = 1;
  while (first <= n && used[static_cast<std::size_t>(first)]) ++first;
  if (first > n) {
    out.emplace_back(cur);
    return;
  }
  // The smallest free element opens the next block; try each distinct size.
  for (std::size_t si = 0; si < remaining_sizes.size(); ++si) {
    if (si > 0 && remaining_sizes[si] == remaining_sizes[si - 1]) continue;
    const int size = remaining_sizes[si];
    std::vector<int> rest = remaining_sizes;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(si));
    std::vector<int> free;
    for (int x = first + 1; x <= n; ++x)
      if (!used[static_cast<std::size_t>(x)]) free.push_back(x);
    if (static_cast<int>(free.size()) < size - 1) continue;
    // Choose size-1 companions from `free` by a bitmask over selections.
    std::vector<bool> pick(free.size(), false);
    std::fill(pick.begin(), pick.begin() + size - 1, true);
    do {
      std::vector<int> block{first};
      for (std::size_t i = 0; i < free.size(); ++i)
        if (pick[i]) block.push_back(free[i]);
      for (int x : block) used[static_cast<std::size_t>(x)] = true;
      cur.push_back(block);
      enumerate_rec(rest, used, n, cur, out);
      cur.pop_back();
      for (int x : block) used[static_cast<std::size_t>(x)] = false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

}  // namespace

std::vector<BlockAssignment> enumerate_subspaces(const Partition& lambda) {
  if (lambda.n() > 12) throw SizeGuardError("subspace enumeration is limited to n <= 12");
  std::vector<int> sizes = lambda.parts();
  std::vector<bool> used(static_cast<std::size_t>(lambda.n()) + 1, false);
  std::vector<std::vector<int>> cur;
  std::vector<BlockAssignment> out;
  enumerate_rec(sizes, used, lambda.n(), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

RationalUniPoly binomial_in_t(int a) {
  RationalUniPoly p(std::vector<Rational>{Rational(1)});
  for (int i = 1; i <= a; ++i) p = p * RationalUniPoly(std::vector<Rational>{Rational(i), Rational(1)});
  return p * Rational(mpz_class(1), mpz_class(factorial(static_cast<unsigned>(a))));
}

std::string HilbertPolynomial::str() const { return to_text(poly, "t"); }

HilbertPolynomial derksen_hilbert(const std::vector<int>& codims, int n) {
  // ways[s][c] = number of s-element subsets with total codim c (< n).
  std::vector<std::vector<mpz_class>> ways(codims.size() + 1, std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
  ways[0][0] = 1;
  for (std::size_t i = 0; i < codims.size(); ++i) {
    const int ci = codims[i];
    if (ci < 0) throw DimensionError("negative codimension");
    for (std::size_t s = i + 1; s-- > 0;)
      for (int c = n - 1; c >= ci; --c) ways[s + 1][static_cast<std::size_t>(c)] += ways[s][static_cast<std::size_t>(c - ci)];
  }
  HilbertPolynomial h;
  RationalUniPoly sum;
  for (std::size_t s = 1; s <= codims.size(); ++s)
    for (int c = 0; c < n; ++c) {
      const mpz_class& w = ways[s][static_cast<std::size_t>(c)];
      if (w == 0) continue;
      const int sign = s % 2 == 1 ? 1 : -1;
      h.terms.push_back({sign, s, c, w});
      sum = sum + binomial_in_t(n - 1 - c) * Rational(mpz_class(sign * w));
    }
  h.poly = sum;
  return h;
}

HilbertPolynomial paper_hilbert(const Partition& lambda) {
  const int n = lambda.n();
  const int c = n - lambda.m();
  if (c == 0) throw DegenerateError("the arrangement is the whole space when m = n");
  const mpz_class k(static_cast<unsigned long>(multinomial(lambda)));
  const int top = (n + c - 1) / c - 1;  // ceil(n / c) - 1
  HilbertPolynomial h;
  RationalUniPoly sum;
  for (int i = 1; i <= top; ++i) {
    mpz_class choose;
    mpz_bin_ui(choose.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(i));
    const int sign = i % 2 == 1 ? 1 : -1;
    h.terms.push_back({sign, static_cast<std::size_t>(i), i * c, choose});
    sum = sum + binomial_in_t(n - 1 - i * c) * Rational(mpz_class(sign * choose));
  }
  h.poly = sum;
  return h;
}

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::size_t rank_of_points(const std::vector<Monomial>& monomials, const std::vector<ExactVector>& pts,
                           std::uint64_t seed, const OracleOptions& opt) {
  if (monomials.size() <= opt.modular_threshold) return rank(evaluation_matrix(monomials, pts));
  const auto primes = primes_for_seed(seed, opt.prime_count);
  std::vector<std::size_t> ranks(primes.size(), 0);
  auto work = [&](std::size_t i) { ranks[i] = rank_mod(modular_evaluation_matrix(monomials, pts, primes[i])); };
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(primes.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < primes.size(); i += workers) work(i);
      });
    for (auto& th : pool) th.join();
  }
  return *std::max_element(ranks.begin(), ranks.end());
}

// Random points on every subspace, optionally cut by x_n = 0 (obtained by
// shifting so the last coordinate vanishes, then dropping it).
std::vector<ExactVector> oracle_points(const std::vector<BlockAssignment>& subspaces, std::size_t per_subspace,
                                       bool section, std::uint64_t seed, std::int64_t height) {
  std::vector<ExactVector> pts;
  for (std::size_t s = 0; s < subspaces.size(); ++s) {
    const BlockAssignment& b = subspaces[s];
    for (std::size_t j = 0; j < per_subspace; ++j) {
      Rng rng(split_seed(split_seed(seed, s), j));
      ExactVector values;
      for (std::size_t k = 0; k < b.blocks().size(); ++k) values.push_back(rng.rational(height));
      ExactVector x = b.point(values);
      if (section) {
        const Rational last = x.back();
        x.pop_back();
        for (auto& v : x) v -= last;
      }
      pts.push_back(std::move(x));
    }
  }
  return pts;
}

}  // namespace

std::size_t hilbert_function_oracle(const Partition& lambda, unsigned t, std::uint64_t seed, const OracleOptions& opt) {
  const auto n = static_cast<std::size_t>(lambda.n());
  const std::uint64_t count = binomial(n + t - 1, t);
  if (count > opt.guard) throw SizeGuardError("oracle monomial count " + std::to_string(count) + " exceeds the guard");
  const auto subspaces = enumerate_subspaces(lambda);
  const auto monomials = monomials_of_degree(n, t);
  const std::uint64_t degree_seed = split_seed(seed, t);
  const auto per = ceil_div(monomials.size() + opt.margin, subspaces.size());
  const auto pts = oracle_points(subspaces, per, false, degree_seed, opt.height);
  return rank_of_points(monomials, pts, degree_seed, opt);
}

std::size_t section_hilbert_function(const Partition& lambda, unsigned t, std::uint64_t seed, const OracleOptions& opt) {
  const auto n = static_cast<std::size_t>(lambda.n());
  if (n == 1) return t == 0 ? 1 : 0;
  const std::uint64_t count = binomial(n - 2 + t, t);
  if (count > opt.guard) throw SizeGuardError("oracle monomial count " + std::to_string(count) + " exceeds the guard");
  const auto subspaces = enumerate_subspaces(lambda);
  const auto monomials = monomials_of_degree(n - 1, t);
  const std::uint64_t degree_seed = split_seed(seed, 1000 + t);
  // A section subspace has dimension m - 1, so degree-t forms restrict to a
  // space of dimension C(t+m-2, m-2) on it; a few points beyond that pin the
  // restriction down and keep the matrix short.
  const auto m = static_cast<std::uint64_t>(lambda.m());
  const std::uint64_t local = m >= 2 ? binomial(t + m - 2, m - 2) : (t == 0 ? 1 : 0);
  const auto per = std::min<std::uint64_t>(ceil_div(monomials.size() + opt.margin, subspaces.size()), local + 2);
  const auto pts = oracle_points(subspaces, per, true, degree_seed, opt.height);
  return rank_of_points(monomials, pts, degree_seed, opt);
}

RationalUniPoly interpolate_values(const std::vector<long>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolation needs one value per node");
  // Newton divided differences.
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
  RationalUniPoly out;
  RationalUniPoly basis(std::vector<Rational>{Rational(1)});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out = out + basis * dd[i];
    basis = basis * RationalUniPoly(std::vector<Rational>{Rational(-xs[i]), Rational(1)});
  }
  return out;
}

DegreeReport arrangement_degree(const Partition& lambda, std::uint64_t seed, const OracleOptions& opt) {
  if (lambda.m() < 2) throw DimensionError("degree report needs at least two parts");
  DegreeReport rep;
  rep.partition = lambda;
  rep.formula_degree = multinomial(lambda);
  rep.distinct_subspaces = count_distinct_subspaces(lambda);
  const auto e = static_cast<std::size_t>(lambda.m() - 2);  // degree of the section polynomial

  for (unsigned t = 0;; ++t) {
    try {
      rep.section_values.push_back(section_hilbert_function(lambda, t, seed, opt));
    } catch (const SizeGuardError&) {
      return rep;
    }
    const std::size_t have = rep.section_values.size();
    if (have < e + 3) continue;
    const std::size_t t0 = have - (e + 3);
    std::vector<long> xs;
    std::vector<Rational> ys;
    for (std::size_t j = t0; j <= t0 + e; ++j) {
      xs.push_back(static_cast<long>(j));
      ys.push_back(Rational(static_cast<unsigned long>(rep.section_values[j])));
    }
    const RationalUniPoly fit = interpolate_values(xs, ys);
    bool ok = true;
    for (std::size_t j = t0 + e + 1; j < have; ++j)
      ok = ok && fit.evaluate(Rational(static_cast<long>(j))) == Rational(static_cast<unsigned long>(rep.section_values[j]));
    if (!ok) continue;

    // HF(t) = Σ_{j ≤ t} HF_section(j): fit degree m - 1 on m values past t0.
    std::vector<long> tx;
    std::vector<Rational> hv;
    Rational acc(0);
    for (std::size_t j = 0; j < have; ++j) {
      acc += Rational(static_cast<unsigned long>(rep.section_values[j]));
      if (j >= t0) {
        tx.push_back(static_cast<long>(j));
        hv.push_back(acc);
      }
    }
    tx.resize(e + 2);
    hv.resize(e + 2);
    rep.hilbert = interpolate_values(tx, hv);
    rep.stable_from = static_cast<long>(t0);
    const Rational deg = rep.hilbert.leading() * Rational(static_cast<unsigned long>(factorial(static_cast<unsigned>(e + 1))));
    if (deg.is_integer() && deg.sign() > 0) rep.geometric = deg.num().get_ui();
    return rep;
  }
}

nlohmann::json to_json(const BlockAssignment& b) { return b.str(); }

nlohmann::json to_json(const HilbertPolynomial& h) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : h.poly.coeffs()) coeffs.push_back(c.str());
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : h.terms)
    terms.push_back({{"sign", t.sign}, {"subset_size", t.subset_size}, {"codim", t.codim}, {"count", t.count.get_str()}});
  return {{"text", h.str()}, {"coefficients", coeffs}, {"terms", terms}};
}

nlohmann::json to_json(const DegreeReport& r) {
  nlohmann::json hp = nlohmann::json::array();
  for (const auto& c : r.hilbert.coeffs()) hp.push_back(c.str());
  nlohmann::json out = {{"partition", r.partition.str()},
                        {"formula_degree", r.formula_degree},
                        {"distinct_subspaces", r.distinct_subspaces},
                        {"geometric_degree", r.geometric ? nlohmann::json(*r.geometric) : nlohmann::json(nullptr)},
                        {"hilbert_polynomial", to_text(r.hilbert, "t")},
                        {"hilbert_coefficients", hp},
                        {"stable_from", r.stable_from},
                        {"section_values", r.section_values}};
  return out;
}

}  // namespace eigenstrata
