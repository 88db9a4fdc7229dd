#include "eigenstrata/sampler.hpp"

#include <algorithm>

#include "eigenstrata/rng.hpp"
#include "eigenstrata/univariate.hpp"

namespace eigenstrata {

SkewParams SkewParams::zero(std::size_t n) { return {n, ExactVector(n * (n - 1) / 2, Rational(0))}; }

SkewParams SkewParams::random(std::size_t n, std::uint64_t seed, std::int64_t height) {
  Rng rng(seed);
  SkewParams b{n, {}};
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) b.upper.push_back(rng.rational(height));
  return b;
}

ExactMatrix SkewParams::matrix() const {
  if (upper.size() != n * (n - 1) / 2) throw DimensionError("skew parameter count must be C(n,2)");
  ExactMatrix b(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      b(i, j) = upper[k];
      b(j, i) = -upper[k];
    }
  return b;
}

void SpectrumSpec::validate() const {
  if (eigenvalues.size() != static_cast<std::size_t>(partition.m())) {
    throw DimensionError("need one eigenvalue per partition part");
  }
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j]) throw DuplicateEigenvalueError("eigenvalues must be pairwise distinct");
}

ExactVector SpectrumSpec::diagonal() const {
  ExactVector d;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (int k = 0; k < partition[i]; ++k) d.push_back(eigenvalues[i]);
  return d;
}

ExactVector ambient_coordinates(const ExactMatrix& symmetric) {
  ExactVector out;
  for (std::size_t i = 0; i < symmetric.rows(); ++i)
    for (std::size_t j = i; j < symmetric.cols(); ++j) out.push_back(symmetric(i, j));
  return out;
}

ExactMatrix symmetric_from_ambient(std::size_t n, const ExactVector& ambient) {
  if (ambient.size() != n * (n + 1) / 2) throw DimensionError("ambient vector length must be n(n+1)/2");
  ExactMatrix m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) {
      m(i, j) = ambient[k];
      m(j, i) = ambient[k];
    }
  return m;
}

SamplePoint SamplePoint::from_matrix(ExactMatrix m) {
  if (!m.is_symmetric()) throw NonSymmetricError("sample matrix must be symmetric");
  ExactVector a = ambient_coordinates(m);
  return {std::move(m), std::move(a)};
}

ExactMatrix cayley(const SkewParams& b) { return cayley_transform(b.matrix()); }

ExactMatrix orthogonal_det_minus_one(const SkewParams& b, std::pair<std::size_t, std::size_t> rows) {
  const auto [r1, r2] = rows;
  if (r1 == r2 || r1 >= b.n || r2 >= b.n) throw IndexError("row swap needs two distinct in-range rows");
  ExactMatrix q = cayley(b);
  for (std::size_t j = 0; j < b.n; ++j) std::swap(q(r1, j), q(r2, j));
  return q;
}

SamplePoint sample(const SpectrumSpec& spec, const SkewParams& b) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.partition.n());
  if (b.n != n) throw DimensionError("skew parameters and spectrum disagree on n");
  const ExactMatrix q = cayley(b);
  const ExactVector d = spec.diagonal();
  // Q·D·Qᵀ
  ExactMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * d[k] * q(j, k);
      a(i, j) = s;
      a(j, i) = s;
    }
  return SamplePoint::from_matrix(std::move(a));
}

SpectrumSpec random_spectrum(const Partition& lambda, std::uint64_t seed, std::int64_t height) {
  Rng rng(seed);
  SpectrumSpec spec{lambda, {}};
  while (spec.eigenvalues.size() < static_cast<std::size_t>(lambda.m())) {
    Rational mu = rng.rational(height);
    if (std::find(spec.eigenvalues.begin(), spec.eigenvalues.end(), mu) == spec.eigenvalues.end()) {
      spec.eigenvalues.push_back(std::move(mu));
    }
  }
  return spec;
}

std::vector<SamplePoint> random_samples(const Partition& lambda, std::size_t count, std::uint64_t seed,
                                        std::int64_t height) {
  const auto n = static_cast<std::size_t>(lambda.n());
  std::vector<SamplePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = split_seed(seed, i);
    SpectrumSpec spec = random_spectrum(lambda, split_seed(s, 0), height);
    SkewParams b = SkewParams::random(n, split_seed(s, 1), height);
    out.push_back(sample(spec, b));
  }
  return out;
}

Partition multiplicity_partition(const ExactMatrix& a) {
  if (!a.is_symmetric()) throw NonSymmetricError("matrix must be symmetric");
  return Partition(root_multiplicities(char_poly(a)));
}

bool membership_exact(const ExactMatrix& a, const Partition& lambda) {
  if (!a.is_symmetric()) throw NonSymmetricError("matrix must be symmetric");
  if (a.rows() != static_cast<std::size_t>(lambda.n())) throw SizeMismatchError("matrix size differs from n");
  return is_coarsening(multiplicity_partition(a), lambda);
}

nlohmann::json to_json(const SamplePoint& p) {
  nlohmann::json amb = nlohmann::json::array();
  for (const auto& x : p.ambient) amb.push_back(x.str());
  return {{"n", p.matrix.rows()}, {"ambient", amb}};
}

}  // namespace eigenstrata
