#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eigenstrata/matrix.hpp"
#include "eigenstrata/strata.hpp"

namespace eigenstrata {

/// Strictly upper triangular entries of a skew-symmetric B, row-major.
struct SkewParams {
  std::size_t n = 0;
  ExactVector upper;  // C(n,2) entries

  static SkewParams zero(std::size_t n);
  static SkewParams random(std::size_t n, std::uint64_t seed, std::int64_t height);
  ExactMatrix matrix() const;
};

/// Eigenvalues μ₁..μ_m placed with multiplicities λ₁..λ_m along the diagonal.
struct SpectrumSpec {
  Partition partition;
  ExactVector eigenvalues;

  /// Throws DimensionError (count mismatch) or DuplicateEigenvalueError.
  void validate() const;
  ExactVector diagonal() const;
};

/// Exact symmetric matrix with its upper-triangle coordinates in
/// VariableIndexing order.
struct SamplePoint {
  ExactMatrix matrix;
  ExactVector ambient;

  static SamplePoint from_matrix(ExactMatrix m);
};

ExactVector ambient_coordinates(const ExactMatrix& symmetric);
ExactMatrix symmetric_from_ambient(std::size_t n, const ExactVector& ambient);

/// Q = (I - B)(I + B)⁻¹ for any skew-symmetric B (over a field T).
/// I + B is invertible for real skew B, Q is orthogonal with det 1.
template <class T>
Matrix<T> cayley_transform(const Matrix<T>& b) {
  const std::size_t n = b.rows();
  const Matrix<T> id = Matrix<T>::identity(n);
  return (id - b) * inverse(id + b);
}

ExactMatrix cayley(const SkewParams& b);

/// Cayley image with rows i and j (0-based) swapped: orthogonal, det -1.
/// Throws IndexError.
ExactMatrix orthogonal_det_minus_one(const SkewParams& b, std::pair<std::size_t, std::size_t> rows);

/// Q·Diag(λ)·Qᵀ with Q = cayley(B). Equal to the two-sided product
/// (I-B)(I+B)⁻¹ Diag (I+B)(I-B)⁻¹ since Q⁻¹ = Qᵀ.
SamplePoint sample(const SpectrumSpec& spec, const SkewParams& b);

/// Deterministic exact samples: point i draws distinct eigenvalues and skew
/// entries of height ≤ `height` from stream i of `seed`.
std::vector<SamplePoint> random_samples(const Partition& lambda, std::size_t count, std::uint64_t seed,
                                        std::int64_t height = 10);

/// Distinct height-bounded eigenvalues for λ, drawn from `seed`.
SpectrumSpec random_spectrum(const Partition& lambda, std::uint64_t seed, std::int64_t height = 10);

/// Multiplicity partition of the eigenvalues of symmetric A, from the
/// square-free chain of its characteristic polynomial.
Partition multiplicity_partition(const ExactMatrix& a);

/// A lies on the closure of the λ stratum iff its multiplicity partition
/// coarsens λ. Throws NonSymmetricError.
bool membership_exact(const ExactMatrix& a, const Partition& lambda);

/// { "n": int, "ambient": ["p/q", ...] }
nlohmann::json to_json(const SamplePoint& p);

}  // namespace eigenstrata
