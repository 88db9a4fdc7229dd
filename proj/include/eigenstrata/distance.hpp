#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "eigenstrata/arrangement.hpp"
#include "eigenstrata/matrix.hpp"

namespace eigenstrata {

/// Orthogonal projection of u onto one subspace of the arrangement.
struct CriticalPoint {
  BlockAssignment subspace;
  ExactVector point;
  Rational squared_distance;
};

struct FloatCriticalPoint {
  BlockAssignment subspace;
  std::vector<double> point;
  double squared_distance = 0;
};

/// Block means replace the coordinates of each block.
CriticalPoint project(const ExactVector& u, const BlockAssignment& s);
FloatCriticalPoint project(std::span<const double> u, const BlockAssignment& s);

/// ⟨u - point, 1_B⟩ for every block B; all zero for a true critical point.
ExactVector orthogonality_residuals(const ExactVector& u, const CriticalPoint& p);
std::vector<double> orthogonality_residuals(std::span<const double> u, const FloatCriticalPoint& p);

struct CriticalSet {
  std::vector<CriticalPoint> points;  // ascending distance, ties in subspace order
  std::size_t minimizers = 0;         // points sharing the smallest distance
  bool tie = false;                   // some distance value occurs twice
};

/// One critical point per distinct subspace. Throws DimensionError.
CriticalSet critical_points(const ExactVector& u, const Partition& lambda);
std::vector<FloatCriticalPoint> critical_points(std::span<const double> u, const Partition& lambda);

struct EddReport {
  Partition partition;
  std::uint64_t formula_edd = 0;        // multinomial(λ)
  std::uint64_t subspace_count = 0;   // distinct subspaces
  std::uint64_t real_critical = 0;    // critical points at the sampled u
  ExactVector u;
  bool generic = false;               // the sampled u has pairwise distinct distances
};

/// u is drawn from `seed`, redrawn (up to 16 times) until all critical
/// distances differ.
EddReport edd_report(const Partition& lambda, std::uint64_t seed);

/// Symmetric matrix of doubles, upper triangle stored row-major.
class FloatSymmetric {
 public:
  FloatSymmetric() = default;
  explicit FloatSymmetric(std::size_t n) : n_(n), upper_(n * (n + 1) / 2, 0.0) {}
  /// Throws DimensionError when upper.size() != n(n+1)/2.
  FloatSymmetric(std::size_t n, std::vector<double> upper);
  static FloatSymmetric from_dense(const Matrix<double>& m);

  std::size_t n() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { upper_[index(i, j)] = v; }
  const std::vector<double>& upper() const { return upper_; }
  Matrix<double> dense() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t n_ = 0;
  std::vector<double> upper_;
};

/// { "n": int, "upper": [floats...] }; throws ParseError / DimensionError.
FloatSymmetric float_symmetric_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FloatSymmetric& m);

double frobenius_distance(const FloatSymmetric& a, const FloatSymmetric& b);

struct Eigensystem {
  std::vector<double> values;  // ascending
  Matrix<double> vectors;      // column k belongs to values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
/// tol·max(1, ‖A‖_F); throws NonConvergenceError after max_sweeps.
Eigensystem jacobi_eigen(const FloatSymmetric& a, double tol = 1e-12, int max_sweeps = 100);

struct NearestResult {
  FloatSymmetric matrix;
  double squared_distance = 0;     // ‖U - matrix‖_F², measured directly
  double diagonal_squared = 0;     // grouping cost on the sorted eigenvalues
  std::vector<double> eigenvalues;
  BlockAssignment grouping;        // over 1-based indices of sorted eigenvalues
  bool contiguous = true;          // optimal blocks are runs in sorted order
  bool tie = false;                // another grouping reaches the same cost
  bool degenerate = false;         // two eigenvalues of U closer than gap_tol
  bool exhaustive = true;          // all groupings searched (n ≤ 10)
};

/// Closest matrix with eigenvalue multiplicities coarsening λ.
NearestResult nearest_symmetric(const FloatSymmetric& u, const Partition& lambda, double gap_tol = 1e-9);

/// Q·diag(values)·Qᵀ.
FloatSymmetric conjugate_diagonal(const Matrix<double>& q, std::span<const double> values);

/// Float Cayley transform of the skew matrix with the given upper entries.
Matrix<double> cayley_float(std::size_t n, std::span<const double> upper);

nlohmann::json to_json(const CriticalPoint& p);
nlohmann::json to_json(const CriticalSet& s);
nlohmann::json to_json(const EddReport& r);
nlohmann::json to_json(const NearestResult& r);

}  // namespace eigenstrata
