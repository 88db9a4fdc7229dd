#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eigenstrata {

/// Integer partition λ₁ ≥ λ₂ ≥ … ≥ λ_m ≥ 1 of n. Constructors sort and
/// validate, so equal multisets compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError on a nonpositive part or an empty list.
  explicit Partition(std::vector<int> parts);
  /// Comma list, e.g. "2,1,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  bool distinct_parts() const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// Partitions of n with at most `max_parts` parts / with parts ≤ `max_part`.
std::vector<Partition> partitions_with_at_most(int n, int max_parts);
std::vector<Partition> partitions_with_parts_at_most(int n, int max_part);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(unsigned n);

/// Ambient dimension n(n+1)/2 of symmetric n×n matrices.
inline int ambient_dimension(int n) { return n * (n + 1) / 2; }

/// m + C(n,2) - Σ C(λᵢ,2).
int dimension(const Partition& lambda);
int codimension(const Partition& lambda);

/// n! / Π λᵢ!  (ordered assignments of eigenvalue blocks to coordinates).
std::uint64_t multinomial(const Partition& lambda);

/// Number of set partitions of {1..n} with block sizes λ: the multinomial
/// divided by (multiplicity of s)! for every repeated part size s.
std::uint64_t count_distinct_subspaces(const Partition& lambda);

/// Π over distinct part sizes of (multiplicity)!.
std::uint64_t repeated_part_symmetry(const Partition& lambda);

/// True iff the parts of λ can be grouped so the group sums are exactly the
/// parts of μ. Exhaustive search; throws SizeMismatchError if n differs
/// and SizeGuardError for n > 12.
bool is_coarsening(const Partition& mu, const Partition& lambda);

}  // namespace eigenstrata
