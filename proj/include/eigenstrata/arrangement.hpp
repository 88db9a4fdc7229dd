#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eigenstrata/rational.hpp"
#include "eigenstrata/strata.hpp"
#include "eigenstrata/univariate.hpp"

namespace eigenstrata {

/// Set partition of {1..n}; one maximal subspace of the diagonal
/// arrangement (coordinates in a block are equal). Canonical form: each
/// block sorted, blocks sorted by their minimum element.
class BlockAssignment {
 public:
  BlockAssignment() = default;
  /// Throws DimensionError unless the blocks partition {1..n}.
  explicit BlockAssignment(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int n() const { return n_; }
  /// Block sizes, descending.
  Partition shape() const;
  /// Block index of each coordinate (0-based coordinates).
  std::vector<std::size_t> labels() const;
  /// "12|3", or "1,2|3" once n ≥ 10.
  std::string str() const;

  /// Point whose coordinates in block b all equal values[b].
  ExactVector point(const ExactVector& values) const;

  friend bool operator==(const BlockAssignment& a, const BlockAssignment& b) { return a.blocks_ == b.blocks_; }
  friend bool operator<(const BlockAssignment& a, const BlockAssignment& b) { return a.blocks_ < b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

/// All distinct set partitions of {1..n} with block sizes λ, sorted.
/// Throws SizeGuardError for n > 12.
std::vector<BlockAssignment> enumerate_subspaces(const Partition& lambda);

/// Polynomial in t with the inclusion-exclusion terms that produced it.
struct HilbertPolynomial {
  struct Term {
    int sign = 1;
    std::size_t subset_size = 0;  // |S|
    int codim = 0;                // c_S
    mpz_class count;              // number of subsets S with this (|S|, c_S)
  };

  RationalUniPoly poly;
  std::vector<Term> terms;

  int degree() const { return poly.degree(); }
  Rational evaluate(long t) const { return poly.evaluate(Rational(t)); }
  std::string str() const;
};

/// C(t + a, a) as a polynomial in t.
RationalUniPoly binomial_in_t(int a);

/// Σ over nonempty S with c_S < n of (-1)^{|S|+1} C(t+n-1-c_S, n-1-c_S),
/// c_S = Σ_{i∈S} c_i. Subsets are counted by (size, codim) rather than
/// listed, so large arrangements are fine.
HilbertPolynomial derksen_hilbert(const std::vector<int>& codims, int n);

/// Closed form with k = multinomial(λ) subspaces of codim n - m.
/// Throws DegenerateError when m = n.
HilbertPolynomial paper_hilbert(const Partition& lambda);

/// Sizes and arithmetic switches for the evaluation-rank oracle.
struct OracleOptions {
  std::size_t guard = 5000;
  std::size_t margin = 20;
  std::int64_t height = 10;
  std::size_t modular_threshold = 200;
  std::size_t prime_count = 3;
  unsigned threads = 1;
};

/// Rank of the evaluation matrix of all degree-t monomials at random exact
/// points spread over the subspaces: the Hilbert function of the reduced
/// arrangement in degree t. Throws SizeGuardError past the guard.
std::size_t hilbert_function_oracle(const Partition& lambda, unsigned t, std::uint64_t seed,
                                    const OracleOptions& opt = {});

/// Same for the section of the arrangement by x_n = 0, a subspace
/// arrangement in n - 1 coordinates. Every subspace contains the all-ones
/// vector, so the arrangement is a cone over this section and
/// HF(t) = Σ_{j ≤ t} HF_section(j).
std::size_t section_hilbert_function(const Partition& lambda, unsigned t, std::uint64_t seed,
                                     const OracleOptions& opt = {});

/// Unique polynomial of degree < xs.size() through the given points.
RationalUniPoly interpolate_values(const std::vector<long>& xs, const std::vector<Rational>& ys);

struct DegreeReport {
  Partition partition;
  std::uint64_t formula_degree = 0;          // multinomial(λ)
  std::uint64_t distinct_subspaces = 0;
  std::optional<std::uint64_t> geometric;  // empty if the oracle never stabilized
  /// Hilbert polynomial of the arrangement rebuilt from the section oracle,
  /// valid from `stable_from` on.
  RationalUniPoly hilbert;
  long stable_from = -1;
  std::vector<std::size_t> section_values;  // HF_section(0), HF_section(1), ...
};

/// Both degrees side by side. The geometric one is read off the Hilbert
/// polynomial found by scanning the section oracle until a fitted
/// polynomial of degree m - 2 is confirmed on two further degrees.
/// Throws DimensionError when m < 2.
DegreeReport arrangement_degree(const Partition& lambda, std::uint64_t seed, const OracleOptions& opt = {});

nlohmann::json to_json(const BlockAssignment& b);
nlohmann::json to_json(const HilbertPolynomial& h);
nlohmann::json to_json(const DegreeReport& r);

}  // namespace eigenstrata
