#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "eigenstrata/polynomial.hpp"
#include "eigenstrata/strata.hpp"

namespace eigenstrata {

/// Limits on basis size and on n for the invariant computations.
struct InvariantOptions {
  std::size_t guard = 5000;
  std::size_t max_n = 8;
  std::size_t margin = 20;
  std::int64_t height = 10;
};

/// Monomial symmetric polynomial m_μ in n variables (μ padded with zeros).
Polynomial monomial_symmetric(const Partition& mu, std::size_t n);

/// Dimension of the degree-d symmetric polynomials in n variables that
/// vanish on the diagonal arrangement of λ. Throws SizeGuardError.
std::size_t sn_invariant_dim(const Partition& lambda, unsigned d, std::uint64_t seed, const InvariantOptions& opt = {});

/// tr(Aᵏ) for the symbolic symmetric n×n matrix, in the x_ij variables.
Polynomial power_trace(std::size_t n, unsigned k);

/// Products p_{k1}···p_{kr} (k_i ≤ n, Σk_i = d) that, in combination,
/// vanish on V(λ): a basis of that span as polynomials in the x_ij.
std::vector<Polynomial> son_invariant_basis(const Partition& lambda, unsigned d, std::uint64_t seed,
                                            const InvariantOptions& opt = {});

/// Dimension of the span of degree-d power-trace products vanishing on
/// V(λ). Throws SizeGuardError.
std::size_t son_invariant_dim(const Partition& lambda, unsigned d, std::uint64_t seed, const InvariantOptions& opt = {});

struct GradedDimensionTable {
  struct Row {
    unsigned degree = 0;
    std::size_t sn = 0;
    std::size_t son = 0;
    bool match = false;
  };
  Partition partition;
  std::uint64_t seed = 0;
  std::vector<Row> rows;

  bool all_match() const;
  /// Aligned table, one row per degree.
  std::string text() const;
};

GradedDimensionTable chevalley_check(const Partition& lambda, unsigned dmax, std::uint64_t seed,
                                     const InvariantOptions& opt = {});

nlohmann::json to_json(const GradedDimensionTable& t);

}  // namespace eigenstrata
