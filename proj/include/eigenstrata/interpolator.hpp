#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "eigenstrata/modular.hpp"
#include "eigenstrata/polynomial.hpp"
#include "eigenstrata/sampler.hpp"
#include "eigenstrata/strata.hpp"

namespace eigenstrata {

enum class ArithmeticMode { Auto, Exact, Modular };

std::string to_string(ArithmeticMode m);
/// "auto" | "exact" | "modular"; throws ParseError.
ArithmeticMode parse_mode(std::string_view s);

struct InterpolationOptions {
  ArithmeticMode mode = ArithmeticMode::Auto;
  /// Auto switches to modular above this many monomial columns.
  std::size_t modular_threshold = 200;
  std::size_t prime_count = 3;
  std::int64_t height = 10;
  /// Extra rows beyond the monomial count.
  std::size_t sample_margin = 20;
  std::size_t verify_count = 20;
  unsigned threads = 1;
};

struct InterpolationReport {
  Partition partition;
  unsigned degree = 0;
  std::size_t monomial_count = 0;
  std::size_t sample_count = 0;
  std::size_t nullspace_dim = 0;
  std::vector<Polynomial> basis;
  ArithmeticMode mode = ArithmeticMode::Exact;  // Exact or Modular, never Auto
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;             // modular only
  std::vector<std::size_t> nullity_per_prime;    // modular only
  std::size_t attempts = 1;
};

/// Basis of the degree-d homogeneous forms vanishing on the λ stratum,
/// from the nullspace of the (samples × monomials) evaluation matrix.
///
/// Every basis polynomial is re-verified by exact evaluation on fresh
/// samples. On a verification or reconstruction failure the computation
/// is repeated once with new samples and primes; a second failure raises
/// VerificationFailError.
InterpolationReport vanishing_forms(const Partition& lambda, unsigned d, std::uint64_t seed,
                                    const InterpolationOptions& options = {});

/// True iff both lists span the same space of coefficient vectors.
/// Throws MixedDegreeError unless every polynomial is homogeneous of one
/// common degree (zero polynomials are ignored).
bool span_equals(std::span<const Polynomial> a, std::span<const Polynomial> b);

/// Rank of the Jacobian of `basis` at p. Throws NotOnVarietyError if some
/// basis element does not vanish at p.
std::size_t jacobian_codim(std::span<const Polynomial> basis, const SamplePoint& p);

/// Exact rank of the differential of (μ, B) ↦ Q(B)·Diag·Q(B)ᵀ at a random
/// parameter point, computed with one jet evaluation per parameter.
std::size_t parametrization_rank(const Partition& lambda, std::uint64_t seed, std::int64_t height = 10);

/// Evaluation matrix rows = points, cols = monomials.
ExactMatrix evaluation_matrix(std::span<const Monomial> monomials, std::span<const ExactVector> points);

/// The same matrix reduced modulo p; throws BadPrimeError.
ModularMatrix modular_evaluation_matrix(std::span<const Monomial> monomials, std::span<const ExactVector> points,
                                        std::uint64_t p);

nlohmann::json to_json(const InterpolationReport& r);

}  // namespace eigenstrata
