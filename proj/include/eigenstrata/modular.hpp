#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "eigenstrata/matrix.hpp"

namespace eigenstrata {

/// The sixteen largest primes below 2^62. Runs pick primes from this list
/// by seed, so modular results are reproducible.
inline constexpr std::array<std::uint64_t, 16> kPrimes62 = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL, 4611686018427387761ULL,
    4611686018427387751ULL, 4611686018427387737ULL, 4611686018427387733ULL, 4611686018427387709ULL,
    4611686018427387701ULL, 4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL,
    4611686018427387461ULL, 4611686018427387421ULL, 4611686018427387409ULL, 4611686018427387329ULL};

/// `count` consecutive list entries starting at seed mod 16 (wrapping).
std::vector<std::uint64_t> primes_for_seed(std::uint64_t seed, std::size_t count, std::size_t offset = 0);

/// Arithmetic modulo a prime p < 2^63.
class ModField {
 public:
  explicit ModField(std::uint64_t p) : p_(p), inv_(1.0L / static_cast<long double>(p)) {}

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    // Quotient estimate in extended precision, then one correction step.
    auto q = static_cast<std::uint64_t>(inv_ * static_cast<long double>(a) * static_cast<long double>(b));
    auto r = static_cast<std::int64_t>(a * b - q * p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
  }
  /// Shoup's precomputed quotient floor(w·2^64 / p) for a fixed factor w.
  std::uint64_t shoup(std::uint64_t w) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(w) << 64U) / p_);
  }
  /// w·x mod p given wp = shoup(w); two word products, one correction.
  std::uint64_t mul_shoup(std::uint64_t x, std::uint64_t w, std::uint64_t wp) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(wp) * x) >> 64U);
    const std::uint64_t r = w * x - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws DivisionByZeroError on 0.
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of a rational; throws BadPrimeError if p divides the denominator.
  std::uint64_t reduce(const Rational& x) const;
  std::uint64_t reduce(const mpz_class& x) const;

 private:
  std::uint64_t p_;
  long double inv_;
};

/// Dense matrix of residues modulo a prime.
struct ModularMatrix {
  std::uint64_t modulus = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> entries;

  ModularMatrix() = default;
  ModularMatrix(std::uint64_t p, std::size_t r, std::size_t c) : modulus(p), rows(r), cols(c), entries(r * c, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

ModularMatrix reduce_mod(const ExactMatrix& m, std::uint64_t p);

struct ModularEchelon {
  std::uint64_t modulus = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::uint64_t> rref;  // pivots.size() × cols, reduced, unit pivots
};

/// In-place Gauss-Jordan modulo p. Work is O(rank · rows · cols).
ModularEchelon echelon_mod(ModularMatrix m);
std::size_t rank_mod(ModularMatrix m);

/// Nullspace basis modulo p in the same canonical (reduced echelon) form as
/// the exact nullspace; for all but finitely many p it is the image of it.
struct ModularNullspace {
  std::uint64_t modulus = 0;
  std::vector<std::size_t> pivots;  // pivot column of each basis vector
  std::vector<std::vector<std::uint64_t>> basis;
};
ModularNullspace nullspace_mod(ModularMatrix m);

struct ModularRank {
  std::size_t rank = 0;
  std::vector<std::size_t> per_prime;
  // Reduction never increases rank, so the value is always a lower bound
  // on the exact rank; it is equal for all but finitely many primes.
  bool certified_lower_bound = true;
};

/// Maximum rank over the given primes. Throws BadPrimeError when a prime
/// divides an entry denominator. Primes may be processed on `threads`
/// workers; the result does not depend on scheduling.
ModularRank rank_modular(const ExactMatrix& m, std::span<const std::uint64_t> primes, unsigned threads = 1);

/// Rational with |num|, den ≤ sqrt(M/2) congruent to the residues, where M
/// is the product of the (pairwise coprime) moduli. Throws
/// ReconstructFailError when none exists.
Rational rational_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

/// Same, for a residue already combined modulo `modulus`.
Rational rational_reconstruct(const mpz_class& residue, const mpz_class& modulus);

/// Chinese remaindering of residues into [0, M).
mpz_class crt(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

}  // namespace eigenstrata
