#include "eigenstrata/modular.hpp"

#include <thread>

namespace eigenstrata {

std::vector<std::uint64_t> primes_for_seed(std::uint64_t seed, std::size_t count, std::size_t offset) {
  if (count > kPrimes62.size()) throw SizeGuardError("at most 16 primes available");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(kPrimes62[(seed + offset + i) % kPrimes62.size()]);
  return out;
}

std::uint64_t ModField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t ModField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DivisionByZeroError("inverse of zero residue");
  return pow(a, p_ - 2);
}

std::uint64_t ModField::reduce(const mpz_class& x) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
  return r.get_ui();
}

std::uint64_t ModField::reduce(const Rational& x) const {
  if (x.is_integer()) return reduce(x.get().get_num());
  std::uint64_t d = reduce(x.get().get_den());
  if (d == 0) throw BadPrimeError("prime " + std::to_string(p_) + " divides a denominator");
  return mul(reduce(x.get().get_num()), inv(d));
}

ModularMatrix reduce_mod(const ExactMatrix& m, std::uint64_t p) {
  ModField f(p);
  ModularMatrix out(p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = f.reduce(m(i, j));
  return out;
}

namespace {

// Forward elimination; returns pivot columns. Pivot rows end up in the
// first rank rows, scaled to a unit pivot.
std::vector<std::size_t> forward_mod(ModularMatrix& m) {
  ModField f(m.modulus);
  std::vector<std::size_t> pivots;
  const std::size_t cols = m.cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    std::uint64_t* pr = &m.entries[piv * cols];
    if (piv != r) {
      std::uint64_t* rr = &m.entries[r * cols];
      for (std::size_t j = c; j < cols; ++j) std::swap(pr[j], rr[j]);
      pr = rr;
    }
    const std::uint64_t inv = f.inv(pr[c]);
    for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint64_t* ri = &m.entries[i * cols];
      const std::uint64_t lead = ri[c];
      if (lead == 0) continue;
      ri[c] = 0;
      const std::uint64_t lp = f.shoup(lead);
      for (std::size_t j = c + 1; j < cols; ++j) ri[j] = f.sub(ri[j], f.mul_shoup(pr[j], lead, lp));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod(ModularMatrix m) { return forward_mod(m).size(); }

namespace {

// Gauss-Jordan tail: clears the entries above every pivot.
void back_reduce(ModularEchelon& e) {
  ModField f(e.modulus);
  const std::size_t cols = e.cols;
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t c = e.pivots[k];
    const std::uint64_t* pk = &e.rref[k * cols];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t* ri = &e.rref[i * cols];
      const std::uint64_t lead = ri[c];
      if (lead == 0) continue;
      const std::uint64_t lp = f.shoup(lead);
      for (std::size_t j = c; j < cols; ++j) ri[j] = f.sub(ri[j], f.mul_shoup(pk[j], lead, lp));
    }
  }
}

ModularEchelon forward_echelon(ModularMatrix& m) {
  ModularEchelon out;
  out.modulus = m.modulus;
  out.cols = m.cols;
  out.pivots = forward_mod(m);
  out.rref.assign(m.entries.begin(), m.entries.begin() + static_cast<std::ptrdiff_t>(out.pivots.size() * m.cols));
  return out;
}

}  // namespace

ModularEchelon echelon_mod(ModularMatrix m) {
  ModularEchelon out = forward_echelon(m);
  back_reduce(out);
  return out;
}

ModularNullspace nullspace_mod(ModularMatrix m) {
  ModField f(m.modulus);
  ModularEchelon e = forward_echelon(m);
  const std::size_t cols = e.cols;
  if (e.pivots.size() == cols) return {e.modulus, {}, {}};
  back_reduce(e);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  ModularMatrix basis(e.modulus, 0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis.entries.resize(basis.entries.size() + cols, 0);
    std::uint64_t* v = &basis.entries[basis.rows * cols];
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = f.neg(e.rref[k * cols + free]);
    ++basis.rows;
  }
  const ModularEchelon canon = echelon_mod(std::move(basis));
  ModularNullspace out;
  out.modulus = e.modulus;
  out.pivots = canon.pivots;
  for (std::size_t k = 0; k < canon.pivots.size(); ++k) {
    out.basis.emplace_back(canon.rref.begin() + static_cast<std::ptrdiff_t>(k * cols),
                           canon.rref.begin() + static_cast<std::ptrdiff_t>((k + 1) * cols));
  }
  return out;
}

ModularRank rank_modular(const ExactMatrix& m, std::span<const std::uint64_t> primes, unsigned threads) {
  // Reduce serially so a BadPrimeError surfaces deterministically.
  std::vector<ModularMatrix> images;
  images.reserve(primes.size());
  for (std::uint64_t p : primes) images.push_back(reduce_mod(m, p));

  ModularRank out;
  out.per_prime.assign(primes.size(), 0);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < images.size(); ++i) out.per_prime[i] = rank_mod(std::move(images[i]));
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < images.size(); i += workers) out.per_prime[i] = rank_mod(std::move(images[i]));
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t r : out.per_prime) out.rank = std::max(out.rank, r);
  return out;
}

mpz_class crt(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) throw DimensionError("crt: residue/modulus count mismatch");
  mpz_class x = residues[0] % moduli[0];
  mpz_class m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    mpz_class mi = moduli[i];
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
    if (g != 1) throw ReconstructFailError("crt: moduli are not coprime");
    // x' = x + m·((r_i - x)·m^{-1} mod m_i)
    mpz_class diff = mpz_class(residues[i]) - x;
    mpz_class k = diff * s;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), mi.get_mpz_t());
    x += m * k;
    m *= mi;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  return x;
}

Rational rational_reconstruct(const mpz_class& residue, const mpz_class& modulus) {
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  mpz_class r0 = modulus;
  mpz_class r1 = residue;
  mpz_fdiv_r(r1.get_mpz_t(), r1.get_mpz_t(), modulus.get_mpz_t());
  mpz_class s0 = 0;
  mpz_class s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (abs(s1) > bound || s1 == 0) throw ReconstructFailError("no rational within the reconstruction bound");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw ReconstructFailError("reconstructed denominator not invertible");
  Rational out(r1, s1);
  // Re-reduce: num ≡ den·residue (mod M).
  mpz_class check = out.num() - out.den() * residue;
  mpz_fdiv_r(check.get_mpz_t(), check.get_mpz_t(), modulus.get_mpz_t());
  if (check != 0) throw ReconstructFailError("reconstruction failed re-reduction");
  return out;
}

Rational rational_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  mpz_class m = 1;
  for (std::uint64_t p : moduli) m *= p;
  return rational_reconstruct(crt(residues, moduli), m);
}

}  // namespace eigenstrata
