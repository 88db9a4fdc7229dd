#include "eigenstrata/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParseError("partition needs at least one part");
  for (int p : parts_) {
    if (p <= 0) throw ParseError("partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("malformed partition '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    if (used != cur.size()) throw ParseError("malformed partition '" + std::string(text) + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return Partition(std::move(parts));
}

bool Partition::distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void gen_partitions(int left, int max_part, int max_count, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_count == 0) return;
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(left - p, p, max_count - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_with_at_most(n, n); }

std::vector<Partition> partitions_with_at_most(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n <= 0) return out;
  gen_partitions(n, n, max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions_with_parts_at_most(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n <= 0) return out;
  gen_partitions(n, max_part, n, cur, out);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw SizeGuardError("factorial overflows 64 bits beyond 20");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

int dimension(const Partition& lambda) {
  const int n = lambda.n();
  int d = lambda.m() + n * (n - 1) / 2;
  for (int p : lambda.parts()) d -= p * (p - 1) / 2;
  return d;
}

int codimension(const Partition& lambda) { return ambient_dimension(lambda.n()) - dimension(lambda); }

std::uint64_t multinomial(const Partition& lambda) {
  std::uint64_t r = factorial(static_cast<unsigned>(lambda.n()));
  for (int p : lambda.parts()) r /= factorial(static_cast<unsigned>(p));
  return r;
}

std::uint64_t repeated_part_symmetry(const Partition& lambda) {
  std::map<int, unsigned> mult;
  for (int p : lambda.parts()) ++mult[p];
  std::uint64_t r = 1;
  for (const auto& [size, count] : mult) r *= factorial(count);
  return r;
}

std::uint64_t count_distinct_subspaces(const Partition& lambda) {
  return multinomial(lambda) / repeated_part_symmetry(lambda);
}

bool is_coarsening(const Partition& mu, const Partition& lambda) {
  if (mu.n() != lambda.n()) throw SizeMismatchError("partitions of different n");
  if (lambda.n() > 12) throw SizeGuardError("coarsening search limited to n ≤ 12");
  std::vector<int> room = mu.parts();
  const auto& parts = lambda.parts();
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == parts.size()) return true;
    std::set<int> tried;  // bins with equal room are interchangeable
    for (int& r : room) {
      if (r < parts[i] || !tried.insert(r).second) continue;
      r -= parts[i];
      const bool ok = place(i + 1);
      r += parts[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace eigenstrata
