#include "eigenstrata/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigenstrata/rng.hpp"

namespace eigenstrata {

namespace {

void check_length(std::size_t len, const BlockAssignment& s) {
  if (len != static_cast<std::size_t>(s.n())) throw DimensionError("point length must equal n");
}

}  // namespace

CriticalPoint project(const ExactVector& u, const BlockAssignment& s) {
  check_length(u.size(), s);
  CriticalPoint out{s, ExactVector(u.size()), Rational(0)};
  for (const auto& b : s.blocks()) {
    Rational mean(0);
    for (int i : b) mean += u[static_cast<std::size_t>(i - 1)];
    mean = mean / Rational(static_cast<long>(b.size()));
    for (int i : b) {
      const Rational diff = u[static_cast<std::size_t>(i - 1)] - mean;
      out.squared_distance += diff * diff;
      out.point[static_cast<std::size_t>(i - 1)] = mean;
    }
  }
  return out;
}

FloatCriticalPoint project(std::span<const double> u, const BlockAssignment& s) {
  check_length(u.size(), s);
  FloatCriticalPoint out{s, std::vector<double>(u.size()), 0.0};
  for (const auto& b : s.blocks()) {
    double mean = 0;
    for (int i : b) mean += u[static_cast<std::size_t>(i - 1)];
    mean /= static_cast<double>(b.size());
    for (int i : b) {
      const double diff = u[static_cast<std::size_t>(i - 1)] - mean;
      out.squared_distance += diff * diff;
      out.point[static_cast<std::size_t>(i - 1)] = mean;
    }
  }
  return out;
}

ExactVector orthogonality_residuals(const ExactVector& u, const CriticalPoint& p) {
  ExactVector out;
  for (const auto& b : p.subspace.blocks()) {
    Rational s(0);
    for (int i : b) s += u[static_cast<std::size_t>(i - 1)] - p.point[static_cast<std::size_t>(i - 1)];
    out.push_back(s);
  }
  return out;
}

std::vector<double> orthogonality_residuals(std::span<const double> u, const FloatCriticalPoint& p) {
  std::vector<double> out;
  for (const auto& b : p.subspace.blocks()) {
    double s = 0;
    for (int i : b) s += u[static_cast<std::size_t>(i - 1)] - p.point[static_cast<std::size_t>(i - 1)];
    out.push_back(s);
  }
  return out;
}

CriticalSet critical_points(const ExactVector& u, const Partition& lambda) {
  if (u.size() != static_cast<std::size_t>(lambda.n())) throw DimensionError("point length must equal n");
  CriticalSet out;
  for (const auto& s : enumerate_subspaces(lambda)) out.points.push_back(project(u, s));
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const CriticalPoint& a, const CriticalPoint& b) { return a.squared_distance < b.squared_distance; });
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (out.points[i].squared_distance == out.points.front().squared_distance) ++out.minimizers;
    if (i > 0 && out.points[i].squared_distance == out.points[i - 1].squared_distance) out.tie = true;
  }
  return out;
}

std::vector<FloatCriticalPoint> critical_points(std::span<const double> u, const Partition& lambda) {
  if (u.size() != static_cast<std::size_t>(lambda.n())) throw DimensionError("point length must equal n");
  std::vector<FloatCriticalPoint> out;
  for (const auto& s : enumerate_subspaces(lambda)) out.push_back(project(u, s));
  std::stable_sort(out.begin(), out.end(), [](const FloatCriticalPoint& a, const FloatCriticalPoint& b) {
    return a.squared_distance < b.squared_distance;
  });
  return out;
}

EddReport edd_report(const Partition& lambda, std::uint64_t seed) {
  EddReport rep;
  rep.partition = lambda;
  rep.formula_edd = multinomial(lambda);
  rep.subspace_count = count_distinct_subspaces(lambda);
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(split_seed(seed, attempt));
    rep.u.clear();
    for (int i = 0; i < lambda.n(); ++i) rep.u.push_back(rng.rational(100));
    const CriticalSet cs = critical_points(rep.u, lambda);
    rep.real_critical = cs.points.size();
    rep.generic = !cs.tie;
    if (rep.generic) break;
  }
  return rep;
}

FloatSymmetric::FloatSymmetric(std::size_t n, std::vector<double> upper) : n_(n), upper_(std::move(upper)) {
  if (upper_.size() != n * (n + 1) / 2) throw DimensionError("upper triangle needs n(n+1)/2 entries");
}

std::size_t FloatSymmetric::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= n_) throw IndexError("matrix index out of range");
  // Rows before i contribute n, n-1, ..., n-i+1 entries.
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

FloatSymmetric FloatSymmetric::from_dense(const Matrix<double>& m) {
  if (m.rows() != m.cols()) throw NonSquareError("matrix must be square");
  FloatSymmetric out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return out;
}

Matrix<double> FloatSymmetric::dense() const {
  Matrix<double> m(n_, n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

FloatSymmetric float_symmetric_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("upper")) throw ParseError("expected {\"n\", \"upper\"}");
  if (!j["n"].is_number_integer() || !j["upper"].is_array()) throw ParseError("bad matrix JSON types");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1) throw ParseError("n must be positive");
  std::vector<double> upper;
  for (const auto& v : j["upper"]) {
    if (!v.is_number()) throw ParseError("upper entries must be numbers");
    upper.push_back(v.get<double>());
  }
  return {static_cast<std::size_t>(n), std::move(upper)};
}

nlohmann::json to_json(const FloatSymmetric& m) { return {{"n", m.n()}, {"upper", m.upper()}}; }

double frobenius_distance(const FloatSymmetric& a, const FloatSymmetric& b) {
  if (a.n() != b.n()) throw SizeMismatchError("matrices differ in size");
  double s = 0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i; j < a.n(); ++j) {
      const double d = a(i, j) - b(i, j);
      s += (i == j ? 1.0 : 2.0) * d * d;
    }
  return std::sqrt(s);
}

Eigensystem jacobi_eigen(const FloatSymmetric& sym, double tol, int max_sweeps) {
  const std::size_t n = sym.n();
  Matrix<double> a = sym.dense();
  Matrix<double> v = Matrix<double>::identity(n);
  double norm = 0;
  for (double x : a.data()) norm += x * x;
  const double threshold = tol * std::max(1.0, std::sqrt(norm));
  auto off = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (off() >= threshold) {
    if (sweeps == max_sweeps) throw NonConvergenceError("Jacobi iteration did not converge");
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  Eigensystem out{{}, Matrix<double>(n, n, 0.0), sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

FloatSymmetric conjugate_diagonal(const Matrix<double>& q, std::span<const double> values) {
  const std::size_t n = q.rows();
  FloatSymmetric out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * values[k] * q(j, k);
      out.set(i, j, s);
    }
  return out;
}

Matrix<double> cayley_float(std::size_t n, std::span<const double> upper) {
  if (upper.size() != n * (n - 1) / 2) throw DimensionError("skew parameter count must be C(n,2)");
  Matrix<double> b(n, n, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      b(i, j) = upper[k];
      b(j, i) = -upper[k];
    }
  const Matrix<double> id = Matrix<double>::identity(n);
  return (id - b) * inverse(id + b);
}

namespace {

double grouping_cost(const BlockAssignment& g, const std::vector<double>& d) {
  return project(std::span<const double>(d), g).squared_distance;
}

bool is_contiguous(const BlockAssignment& g) {
  for (const auto& b : g.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] != b[i - 1] + 1) return false;
  return true;
}

// Contiguous groupings: every distinct ordering of the block sizes laid out
// along the sorted eigenvalues.
std::vector<BlockAssignment> contiguous_groupings(const Partition& lambda) {
  std::vector<int> sizes = lambda.parts();
  std::sort(sizes.begin(), sizes.end());
  std::vector<BlockAssignment> out;
  do {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int s : sizes) {
      std::vector<int> b;
      for (int i = 0; i < s; ++i) b.push_back(next++);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(std::move(blocks));
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

NearestResult nearest_symmetric(const FloatSymmetric& u, const Partition& lambda, double gap_tol) {
  if (u.n() != static_cast<std::size_t>(lambda.n())) throw SizeMismatchError("matrix size differs from n");
  const Eigensystem eig = jacobi_eigen(u);
  NearestResult out;
  out.eigenvalues = eig.values;
  double scale = 1.0;
  for (double x : eig.values) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 1; i < eig.values.size(); ++i)
    if (eig.values[i] - eig.values[i - 1] < gap_tol * scale) out.degenerate = true;

  out.exhaustive = lambda.n() <= 10;
  const std::vector<BlockAssignment> candidates =
      out.exhaustive ? enumerate_subspaces(lambda) : contiguous_groupings(lambda);
  double best = INFINITY;
  for (const auto& g : candidates) {
    const double c = grouping_cost(g, eig.values);
    if (out.grouping.n() == 0 || c < best - 1e-12 * std::max(1.0, best)) {
      best = c;
      out.grouping = g;
      out.tie = false;
    } else if (std::abs(c - best) <= 1e-12 * std::max(1.0, best)) {
      out.tie = true;
    }
  }
  out.contiguous = is_contiguous(out.grouping);
  out.diagonal_squared = best;
  const FloatCriticalPoint target = project(std::span<const double>(eig.values), out.grouping);
  out.matrix = conjugate_diagonal(eig.vectors, target.point);
  const double dist = frobenius_distance(u, out.matrix);
  out.squared_distance = dist * dist;
  return out;
}

nlohmann::json to_json(const CriticalPoint& p) {
  nlohmann::json pt = nlohmann::json::array();
  for (const auto& x : p.point) pt.push_back(x.str());
  return {{"subspace", p.subspace.str()}, {"point", pt}, {"squared_distance", p.squared_distance.str()}};
}

nlohmann::json to_json(const CriticalSet& s) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  return {{"points", pts}, {"minimizers", s.minimizers}, {"tie", s.tie}};
}

nlohmann::json to_json(const EddReport& r) {
  nlohmann::json u = nlohmann::json::array();
  for (const auto& x : r.u) u.push_back(x.str());
  return {{"partition", r.partition.str()},
          {"formula_edd", r.formula_edd},
          {"subspace_count", r.subspace_count},
          {"real_critical_count", r.real_critical},
          {"generic", r.generic},
          {"u", u}};
}

nlohmann::json to_json(const NearestResult& r) {
  return {{"matrix", to_json(r.matrix)},
          {"squared_distance", r.squared_distance},
          {"distance", std::sqrt(r.squared_distance)},
          {"diagonal_squared_distance", r.diagonal_squared},
          {"eigenvalues", r.eigenvalues},
          {"grouping", r.grouping.str()},
          {"contiguous", r.contiguous},
          {"tie", r.tie},
          {"degenerate", r.degenerate},
          {"exhaustive", r.exhaustive}};
}

}  // namespace eigenstrata
