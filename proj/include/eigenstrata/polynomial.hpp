#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eigenstrata/rational.hpp"

namespace eigenstrata {

/// Names and positions of the entries x_ij (i ≤ j) of a symmetric n×n matrix,
/// ordered row-major over the upper triangle. Names are "x{i}{j}" (1-based),
/// e.g. x11, x12, ..., x44, matching the usual way generator lists are written.
/// For n ≥ 10 the names become "x{i}_{j}".
class VariableIndexing {
 public:
  explicit VariableIndexing(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return names_.size(); }
  /// Position of x_ij; (i, j) are 1-based and may be given in either order.
  std::size_t index(std::size_t i, std::size_t j) const;
  /// 1-based (i, j) with i ≤ j.
  std::pair<std::size_t, std::size_t> entry(std::size_t pos) const;
  const std::string& name(std::size_t pos) const { return names_.at(pos); }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, std::size_t>> entries_;
};

/// Exponent vector with trailing zeros trimmed, so monomials in different
/// ambient sizes compare consistently.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exps);
  static Monomial variable(std::size_t k, std::uint16_t power = 1);

  unsigned degree() const { return degree_; }
  std::uint16_t operator[](std::size_t k) const { return k < exps_.size() ? exps_[k] : 0; }
  std::size_t support_size() const { return exps_.size(); }
  const std::vector<std::uint16_t>& exps() const { return exps_; }
  /// Exponents padded to length n.
  std::vector<int> dense(std::size_t n) const;

  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; caller checks b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void trim();
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic: total degree first, then the earlier variable
/// carrying the larger exponent wins.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// All monomials of total degree exactly d in N variables, in descending
/// graded-lex order (x1^d first). There are C(N+d-1, d) of them.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned d);

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// descending graded-lex order and zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  template <std::integral I>
  Polynomial(I c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial(), Rational(c));
  }
  static Polynomial zero(std::size_t num_vars);
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t k);
  static Polynomial monomial(std::size_t num_vars, const Monomial& m, const Rational& c = Rational(1));

  /// Ambient variable count; 0 means "unspecified" (pure constants).
  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c);

  /// Exact value; throws DimensionError unless point.size() == num_vars()
  /// (any length is accepted when num_vars() is 0).
  Rational evaluate(std::span<const Rational> point) const;
  Polynomial derivative(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// a / b when b divides a; throws InexactDivisionError otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Value of a monomial at a point; powers are recomputed per call.
Rational evaluate_monomial(const Monomial& m, std::span<const Rational> point);

/// Text form: signed sum of terms in descending graded-lex order, e.g.
/// "-x12*x34+x13*x24", "4*x13^2", "1/2*x11-3".
std::string to_text(const Polynomial& p, const VariableIndexing& vars);

/// Parses the text form. Also accepts TeX-style factors (x_{11}, x_{12}^2,
/// juxtaposition without '*'), so published generator lists can be read
/// verbatim. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const VariableIndexing& vars);

/// { "n": int, "terms": [ { "coeff": "p/q", "exps": [int, ...] } ] }
nlohmann::json to_json(const Polynomial& p, const VariableIndexing& vars);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Coefficients of p on the given monomial list (monomials outside the
/// list must not occur; throws DimensionError otherwise).
std::vector<Rational> coefficient_vector(const Polynomial& p, std::span<const Monomial> basis);

}  // namespace eigenstrata
