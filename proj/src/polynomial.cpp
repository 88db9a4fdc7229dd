#include "eigenstrata/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

// ---------------------------------------------------------------- indexing

VariableIndexing::VariableIndexing(std::size_t n) : n_(n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      entries_.emplace_back(i, j);
      if (n < 10) {
        names_.push_back("x" + std::to_string(i) + std::to_string(j));
      } else {
        names_.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
}

std::size_t VariableIndexing::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_) throw IndexError("matrix entry out of range");
  // rows 1..i-1 contribute n, n-1, ..., n-i+2 entries
  const std::size_t before = (i - 1) * n_ - (i - 1) * (i - 2) / 2;
  return before + (j - i);
}

std::pair<std::size_t, std::size_t> VariableIndexing::entry(std::size_t pos) const { return entries_.at(pos); }

std::optional<std::size_t> VariableIndexing::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) { trim(); }

Monomial Monomial::variable(std::size_t k, std::uint16_t power) {
  std::vector<std::uint16_t> e(k + 1, 0);
  e[k] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

std::vector<int> Monomial::dense(std::size_t n) const {
  if (exps_.size() > n) throw DimensionError("monomial uses more variables than the ambient space");
  std::vector<int> out(n, 0);
  for (std::size_t k = 0; k < exps_.size(); ++k) out[k] = exps_[k];
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  if (exps_.size() > o.exps_.size()) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > o.exps_[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint16_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t k = 0; k < a.exps_.size(); ++k) e[k] = a.exps_[k];
  for (std::size_t k = 0; k < b.exps_.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + b.exps_[k]);
  Monomial m;
  m.exps_ = std::move(e);
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  std::vector<std::uint16_t> e = a.exps_;
  for (std::size_t k = 0; k < b.exps_.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] - b.exps_[k]);
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const std::size_t len = std::max(a.support_size(), b.support_size());
  for (std::size_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

namespace {

void enumerate_monomials(std::size_t var, std::size_t num_vars, unsigned left, std::vector<std::uint16_t>& cur,
                         std::vector<Monomial>& out) {
  if (var + 1 == num_vars) {
    cur[var] = static_cast<std::uint16_t>(left);
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate_monomials(var + 1, num_vars, left - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned d) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint16_t> cur(num_vars, 0);
  enumerate_monomials(0, num_vars, d, cur, out);
  return out;
}

// ---------------------------------------------------------------- polynomials

Polynomial Polynomial::zero(std::size_t num_vars) {
  Polynomial p;
  p.num_vars_ = num_vars;
  return p;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p = zero(num_vars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t k) {
  if (k >= num_vars) throw IndexError("variable index out of range");
  return monomial(num_vars, Monomial::variable(k));
}

Polynomial Polynomial::monomial(std::size_t num_vars, const Monomial& m, const Rational& c) {
  if (m.support_size() > num_vars && num_vars != 0) throw DimensionError("monomial outside the ambient space");
  Polynomial p = zero(num_vars);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  num_vars_ = std::max(num_vars_, m.support_size());
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational evaluate_monomial(const Monomial& m, std::span<const Rational> point) {
  if (m.support_size() > point.size()) throw DimensionError("point too short for monomial");
  mpq_class v = 1;
  for (std::size_t k = 0; k < m.support_size(); ++k) {
    for (unsigned e = 0; e < m[k]; ++e) v *= point[k].get();
  }
  return Rational(std::move(v));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (num_vars_ != 0 && point.size() != num_vars_) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(num_vars_));
  }
  // Cache powers per variable.
  std::vector<std::vector<mpq_class>> powers(point.size());
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) {
    if (m.support_size() > point.size()) throw DimensionError("point too short for polynomial");
    mpq_class v = c.get();
    for (std::size_t k = 0; k < m.support_size(); ++k) {
      const unsigned e = m[k];
      if (e == 0) continue;
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[k].get());
      v *= pw[e];
    }
    acc += v;
  }
  return Rational(std::move(acc));
}

Polynomial Polynomial::derivative(std::size_t k) const {
  Polynomial d = zero(num_vars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[k];
    if (e == 0) continue;
    std::vector<std::uint16_t> ex = m.exps();
    ex[k] = static_cast<std::uint16_t>(e - 1);
    d.add_term(Monomial(std::move(ex)), c * Rational(e));
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  num_vars_ = std::max(num_vars_, o.num_vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  num_vars_ = std::max(num_vars_, o.num_vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = Polynomial::zero(std::max(a.num_vars_, b.num_vars_));
  if (a.is_zero() || b.is_zero()) return r;
  // Accumulate in raw mpq to avoid re-canonicalising wrappers per term.
  std::map<Monomial, mpq_class, GrlexDescending> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      it->second += ca.get() * cb.get();
    }
  }
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.emplace_hint(r.terms_.end(), m, Rational(std::move(c)));
  }
  return r;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Polynomial q = Polynomial::zero(std::max(a.num_vars(), b.num_vars()));
  Polynomial r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational lcb_inv = b.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) throw InexactDivisionError("polynomial division is not exact");
    Monomial t = lr / lb;
    Rational c = r.leading_coefficient() * lcb_inv;
    for (const auto& [mb, cb] : b.terms()) r.add_term(t * mb, -(c * cb));
    q.add_term(t, c);
  }
  return q;
}

// ---------------------------------------------------------------- text

std::string to_text(const Polynomial& p, const VariableIndexing& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.abs();
    if (c.sign() < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    bool need_star = false;
    if (!mag.is_one() || m.degree() == 0) {
      out += mag.str();
      need_star = true;
    }
    for (std::size_t k = 0; k < m.support_size(); ++k) {
      if (m[k] == 0) continue;
      if (k >= vars.size()) throw DimensionError("monomial outside variable indexing");
      if (need_star) out += '*';
      out += vars.name(k);
      if (m[k] > 1) out += "^" + std::to_string(m[k]);
      need_star = true;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableIndexing& vars) : s_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial out = Polynomial::zero(vars_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, sign > 0 ? c : -c);
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Rational coeff(1);
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_any = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    std::vector<std::uint16_t> exps(vars_.size(), 0);
    while (peek() == 'x') {
      auto [k, e] = factor();
      exps[k] = static_cast<std::uint16_t>(exps[k] + e);
      have_any = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (!have_any) fail("expected a term");
    return {Monomial(std::move(exps)), coeff};
  }

  Rational number() {
    std::string digits = read_digits();
    if (peek() == '/') {
      get();
      std::string den = read_digits();
      if (den.empty()) fail("missing denominator");
      return Rational(mpz_class(digits), mpz_class(den));
    }
    return Rational(mpz_class(digits));
  }

  std::pair<std::size_t, unsigned> factor() {
    get();  // 'x'
    std::string name = "x";
    if (peek() == '_') {
      get();
      if (peek() == '{') {
        get();
        while (!at_end() && peek() != '}') name += get();
        if (at_end()) fail("unterminated subscript");
        get();
      } else {
        name += read_digits();
      }
    } else {
      name += read_digits();
      if (peek() == '_') {
        get();
        name += "_" + read_digits();
      }
    }
    auto k = vars_.find(name);
    if (!k) fail("unknown variable '" + name + "'");
    unsigned e = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      std::string digits;
      if (peek() == '{') {
        get();
        digits = read_digits();
        if (get() != '}') fail("unterminated exponent");
      } else {
        digits = read_digits();
      }
      if (digits.empty()) fail("missing exponent");
      e = static_cast<unsigned>(std::stoul(digits));
    }
    return {*k, e};
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const VariableIndexing& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableIndexing& vars) { return PolyParser(text, vars).parse(); }

nlohmann::json to_json(const Polynomial& p, const VariableIndexing& vars) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", c.str()}, {"exps", m.dense(vars.size())}});
  return {{"n", vars.n()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const std::size_t num_vars = n * (n + 1) / 2;
  Polynomial p = Polynomial::zero(num_vars);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != num_vars) throw DimensionError("exponent vector length mismatch");
    std::vector<std::uint16_t> e;
    for (int x : exps) {
      if (x < 0) throw ParseError("negative exponent");
      e.push_back(static_cast<std::uint16_t>(x));
    }
    p.add_term(Monomial(std::move(e)), Rational::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

std::vector<Rational> coefficient_vector(const Polynomial& p, std::span<const Monomial> basis) {
  std::vector<Rational> out(basis.size(), Rational(0));
  std::size_t found = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto it = p.terms().find(basis[k]);
    if (it != p.terms().end()) {
      out[k] = it->second;
      ++found;
    }
  }
  if (found != p.size()) throw DimensionError("polynomial has terms outside the monomial basis");
  return out;
}

}  // namespace eigenstrata
