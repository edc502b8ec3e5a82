#include "mforge/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace mforge {

namespace {

void require_same_vars(const Polynomial& p, const Polynomial& q) {
  if (p.vars() != q.vars())
    throw std::invalid_argument("polynomial: ambient variable counts differ");
}

}  // namespace

Polynomial Polynomial::constant(int n, Int value) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), value);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("Polynomial::variable: index out of range");
  std::vector<int> e(n, 0);
  e[i] = 1;
  Polynomial p(n);
  p.add_term(Monomial(std::move(e)), 1);
  return p;
}

Polynomial Polynomial::term(Monomial m, Int coeff) {
  Polynomial p(m.vars());
  p.add_term(m, coeff);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

Int Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& coeff) {
  if (m.vars() != n_) throw std::invalid_argument("Polynomial::add_term: wrong variable count");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_vars(p, q);
  Polynomial r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_vars(p, q);
  Polynomial r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_vars(p, q);
  Polynomial r(p.vars());
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mono_mul(mp, mq), cp * cq);
  return r;
}

Polynomial poly_pow(const Polynomial& p, unsigned int k) {
  Polynomial result = Polynomial::constant(p.vars(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& value) {
  if (var < 0 || var >= p.vars()) throw std::invalid_argument("substitute: variable index out of range");
  if (value.vars() != p.vars()) throw std::invalid_argument("substitute: ambient variable counts differ");
  std::vector<Polynomial> powers{Polynomial::constant(p.vars(), 1)};
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponents[var];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.exponents[var] = 0;
    r = r + Polynomial::term(rest, c) * powers[e];
  }
  return r;
}

Polynomial shift_substitute(const Polynomial& p) {
  const int n = p.vars();
  Polynomial r(n);
  for (const auto& [m, c] : p.terms()) {
    // Expand c * prod_i (X_i + 1)^{e_i} with binomial coefficients.
    Polynomial t = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      const int e = m.exponents[i];
      if (e == 0) continue;
      Polynomial binom(n);
      for (int j = 0; j <= e; ++j) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), e, j);
        std::vector<int> me(n, 0);
        me[i] = j;
        binom.add_term(Monomial(std::move(me)), b);
      }
      t = t * binom;
    }
    r = r + t;
  }
  return r;
}

Polynomial build_f_c(int c) {
  if (c < 1) throw std::invalid_argument("build_f_c: c must be >= 1");
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial one = Polynomial::constant(2, 1);
  Polynomial f = x - one;
  for (int i = 0; i <= c - 2; ++i) {
    const unsigned int e = 1U << i;
    f = f * (poly_pow(x, e) * poly_pow(y, e) - one);
  }
  return f;
}

namespace {

/// 1 + Z + ... + Z^{k-1} for a monomial Z (here X, or XY).
Polynomial geometric_sum(const Polynomial& z, unsigned int k) {
  Polynomial s = Polynomial::zero(z.vars());
  Polynomial zp = Polynomial::constant(z.vars(), 1);
  for (unsigned int j = 0; j < k; ++j) {
    s = s + zp;
    zp = zp * z;
  }
  return s;
}

Int eval_at_one(const Polynomial& p) {
  Int s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

}  // namespace

FactorizationReport verify_f_factorizations(int c) {
  if (c < 1) throw std::invalid_argument("verify_f_factorizations: c must be >= 1");
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial one = Polynomial::constant(2, 1);
  const Polynomial xy = x * y;

  const Polynomial f = build_f_c(c);
  const Polynomial f_x1 = substitute(f, 1, one);  // f_c(X, 1)
  const Polynomial f_xx = substitute(f, 1, x);    // f_c(X, X)

  // g_c(X) = prod_{i=1}^{c-2} (X^{2^i - 1} + ... + X + 1); empty product for c <= 2.
  Polynomial g = Polynomial::constant(2, 1);
  for (int i = 1; i <= c - 2; ++i) g = g * geometric_sum(x, 1U << i);
  Polynomial g_of_xy = Polynomial::constant(2, 1);
  for (int i = 1; i <= c - 2; ++i) g_of_xy = g_of_xy * geometric_sum(xy, 1U << i);

  // prod_{i=0}^{c-2} (X^{2^i} + 1), the cofactor linking f_c(X,X) to f_c(X,1).
  Polynomial doubling = Polynomial::constant(2, 1);
  for (int i = 0; i <= c - 2; ++i) doubling = doubling * (poly_pow(x, 1U << i) + one);

  FactorizationReport report{.g = g, .h = g * doubling};
  report.identity_1 = (f_x1 == poly_pow(x - one, static_cast<unsigned int>(c)) * g);
  report.identity_1bis = (f_xx == f_x1 * doubling);
  report.identity_2 =
      (f == (x - one) * poly_pow(xy - one, static_cast<unsigned int>(c - 1)) * g_of_xy);
  report.g_at_1 = eval_at_one(report.g);
  report.h_at_1 = eval_at_one(report.h);
  report.g_unit_at_1 = (report.g_at_1 != 0);
  report.h_unit_at_1 = (report.h_at_1 != 0);
  return report;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

std::vector<std::string> bivariate_names() { return {"X1", "Y1"}; }

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != m.vars())
    throw std::invalid_argument("to_string: name list does not match variable count");
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.vars(); ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  // Highest graded-lex term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = (c < 0);
    Int abs_c = negative ? Int(-c) : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const std::string mono = to_string(m, names);
    if (abs_c != 1 || mono == "1") {
      s += abs_c.get_str();
      if (mono != "1") s += "*";
    }
    if (mono != "1") s += mono;
  }
  return s;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_names(p.vars())); }

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& names;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_polynomial: " + what + " at position " + std::to_string(pos));
  }

  int match_name() {
    // Longest match wins, so X12 is not read as X1 followed by junk.
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i].size() > best_len && text.compare(pos, names[i].size(), names[i]) == 0) {
        best = i;
        best_len = names[i].size();
      }
    if (best >= 0) pos += best_len;
    return best;
  }

  Int parse_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  }

  int parse_exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      Int e = parse_integer();
      if (e < 0 || e > 1000000) fail("exponent out of range");
      return static_cast<int>(e.get_si());
    }
    return 1;
  }

  // term := [integer] factor ('*' factor)* | integer
  void parse_term(Polynomial& acc, int sign) {
    skip_ws();
    Int coeff = 1;
    std::vector<int> exps(names.size(), 0);
    bool saw_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_integer();
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        acc.add_term(Monomial(std::move(exps)), sign * coeff);
        return;
      }
    }
    while (true) {
      skip_ws();
      int v = match_name();
      if (v < 0) fail("expected variable name");
      exps[v] += parse_exponent();
      saw_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*')
        ++pos;
      else
        break;
    }
    if (!saw_factor) fail("empty term");
    acc.add_term(Monomial(std::move(exps)), sign * coeff);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  Parser parser{text, names};
  Polynomial acc(static_cast<int>(names.size()));
  parser.skip_ws();
  if (parser.eof()) throw std::invalid_argument("parse_polynomial: empty input");
  // "0" is the zero polynomial; add_term drops it.
  int sign = 1;
  if (parser.text[parser.pos] == '-') {
    sign = -1;
    ++parser.pos;
  } else if (parser.text[parser.pos] == '+') {
    ++parser.pos;
  }
  parser.parse_term(acc, sign);
  while (!parser.eof()) {
    char op = parser.text[parser.pos];
    if (op != '+' && op != '-') parser.fail("expected '+' or '-'");
    ++parser.pos;
    parser.parse_term(acc, op == '-' ? -1 : 1);
  }
  return acc;
}

Polynomial parse_polynomial(const std::string& text, int n) {
  return parse_polynomial(text, default_names(n));
}

}  // namespace mforge
