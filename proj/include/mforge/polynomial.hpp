#pragma once

#include <map>
#include <string>
#include <vector>

#include "mforge/monomial.hpp"
#include "mforge/numeric.hpp"

namespace mforge {

/// Exact sparse multivariate polynomial over arbitrary-precision integers.
/// Canonical form: no stored coefficient is zero, so equality is term-map
/// equality. Immutable in spirit; all arithmetic returns new values.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GradedLexLess>;

  explicit Polynomial(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Polynomial: negative variable count");
  }

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, Int value);
  /// X_{i+1} for 0-based index i.
  static Polynomial variable(int n, int i);
  static Polynomial term(Monomial m, Int coeff);

  int vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int degree() const;  // -1 for the zero polynomial

  Int coeff(const Monomial& m) const;
  Int constant_term() const { return coeff(Monomial::one(n_)); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.n_ == q.n_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  /// Adds coeff * m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Int& coeff);

 private:
  int n_;
  TermMap terms_;
};

Polynomial poly_pow(const Polynomial& p, unsigned int k);

/// p with variable `var` (0-based) replaced by `value`; the remaining
/// variables keep their positions.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& value);

/// p(X_1 + 1, ..., X_n + 1). A ring isomorphism.
Polynomial shift_substitute(const Polynomial& p);

/// Exponent-action polynomial of the Malcev law of degree c,
///   f_c(X, Y) = (X - 1) * prod_{i=0}^{c-2} (X^{2^i} Y^{2^i} - 1),
/// expanded, in two variables (X at index 0, Y at index 1).
Polynomial build_f_c(int c);

/// Outcome of expanding both sides of the three displayed factorization
/// identities for f_c, together with the cofactors g_c, h_c.
struct FactorizationReport {
  bool identity_1 = false;      // f_c(X,1)  = (X-1)^c * g_c(X)
  bool identity_1bis = false;   // f_c(X,X)  = f_c(X,1) * prod (X^{2^i}+1)
  bool identity_2 = false;      // f_c(X,Y)  = (X-1)(XY-1)^{c-1} * g_c(XY)
  Polynomial g;                 // one variable embedded in two (X only)
  Polynomial h;                 // h_c(X) with f_c(X,X) = (X-1)^c h_c(X)
  Int g_at_1 = 0;
  Int h_at_1 = 0;
  bool g_unit_at_1 = false;     // g_c(1) != 0
  bool h_unit_at_1 = false;     // h_c(1) != 0

  bool all_hold() const {
    return identity_1 && identity_1bis && identity_2 && g_unit_at_1 && h_unit_at_1;
  }
};

FactorizationReport verify_f_factorizations(int c);

/// Textual term format, highest graded-lex term first, e.g.
/// "X1^2*Y1 - X1*Y1 - X1 + 1". `names` gives the display name per
/// variable; defaults to X1..Xn (and X1, Y1 for the bivariate f_c family
/// via bivariate_names()).
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

std::vector<std::string> default_names(int n);
std::vector<std::string> bivariate_names();

/// Parses the same grammar that to_string emits.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);
Polynomial parse_polynomial(const std::string& text, int n);

}  // namespace mforge
