#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace mforge {

/// Exponent vector over n named variables. Index i-1 holds the exponent
/// of variable X_i. No coefficient, no sign.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {
    for (int x : exponents)
      if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

  int vars() const { return static_cast<int>(exponents.size()); }

  int degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  bool is_one() const { return degree() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
};

inline void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("monomial: ambient variable counts differ");
}

/// Componentwise exponent comparison.
inline bool mono_divides(const Monomial& d, const Monomial& m) {
  require_same_vars(d, m);
  for (int i = 0; i < d.vars(); ++i)
    if (d.exponents[i] > m.exponents[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  Monomial r = a;
  for (int i = 0; i < b.vars(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

/// Graded lexicographic order: total degree first, then lexicographic on
/// the exponent vector. Canonical order for bases and term iteration;
/// display walks it in reverse (highest term first).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  }
};

}  // namespace mforge
