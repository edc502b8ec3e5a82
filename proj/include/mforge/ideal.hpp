#pragma once

#include <optional>
#include <vector>

#include "mforge/polynomial.hpp"

namespace mforge {

/// Ideal generated by monomials. Generators are minimalized on
/// construction: no generator divides another.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<Monomial> generators);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  /// True iff some generator divides m (Cox et al. divisibility criterion).
  bool contains(const Monomial& m) const;

  /// True when constructed via build_ideal_c with c below the range in
  /// which the containment lemma holds (c < 3).
  bool below_construction_range() const { return below_construction_range_; }

  /// One monomial per line, graded-lex order.
  std::string serialize() const;

 private:
  friend MonomialIdeal build_ideal_c(int n, int c);
  int n_;
  std::vector<Monomial> generators_;
  bool below_construction_range_ = false;
};

/// The monomial ideal generated by the degree-c monomials having some
/// exponent >= 2.
MonomialIdeal build_ideal_c(int n, int c);

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

/// Deletes every term whose monomial lies in the ideal. Unique normal
/// form: a monomial ideal is spanned, as a module, by the monomials it
/// contains.
Polynomial normal_form(const MonomialIdeal& ideal, const Polynomial& p);

/// All monomials outside the ideal, in graded-lex order. Throws if any
/// standard monomial survives at degree cap+1 (quotient not known finite
/// at this cap).
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree_cap);

/// All exponent vectors of total degree exactly `degree` in n variables,
/// graded-lex order. Shared enumeration primitive for the finite checks.
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// Generators of the ideal a = ((X_i - 1)^c, (X_i - 1)(X_i X_j - 1)^{c-1} : i != j).
std::vector<Polynomial> a_generators(int n, int c);

/// Generators of b = (X_i^c, X_i (X_i + X_j + X_i X_j)^{c-1} : i != j),
/// the image of `a` under the shift X_i -> X_i + 1.
std::vector<Polynomial> b_generators(int n, int c);

struct ContainmentReport {
  bool contained = true;
  // Witnesses on failure: the generator of b that escapes and one of its
  // monomials surviving normal-form reduction.
  std::optional<Polynomial> failing_generator;
  std::optional<Monomial> surviving_monomial;
};

/// Checks that every generator of b reduces to 0 modulo c(n, c).
ContainmentReport check_b_subset_c(int n, int c);

/// Checks m^{n+1} subset of c(n, c) by testing every monomial of total
/// degree exactly n+1. Sufficient: a monomial ideal is upward closed
/// under multiplication, so degree-(n+1) membership forces all of m^{n+1}.
bool check_m_power_subset(int n, int c);

/// Checks NF(((X_1+1)^e ... (X_n+1)^e - 1)^n) == e^n * n! * X_1...X_n
/// over c(n, c), and that X_1...X_n itself is outside the ideal.
bool check_congruence(int n, int c, int e);

/// Normal form of p^k with reduction interleaved after each product;
/// identical result since NF(p*q) = NF(NF(p)*q) for monomial ideals.
Polynomial nf_pow(const MonomialIdeal& ideal, const Polynomial& p, unsigned int k);

}  // namespace mforge
