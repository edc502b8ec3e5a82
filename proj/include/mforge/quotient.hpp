#pragma once

#include <map>

#include "mforge/ideal.hpp"
#include "mforge/numeric.hpp"

namespace mforge {

/// The finite-dimensional algebra Q[X_1..X_n]/c(n,c) with its ordered
/// standard-monomial basis. Basis position 0 is the constant monomial.
class QuotientAlgebra {
 public:
  QuotientAlgebra(int n, int c);

  int n() const { return n_; }
  int c() const { return c_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const MonomialIdeal& ideal() const { return ideal_; }

  /// Basis position of a standard monomial; -1 if the monomial is in the ideal.
  int index_of(const Monomial& m) const;

  /// Coordinate row vector of NF(p) in the basis.
  IntRowVec coordinates(const Polynomial& p) const;

 private:
  int n_, c_;
  MonomialIdeal ideal_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int, GradedLexLess> index_;
};

inline QuotientAlgebra build_quotient(int n, int c) { return QuotientAlgebra(n, c); }

/// Matrix of multiplication by X_i + 1 on the quotient, row-vector
/// convention, for 1-based variable index i. Upper unitriangular with
/// entries in {0,1}.
IntMatrix regular_rep(const QuotientAlgebra& q, int i);

/// All generator matrices t_1..t_n.
std::vector<IntMatrix> regular_rep_family(const QuotientAlgebra& q);

/// t_i t_j == t_j t_i for every pair, exact.
bool verify_commuting_family(const QuotientAlgebra& q);

/// Matrix certificate text: header "d n c i", then d rows of d integers.
std::string format_matrix(const IntMatrix& m, int n, int c, int i);

struct MatrixCertificate {
  IntMatrix matrix;
  int n = 0, c = 0, i = 0;
};

MatrixCertificate parse_matrix(const std::string& text);

}  // namespace mforge
