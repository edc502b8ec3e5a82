#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace mforge {

/// Exact arbitrary-precision integer scalar used throughout.
using Int = mpz_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
// Row-vector convention: vectors multiply matrices on the right.
using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

inline IntMatrix identity_matrix(Eigen::Index d) {
  return IntMatrix::Identity(d, d);
}

inline IntRowVec zero_vector(Eigen::Index d) { return IntRowVec::Zero(d); }

inline bool is_zero(const IntMatrix& m) { return m.isZero(0); }
inline bool is_zero(const IntRowVec& v) { return v.isZero(0); }

/// Upper triangular, unit diagonal, and every entry in {0,1}.
bool is_unitriangular_01(const IntMatrix& m);

/// Upper triangular with unit diagonal (entries otherwise unrestricted).
bool is_unitriangular(const IntMatrix& m);

/// Exact determinant via fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m);

/// Inverse of a unitriangular matrix, computed over the integers
/// from the finite Neumann series of the nilpotent part.
IntMatrix unitriangular_inverse(const IntMatrix& m);

/// m^k by binary exponentiation, k >= 0.
IntMatrix matrix_power(const IntMatrix& m, unsigned long k);

/// a * b with fused multiply-add on the GMP limbs and zero-entry
/// skipping; much faster than the generic coefficient path for the
/// sparse unitriangular matrices used here.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// v * m, row-vector times matrix, same fused kernel.
IntRowVec vec_mat_mul(const IntRowVec& v, const IntMatrix& m);

}  // namespace mforge
