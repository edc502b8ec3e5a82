#include "mforge/numeric.hpp"

#include <stdexcept>

namespace mforge {

bool is_unitriangular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index d = m.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (m(i, i) != 1) return false;
    for (Eigen::Index j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  }
  return true;
}

bool is_unitriangular_01(const IntMatrix& m) {
  if (!is_unitriangular(m)) return false;
  const Eigen::Index d = m.rows();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j)
      if (m(i, j) != 0 && m(i, j) != 1) return false;
  return true;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const Eigen::Index d = m.rows();
  if (d == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < d; ++r)
        if (a(r, k) != 0) { pivot = r; break; }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < d; ++i) {
      for (Eigen::Index j = k + 1; j < d; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(d - 1, d - 1);
}

IntMatrix unitriangular_inverse(const IntMatrix& m) {
  if (!is_unitriangular(m)) throw std::invalid_argument("unitriangular_inverse: matrix is not unitriangular");
  const Eigen::Index d = m.rows();
  IntMatrix nil = m - identity_matrix(d);
  IntMatrix inv = identity_matrix(d);
  IntMatrix power = identity_matrix(d);
  for (Eigen::Index k = 1; k < d; ++k) {
    power = mat_mul(power, nil);
    if (is_zero(power)) break;
    if (k % 2 == 1)
      inv -= power;
    else
      inv += power;
  }
  return inv;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: non-square matrix");
  IntMatrix result = identity_matrix(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1UL) result = mat_mul(result, base);
    k >>= 1UL;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  IntMatrix r = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const Int& bkj = b(k, j);
        if (bkj == 0) continue;
        mpz_addmul(r(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return r;
}

IntRowVec vec_mat_mul(const IntRowVec& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat_mul: dimension mismatch");
  IntRowVec r = IntRowVec::Zero(m.cols());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const Int& vk = v(k);
    if (vk == 0) continue;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Int& mkj = m(k, j);
      if (mkj == 0) continue;
      mpz_addmul(r(j).get_mpz_t(), vk.get_mpz_t(), mkj.get_mpz_t());
    }
  }
  return r;
}

}  // namespace mforge
