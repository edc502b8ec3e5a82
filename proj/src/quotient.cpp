#include "mforge/quotient.hpp"
#include <algorithm>

#include <sstream>
#include <stdexcept>

namespace mforge {

QuotientAlgebra::QuotientAlgebra(int n, int c)
    : n_(n), c_(c), ideal_(build_ideal_c(n, c)) {
  // Every standard monomial has degree < c or is squarefree (degree <= n),
  // so this cap is always sufficient; the enumeration re-verifies it.
  basis_ = standard_monomials(ideal_, std::max(n, c - 1));
  for (int k = 0; k < static_cast<int>(basis_.size()); ++k) index_.emplace(basis_[k], k);
}

int QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

IntRowVec QuotientAlgebra::coordinates(const Polynomial& p) const {
  if (p.vars() != n_) throw std::invalid_argument("coordinates: ambient variable counts differ");
  IntRowVec v = zero_vector(dim());
  for (const auto& [m, coeff] : p.terms()) {
    const int k = index_of(m);
    if (k >= 0) v(k) = coeff;
  }
  return v;
}

IntMatrix regular_rep(const QuotientAlgebra& q, int i) {
  if (i < 1 || i > q.n()) throw std::out_of_range("regular_rep: variable index out of range");
  const int d = q.dim();
  IntMatrix t = IntMatrix::Zero(d, d);
  std::vector<int> xi(q.n(), 0);
  xi[i - 1] = 1;
  const Monomial x(xi);
  for (int r = 0; r < d; ++r) {
    t(r, r) = 1;  // the "+1" in X_i + 1
    const int col = q.index_of(mono_mul(q.basis()[r], x));
    if (col >= 0) t(r, col) = 1;
  }
  return t;
}

std::vector<IntMatrix> regular_rep_family(const QuotientAlgebra& q) {
  std::vector<IntMatrix> family;
  family.reserve(q.n());
  for (int i = 1; i <= q.n(); ++i) family.push_back(regular_rep(q, i));
  return family;
}

bool verify_commuting_family(const QuotientAlgebra& q) {
  const auto family = regular_rep_family(q);
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (mat_mul(family[i], family[j]) != mat_mul(family[j], family[i])) return false;
    }
  return true;
}

std::string format_matrix(const IntMatrix& m, int n, int c, int i) {
  std::ostringstream out;
  out << m.rows() << ' ' << n << ' ' << c << ' ' << i << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      if (col > 0) out << ' ';
      out << m(r, col).get_str();
    }
    out << '\n';
  }
  return out.str();
}

MatrixCertificate parse_matrix(const std::string& text) {
  std::istringstream in(text);
  long d = 0;
  MatrixCertificate cert;
  if (!(in >> d >> cert.n >> cert.c >> cert.i) || d < 0)
    throw std::invalid_argument("parse_matrix: bad header");
  cert.matrix = IntMatrix::Zero(d, d);
  std::string token;
  for (long r = 0; r < d; ++r)
    for (long col = 0; col < d; ++col) {
      if (!(in >> token)) throw std::invalid_argument("parse_matrix: truncated matrix body");
      cert.matrix(r, col) = Int(token);
    }
  return cert;
}

}  // namespace mforge
