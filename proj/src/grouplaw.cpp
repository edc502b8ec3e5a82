#include "mforge/grouplaw.hpp"

#include <sstream>
#include <stdexcept>

namespace mforge {

bool GroupElement::is_identity() const {
  return is_zero(a) && t == identity_matrix(t.rows());
}

MalcevPair malcev_words(int c) {
  if (c < 1) throw std::invalid_argument("malcev_words: c must be >= 1");
  Word alpha = "x", beta = "y";
  for (int k = 1; k <= c; ++k) {
    Word next_alpha = alpha + beta;
    Word next_beta = beta + alpha;
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return MalcevPair{c, std::move(alpha), std::move(beta)};
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  if (g.dim() != h.dim()) throw std::invalid_argument("group_mul: dimension mismatch");
  return GroupElement{mat_mul(g.t, h.t), IntRowVec(vec_mat_mul(g.a, h.t) + h.a)};
}

GroupElement group_inverse(const GroupElement& g) {
  IntMatrix tinv = unitriangular_inverse(g.t);
  return GroupElement{tinv, IntRowVec(-vec_mat_mul(g.a, tinv))};
}

GroupElement group_pow(const GroupElement& g, unsigned long k) {
  GroupElement result = GroupElement::identity(g.dim());
  GroupElement base = g;
  while (k > 0) {
    if (k & 1UL) result = group_mul(result, base);
    k >>= 1UL;
    if (k > 0) base = group_mul(base, base);
  }
  return result;
}

GroupElement group_conjugate(const GroupElement& g, const GroupElement& by) {
  return group_mul(group_mul(group_inverse(by), g), by);
}

GroupElement group_commutator(const GroupElement& g, const GroupElement& h) {
  return group_mul(group_mul(group_inverse(g), group_inverse(h)), group_mul(g, h));
}

GroupElement eval_word(const Word& w, const GroupElement& gx, const GroupElement& gy) {
  if (gx.dim() != gy.dim()) throw std::invalid_argument("eval_word: dimension mismatch");
  GroupElement result = GroupElement::identity(gx.dim());
  for (char letter : w) {
    switch (letter) {
      case 'x': result = group_mul(result, gx); break;
      case 'y': result = group_mul(result, gy); break;
      default: throw std::invalid_argument("eval_word: letter outside {x, y}");
    }
  }
  return result;
}

bool check_malcev(int c, const GroupElement& gx, const GroupElement& gy) {
  const MalcevPair words = malcev_words(c);
  return eval_word(words.alpha, gx, gy) == eval_word(words.beta, gx, gy);
}

IntMatrix endo_eval(const Polynomial& p, const IntMatrix& t, const std::optional<IntMatrix>& u) {
  if (p.vars() > 2) throw std::invalid_argument("endo_eval: polynomial has more than two variables");
  if (p.vars() == 2 && !u) {
    // Second variable must not actually occur.
    for (const auto& [m, c] : p.terms())
      if (m.exponents[1] != 0)
        throw std::invalid_argument("endo_eval: second variable used but no matrix given");
  }
  const Eigen::Index d = t.rows();
  if (u) {
    if (u->rows() != d || u->cols() != t.cols())
      throw std::invalid_argument("endo_eval: dimension mismatch");
    IntMatrix tu = mat_mul(t, *u);
    IntMatrix ut = mat_mul(*u, t);
    if (tu != ut) throw std::invalid_argument("endo_eval: matrices do not commute");
  }
  std::vector<IntMatrix> t_powers{identity_matrix(d)};
  std::vector<IntMatrix> u_powers{identity_matrix(d)};
  auto power = [](std::vector<IntMatrix>& cache, const IntMatrix& base, int e) -> const IntMatrix& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mat_mul(cache.back(), base));
    return cache[e];
  };
  IntMatrix result = IntMatrix::Zero(d, d);
  for (const auto& [m, coeff] : p.terms()) {
    const IntMatrix* term = &power(t_powers, t, m.exponents[0]);
    IntMatrix scratch;
    if (p.vars() == 2 && m.exponents[1] > 0) {
      scratch = mat_mul(*term, power(u_powers, *u, m.exponents[1]));
      term = &scratch;
    }
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        mpz_addmul(result(i, j).get_mpz_t(), coeff.get_mpz_t(), (*term)(i, j).get_mpz_t());
  }
  return result;
}

bool lemma_identity_check(int c, const IntMatrix& t, const IntMatrix& u,
                          const IntRowVec& a, const IntRowVec& b) {
  if (mat_mul(t, u) != mat_mul(u, t))
    throw std::invalid_argument("lemma_identity_check: matrices do not commute");
  const bool direct = check_malcev(c, GroupElement{t, a}, GroupElement{u, b});
  const Polynomial f = build_f_c(c);
  IntRowVec lhs = vec_mat_mul(a, endo_eval(f, u, t));
  IntRowVec rhs = vec_mat_mul(b, endo_eval(f, t, u));
  const bool endo = (lhs == rhs);
  return direct == endo;
}

namespace {

// Products of commuting nilpotents depend only on the multiset of
// factors; recurse over non-decreasing index sequences, pruning once a
// prefix product vanishes.
bool all_products_vanish(const std::vector<IntMatrix>& nil, const IntMatrix& prefix,
                         size_t min_index, int remaining) {
  if (remaining == 0) return is_zero(prefix);
  for (size_t i = min_index; i < nil.size(); ++i) {
    IntMatrix next = mat_mul(prefix, nil[i]);
    if (is_zero(next)) continue;
    if (!all_products_vanish(nil, next, i, remaining - 1)) return false;
  }
  return true;
}

}  // namespace

int nilpotency_class(const std::vector<IntMatrix>& family, int d) {
  if (family.empty()) return 1;
  std::vector<IntMatrix> nil;
  nil.reserve(family.size());
  for (const auto& t : family) nil.push_back(IntMatrix(t - identity_matrix(t.rows())));
  for (int k = 1; k <= d; ++k)
    if (all_products_vanish(nil, identity_matrix(nil.front().rows()), 0, k)) return k;
  return d;
}

bool injectivity_probe(const Polynomial& p, const IntMatrix& t) {
  if (p.vars() < 1) throw std::invalid_argument("injectivity_probe: constant ambient ring");
  return determinant(endo_eval(p, t)) != 0;
}

std::string format_vector(const IntRowVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += v(i).get_str();
  }
  return s;
}

IntRowVec parse_vector(const std::string& line) {
  std::istringstream in(line);
  std::vector<Int> entries;
  std::string token;
  while (in >> token) entries.emplace_back(token);
  IntRowVec v(static_cast<Eigen::Index>(entries.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = entries[i];
  return v;
}

}  // namespace mforge
