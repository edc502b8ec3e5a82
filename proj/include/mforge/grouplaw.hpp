#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mforge/polynomial.hpp"
#include "mforge/numeric.hpp"

namespace mforge {

/// Element t*a of the semidirect product B x| A: unitriangular integer
/// matrix part t, integer row vector a written additively.
struct GroupElement {
  IntMatrix t;
  IntRowVec a;

  int dim() const { return static_cast<int>(a.size()); }

  static GroupElement identity(int d) {
    return GroupElement{identity_matrix(d), zero_vector(d)};
  }

  bool is_identity() const;

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return g.t == h.t && g.a == h.a;
  }
  friend bool operator!=(const GroupElement& g, const GroupElement& h) { return !(g == h); }
};

/// Positive word over the alphabet {x, y}.
using Word = std::string;

/// The pair (alpha_c, beta_c) defining the Malcev law M_c(x, y).
/// alpha_0 = x, beta_0 = y, alpha_c = alpha_{c-1} beta_{c-1},
/// beta_c = beta_{c-1} alpha_{c-1}. Both words have length 2^c.
struct MalcevPair {
  int c;
  Word alpha;
  Word beta;
};

MalcevPair malcev_words(int c);

/// (t,a)(u,b) = (t u, a u + b): the vector moves by the right action of u.
GroupElement group_mul(const GroupElement& g, const GroupElement& h);

/// (t,a)^{-1} = (t^{-1}, -a t^{-1}).
GroupElement group_inverse(const GroupElement& g);

GroupElement group_pow(const GroupElement& g, unsigned long k);

GroupElement group_conjugate(const GroupElement& g, const GroupElement& by);

GroupElement group_commutator(const GroupElement& g, const GroupElement& h);

/// Left-to-right product substituting gx for x and gy for y.
GroupElement eval_word(const Word& w, const GroupElement& gx, const GroupElement& gy);

/// True iff alpha_c and beta_c evaluate equally on (gx, gy).
bool check_malcev(int c, const GroupElement& gx, const GroupElement& gy);

/// Substitutes t for the first variable and u for the second in a
/// polynomial with at most two variables; constants become scalar
/// multiples of the identity. Matrices must commute when both appear.
IntMatrix endo_eval(const Polynomial& p, const IntMatrix& t,
                    const std::optional<IntMatrix>& u = std::nullopt);

/// Checks that the direct word evaluation of M_c on (t a, u b) agrees
/// with the endomorphism criterion a f_c(u,t) == b f_c(t,u). Returns
/// whether the two criteria agree (they must). Requires t u == u t.
bool lemma_identity_check(int c, const IntMatrix& t, const IntMatrix& u,
                          const IntRowVec& a, const IntRowVec& b);

/// Nilpotency class of B x| Z^d for the commuting unitriangular family:
/// the smallest k such that every product of k factors from
/// {t_1 - 1, ..., t_n - 1} vanishes. Capped by d.
int nilpotency_class(const std::vector<IntMatrix>& family, int d);

/// det p(t) != 0 for a one-variable polynomial p and unipotent t; for
/// unipotent t this equals p(1)^d, certifying that p(t) is injective.
bool injectivity_probe(const Polynomial& p, const IntMatrix& t);

/// Space-separated decimal entries on one line.
std::string format_vector(const IntRowVec& v);
IntRowVec parse_vector(const std::string& line);

}  // namespace mforge
