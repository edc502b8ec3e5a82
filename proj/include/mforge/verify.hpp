#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mforge/grouplaw.hpp"
#include "mforge/quotient.hpp"

namespace mforge {

/// Deterministic splitmix64-based generator; all randomized checks draw
/// from an explicit seed so certificates are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Failure witness for M_n on the coset (t_1...t_n)^e A_n: a pair of
/// vectors with the two evaluated sides of the law.
struct MalcevFailureWitness {
  int e = 0;
  IntRowVec a;
  IntRowVec b;
  GroupElement alpha_value;
  GroupElement beta_value;
};

struct GnCertificate {
  int c = 0;
  int n = 0;
  int d = 0;
  std::vector<int> e_list;
  std::uint64_t seed = 0;
  std::vector<IntMatrix> matrices;  // t_1..t_n
  std::vector<CheckResult> checks;
  std::optional<MalcevFailureWitness> witness;
  bool valid = false;
  std::string failing_stage;  // empty when valid

  const CheckResult* find_check(const std::string& name) const;
};

struct BuildOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  int bound = 9;  // random vector entries drawn from [-bound, bound]
};

/// Full construction and verification pipeline for G_n = B_n x| A_n.
GnCertificate build_Gn(int c, int n, const std::vector<int>& e_list,
                       const BuildOptions& options = {});

struct MalcevOnTReport {
  bool exhaustive_pass = false;  // f_c(t,u) = 0 for all t,u in {1, t_1..t_n}
  bool randomized_pass = false;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<GroupElement, GroupElement>> counterexample;
};

/// Exhaustive endomorphism criterion (a complete proof that T_n
/// satisfies M_c) plus seeded random sampling of coset pairs as an
/// independent oracle.
MalcevOnTReport malcev_on_T(const GnCertificate& cert, int trials, std::uint64_t seed,
                            int bound = 9);

/// Deterministic witness: t = (t_1...t_n)^e, F = f_n(t, t); the first
/// standard-basis vector with a F != 0 becomes a, b = 0, and the two
/// sides of M_n are evaluated directly to confirm they differ.
MalcevFailureWitness find_Mn_failure_witness(const GnCertificate& cert, int e);

/// Finitely supported element of the restricted direct product of the
/// groups G_n; components not in the map are the identity.
struct RestrictedProductElement {
  std::map<int, GroupElement> components;
};

RestrictedProductElement product_mul(const RestrictedProductElement& g,
                                     const RestrictedProductElement& h);

struct ClosureReport {
  bool membership_pass = false;
  bool normality_pass = false;
  bool commutator_closure_pass = false;
  bool cross_component_pass = false;
  int samples = 0;

  bool all_pass() const {
    return membership_pass && normality_pass && commutator_closure_pass && cross_component_pass;
  }
};

/// Membership, normality, commutator closure of T_n, and commuting of
/// cross-component elements in the restricted product.
ClosureReport T_membership_and_closure_check(const std::vector<GnCertificate>& certs,
                                             int samples, std::uint64_t seed, int bound = 9);

/// (t, a) lies in T_n iff the matrix part is the identity or one of the t_i.
bool in_T(const GnCertificate& cert, const GroupElement& g);

/// Smallest k such that g has nontrivial image in the finite p-group of
/// pairs (matrix mod p^k, vector mod p^k). Requires g != identity.
int separate_in_p_quotient(const GroupElement& g, long p);

/// Random element of G_n: matrix part a product of small powers of the
/// t_i, vector entries in [-bound, bound].
GroupElement random_group_element(const GnCertificate& cert, Rng& rng, int bound);

/// Random element of T_n: coset representative in {1, t_1..t_n}, random vector.
GroupElement random_T_element(const GnCertificate& cert, Rng& rng, int bound);

/// Fixed-schema JSON certificate; byte-stable for fixed inputs.
std::string certificate_to_json(const GnCertificate& cert);

}  // namespace mforge
